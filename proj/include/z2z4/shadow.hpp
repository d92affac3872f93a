#pragma once

/*
 * Coset structure of Type 0 codes.  With C_0 the even-weight subcode,
 * C_0-perp is the union of four cosets C_{i,j} = C_0 + i*t + j*s where
 * s = (1^alpha | 2^beta) and t is an odd-weight codeword; C = C_{0,0} u C_{1,0}
 * and the shadow is C_0-perp \ C = C_{0,1} u C_{1,1}.
 */

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "z2z4/code.hpp"

namespace z2z4 {

struct ShadowDecomposition {
  std::vector<MixedVector> c00;
  std::vector<MixedVector> c10;
  std::vector<MixedVector> c01;
  std::vector<MixedVector> c11;
  MixedVector s;
  MixedVector t;

  /* Cosets in the order c00, c10, c01, c11. */
  std::array<const std::vector<MixedVector>*, 4> cosets() const { return {&c00, &c10, &c01, &c11}; }
};

/* C_0-perp \ C, sorted.  Empty for Type I and II codes; throws unless self-dual. */
std::vector<MixedVector> shadow(const AdditiveCode& code);

/* s = (1^alpha | 2^beta), t = least odd-weight codeword.  Throws unless Type 0. */
ShadowDecomposition decompose(const AdditiveCode& code);

/* Entry (a, b): the inner product of any vector of coset a with any of coset b, cosets ordered as cosets(). */
using OrthogonalityTable = std::array<std::array<std::uint8_t, 4>, 4>;

inline constexpr OrthogonalityTable kOrthogonalityRelations = {{
    {0, 0, 0, 0},
    {0, 0, 2, 2},
    {0, 2, 0, 2},
    {0, 2, 2, 0},
}};

/* Checks every pair; throws std::logic_error when a pairing is not constant. */
OrthogonalityTable orthogonality_table(const ShadowDecomposition& d);

enum class GlueVariant { Matched, Crossed };

struct GlueResult {
  AdditiveCode code;
  GlueVariant variant = GlueVariant::Matched;
};

/*
 * Glues two Type 0 codes along their coset structures:
 *   matched  (C00,D00) u (C10,D10) u (C01,D01) u (C11,D11)
 *   crossed  (C00,D00) u (C10,D10) u (C01,D11) u (C11,D01)
 * The matched union is tried first; the first one that is a self-dual code wins.
 */
GlueResult glue(const AdditiveCode& c, const AdditiveCode& d, std::size_t max_length = kDefaultMaxLength);

/*
 * C00 u C01 = <C, s> and C00 u C11 = <C, s + t>, both self-dual neighbors of
 * the Type 0 code.  The first has only even weights.  The second keeps the
 * odd-weight vectors of C11 and is Type 0 again.
 */
std::pair<AdditiveCode, AdditiveCode> non_type0_neighbors(const AdditiveCode& code);

}  // namespace z2z4
