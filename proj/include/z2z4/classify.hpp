#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2z4/code.hpp"

namespace z2z4 {

enum class SelfDualClass { NotSelfDual, Type0, TypeI, TypeII };

/* "Type 0", "Type I", "Type II", "not self-dual" */
std::string to_string(SelfDualClass cls);
/* Accepts "0", "I", "II", "Type0", "TypeI", "TypeII" (case-insensitive). */
SelfDualClass parse_class(const std::string& text);

/*
 * Type 0: self-dual with an odd-weight codeword.  Type I: all weights even,
 * some not divisible by 4.  Type II: all weights divisible by 4.
 */
SelfDualClass classify(const AdditiveCode& code);

struct AdmissibilityQuery {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  SelfDualClass cls = SelfDualClass::TypeI;
  std::optional<bool> separable;
};

/*
 * Whether a self-dual code of the requested class (and separability, when
 * given) exists in Z2^alpha x Z4^beta.  For alpha, beta > 0:
 *
 *   Type 0                 alpha = 2 + 2a, beta = 2 + b
 *   Type I separable       alpha = 2 + 2a, beta = 1 + b
 *   Type I non-separable   alpha = 4 + 2a, beta = 4 + b
 *   Type II                alpha = 8 + 8a, beta = 4 + 4b
 *
 * When alpha or beta is zero every code is trivially separable and only the
 * parity conditions on alpha and alpha + 2*beta apply; Type 0 is impossible
 * there.  Type 0 with separable = true throws PreconditionError.
 */
bool admissible(const AdmissibilityQuery& query);

struct StructureReport {
  SelfDualClass cls = SelfDualClass::NotSelfDual;
  bool separable = false;
  bool antipodal = false;
  std::size_t delta = 0;
  bool antipodal_iff_even = false;           // antipodal <=> Type I or II
  bool separable_implies_antipodal = false;
  bool non_separable_implies_unit = false;   // non-separable => delta >= 1
  /*
   * For non-separable codes: codewords (v,w), (v',w') with <v,v'>_2 = 1 and
   * <w,w'>_4 = 2.
   */
  std::optional<std::pair<MixedVector, MixedVector>> witness;

  bool consistent() const noexcept {
    return antipodal_iff_even && separable_implies_antipodal && non_separable_implies_unit &&
           (separable || witness.has_value());
  }
};

/* Evaluates the separability/antipodality relations on a self-dual code. */
StructureReport check_structure_relations(const AdditiveCode& code);

/*
 * Seven statements about a self-dual code that hold together or fail
 * together: C_X self-orthogonal, C_X self-dual, |C_X| = 2^kappa,
 * C_Y self-orthogonal, C_Y self-dual, |C_Y| = 2^beta, C separable.
 */
struct SeparabilityPredicates {
  std::array<bool, 7> values{};

  bool all_agree() const noexcept {
    return std::all_of(values.begin(), values.end(), [&](bool v) { return v == values[0]; });
  }
};

SeparabilityPredicates separability_predicates(const AdditiveCode& code);

/*
 * Per-codeword congruence: p(y) = 0 (mod 4) when wt_H(x) is even and
 * p(y) = 2 (mod 4) when it is odd.  Returns the first violating codeword.
 */
std::optional<MixedVector> order_four_congruence_violation(const AdditiveCode& code);

/* The binary projection of the order-two subcode is a binary self-dual code of length 2*kappa. */
bool order_two_projection_self_dual(const AdditiveCode& code);

/* Gray images of all codewords, in codeword order. */
std::vector<std::vector<std::uint8_t>> gray_image(const AdditiveCode& code);

/* The Gray image is closed under XOR. */
bool gray_image_linear(const AdditiveCode& code);

}  // namespace z2z4
