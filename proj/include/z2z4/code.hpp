#pragma once

/*
 * Additive codes: subgroups of Z2^alpha x Z4^beta given by generator rows
 * and held fully enumerated.  Everything here is desk scale; enumeration is
 * refused above a configurable binary length.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "z2z4/algebra.hpp"

namespace z2z4 {

/* Largest binary length alpha + 2*beta that span() will enumerate by default. */
inline constexpr std::size_t kDefaultMaxLength = 32;

/* Ordered generator rows; redundancy allowed. */
class GeneratorMatrix {
 public:
  GeneratorMatrix() = default;
  explicit GeneratorMatrix(Ambient ambient) : ambient_(ambient) {}
  GeneratorMatrix(Ambient ambient, std::vector<MixedVector> rows);

  Ambient ambient() const noexcept { return ambient_; }
  const std::vector<MixedVector>& rows() const noexcept { return rows_; }
  std::size_t size() const noexcept { return rows_.size(); }

  void add_row(MixedVector row);

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  Ambient ambient_;
  std::vector<MixedVector> rows_;
};

/*
 * A subgroup of the ambient, stored as its sorted codeword list together
 * with a generator matrix.  Two codes compare equal when they have the same
 * ambient and the same codewords.
 */
class AdditiveCode {
 public:
  /* The zero code of the given ambient. */
  explicit AdditiveCode(Ambient ambient = {});

  /* Closure of the rows under addition. */
  static AdditiveCode span(const GeneratorMatrix& generators, std::size_t max_length = kDefaultMaxLength);

  /*
   * Wraps a set of vectors known to form a subgroup; generators are extracted
   * greedily in codeword order.  Returns nullopt when the set is not closed
   * under addition.
   */
  static std::optional<AdditiveCode> from_subgroup(Ambient ambient, std::vector<MixedVector> words,
                                                   std::size_t max_length = kDefaultMaxLength);

  Ambient ambient() const noexcept { return ambient_; }
  const GeneratorMatrix& generators() const noexcept { return generators_; }
  const std::vector<MixedVector>& codewords() const noexcept { return words_; }
  std::size_t size() const noexcept { return words_.size(); }
  /* log2 |C|. */
  std::size_t log2_size() const noexcept;

  bool contains(const MixedVector& v) const;

  friend bool operator==(const AdditiveCode& a, const AdditiveCode& b) {
    return a.ambient_ == b.ambient_ && a.words_ == b.words_;
  }

 private:
  Ambient ambient_;
  GeneratorMatrix generators_;
  std::vector<MixedVector> words_;
};

inline AdditiveCode span(const GeneratorMatrix& generators, std::size_t max_length = kDefaultMaxLength) {
  return AdditiveCode::span(generators, max_length);
}

/* Throws GuardExceeded when alpha + 2*beta exceeds max_length. */
void check_guard(Ambient ambient, std::size_t max_length);

/* (alpha, beta; gamma, delta; kappa): C is Z2^gamma x Z4^delta as a group. */
struct TypeParams {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::size_t gamma = 0;
  std::size_t delta = 0;
  std::size_t kappa = 0;

  friend bool operator==(const TypeParams&, const TypeParams&) = default;
};

/* "(2,2;1,1;1)" */
std::string to_string(const TypeParams& params);

TypeParams type_params(const AdditiveCode& code);

/* A rows x cols array of residues. */
struct Block {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> entries;

  Block() = default;
  Block(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}

  std::uint8_t operator()(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
  std::uint8_t& operator()(std::size_t r, std::size_t c) { return entries[r * cols + c]; }

  friend bool operator==(const Block&, const Block&) = default;
};

/*
 * Canonical generator matrix of a column-permuted copy of a code:
 *
 *   ( I_kappa  T_b | 2T_2   0            0       )
 *   ( 0        0   | 2T_1   2I_{gamma-kappa}  0  )
 *   ( 0        S_b | S_q    R            I_delta )
 *
 * x_order[i] (resp. y_order[j]) names the original binary (quaternary)
 * column found at position i (j); binary and quaternary columns are never
 * exchanged.
 */
struct StandardForm {
  TypeParams params;
  std::vector<std::size_t> x_order;
  std::vector<std::size_t> y_order;
  GeneratorMatrix matrix;

  /* Width of the first quaternary block: beta + kappa - gamma - delta. */
  std::size_t free_width() const noexcept;

  Block t_b() const;  // kappa x (alpha - kappa), binary
  Block t_2() const;  // kappa x free_width, entries in {0,1}
  Block t_1() const;  // (gamma - kappa) x free_width, entries in {0,1}
  Block s_b() const;  // delta x (alpha - kappa), binary
  Block s_q() const;  // delta x free_width, over Z4
  Block r() const;    // delta x (gamma - kappa), entries in {0,1}

  /* Coordinates of the original code -> coordinates of the standard form, and back. */
  MixedVector to_standard(const MixedVector& v) const;
  MixedVector to_original(const MixedVector& v) const;
};

StandardForm standard_form(const GeneratorMatrix& generators);

/* Projections onto the binary and the quaternary coordinates, as codes of shape (alpha,0) and (0,beta). */
AdditiveCode puncture_x(const AdditiveCode& code);
AdditiveCode puncture_y(const AdditiveCode& code);

/* Codewords of order at most two (quaternary entries in {0,2}). */
AdditiveCode order_two_subcode(const AdditiveCode& code);

/* Codewords of even weight. */
AdditiveCode even_weight_subcode(const AdditiveCode& code);

/* Dimension r of { x : (x, 0) in C }; |C| = |C_Y| * 2^r. */
std::size_t x_kernel_dimension(const AdditiveCode& code);

/* C = C_X x C_Y as sets. */
bool is_separable(const AdditiveCode& code);

/* (1^alpha, 2^beta) is a codeword. */
bool is_antipodal(const AdditiveCode& code);

}  // namespace z2z4
