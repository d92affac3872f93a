#pragma once

/*
 * Vectors of Z2^alpha x Z4^beta and the arithmetic shared by every other
 * module: componentwise addition, the mixed inner product, the Gray map and
 * the Lee-type weight it induces.
 */

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace z2z4 {

/* Shape of the ambient group Z2^alpha x Z4^beta. */
struct Ambient {
  std::size_t alpha = 0;
  std::size_t beta = 0;

  /* Binary length of the Gray image. */
  constexpr std::size_t length() const noexcept { return alpha + 2 * beta; }

  friend constexpr bool operator==(const Ambient&, const Ambient&) = default;
  friend constexpr auto operator<=>(const Ambient&, const Ambient&) = default;
};

std::string to_string(const Ambient& ambient);

/*
 * An element (x | y) of Z2^alpha x Z4^beta.  Entries are stored reduced: the
 * binary part in {0,1}, the quaternary part in {0,1,2,3}.  Ordering is
 * lexicographic on (binary part, quaternary part) within one ambient.
 */
class MixedVector {
 public:
  MixedVector() = default;
  explicit MixedVector(Ambient ambient);
  /* Entries are validated, not reduced; out-of-range values throw. */
  MixedVector(std::vector<std::uint8_t> binary, const std::vector<std::uint8_t>& quaternary);

  Ambient ambient() const noexcept { return {alpha_, entries_.size() - alpha_}; }
  std::size_t alpha() const noexcept { return alpha_; }
  std::size_t beta() const noexcept { return entries_.size() - alpha_; }

  std::span<const std::uint8_t> binary() const noexcept { return {entries_.data(), alpha_}; }
  std::span<const std::uint8_t> quaternary() const noexcept {
    return std::span<const std::uint8_t>(entries_).subspan(alpha_);
  }

  std::uint8_t x(std::size_t i) const { return entries_[i]; }
  std::uint8_t y(std::size_t j) const { return entries_[alpha_ + j]; }
  void set_x(std::size_t i, unsigned value) { entries_[i] = static_cast<std::uint8_t>(value & 1U); }
  void set_y(std::size_t j, unsigned value) {
    entries_[alpha_ + j] = static_cast<std::uint8_t>(value & 3U);
  }

  MixedVector& operator+=(const MixedVector& other);
  MixedVector& operator-=(const MixedVector& other);
  friend MixedVector operator+(MixedVector lhs, const MixedVector& rhs) { return lhs += rhs; }
  friend MixedVector operator-(MixedVector lhs, const MixedVector& rhs) { return lhs -= rhs; }
  MixedVector operator-() const;

  /* k*v: the quaternary part is multiplied mod 4, the binary part mod 2. */
  MixedVector scaled(unsigned k) const;

  bool is_zero() const noexcept;
  /* Additive order: 1, 2 or 4. */
  unsigned order() const noexcept;

  std::size_t hash() const noexcept;

  friend bool operator==(const MixedVector&, const MixedVector&) = default;
  friend auto operator<=>(const MixedVector&, const MixedVector&) = default;

 private:
  std::size_t alpha_ = 0;
  std::vector<std::uint8_t> entries_;
};

/* (j^alpha | k^beta), the constant vectors used throughout. */
MixedVector constant_vector(Ambient ambient, unsigned binary_value, unsigned quaternary_value);

/* phi(0)=00, phi(1)=01, phi(2)=11, phi(3)=10 on each quaternary entry. */
std::vector<std::uint8_t> gray_map(const MixedVector& v);

std::size_t hamming_weight(std::span<const std::uint8_t> bits) noexcept;
std::size_t lee_weight(std::span<const std::uint8_t> quaternary) noexcept;

/* wt_H(x) + wt_L(y), i.e. the Hamming weight of the Gray image. */
std::size_t weight(const MixedVector& v) noexcept;

/* Number of entries of order four (equal to 1 or 3). */
std::size_t p_count(std::span<const std::uint8_t> quaternary) noexcept;

/* <u', v'>_2 and <u'', v''>_4.  Lengths must agree. */
std::uint8_t binary_inner(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);
std::uint8_t quaternary_inner(std::span<const std::uint8_t> u, std::span<const std::uint8_t> v);

/* 2 * <x, x'>_2 + <y, y'>_4 in Z4.  Shapes must agree. */
std::uint8_t inner_product(const MixedVector& u, const MixedVector& v);

/*
 * Vector literal "x...x|y...y": alpha characters from {0,1}, a bar, then beta
 * characters from {0,...,3}.  Either side may be empty.
 */
MixedVector parse_vector(std::string_view literal);
/* Same, additionally requiring the given shape. */
MixedVector parse_vector(std::string_view literal, Ambient ambient);
std::string to_string(const MixedVector& v);

/* 2^alpha * 4^beta; the shape must satisfy alpha + 2*beta < 64. */
std::uint64_t ambient_size(Ambient ambient);

/*
 * The index-th vector of the ambient in lexicographic order (the last
 * quaternary coordinate varies fastest).
 */
MixedVector ambient_element(Ambient ambient, std::uint64_t index);

/* Concatenation placing the binary parts side by side and the quaternary parts side by side. */
MixedVector concat(const MixedVector& u, const MixedVector& v);

}  // namespace z2z4

template <>
struct std::hash<z2z4::MixedVector> {
  std::size_t operator()(const z2z4::MixedVector& v) const noexcept { return v.hash(); }
};
