#pragma once

/*
 * Hamming weight enumerators W(x, y) = sum x^(n - wt(c)) y^wt(c) as exact
 * homogeneous forms, the transforms acting on them, and decomposition over
 * the Gleason-type invariant rings.  All arithmetic is over the rationals;
 * factors of 1/sqrt(2) are applied through homogeneity as 2^(-n/2).
 */

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "z2z4/classify.hpp"
#include "z2z4/code.hpp"

namespace z2z4 {

using Rational = boost::multiprecision::cpp_rational;

/* Homogeneous form of the given degree; coefficients[k] multiplies x^(degree-k) y^k. */
struct WeightEnumerator {
  std::size_t degree = 0;
  std::vector<Rational> coefficients;

  WeightEnumerator() : coefficients(1) {}
  explicit WeightEnumerator(std::size_t n) : degree(n), coefficients(n + 1) {}
  WeightEnumerator(std::size_t n, std::vector<Rational> c);

  /* W(1, 1). */
  Rational total() const;
  bool is_zero() const;
  bool has_integer_coefficients() const;

  friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
};

WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b);
WeightEnumerator operator-(const WeightEnumerator& a, const WeightEnumerator& b);
WeightEnumerator operator*(const WeightEnumerator& a, const WeightEnumerator& b);
WeightEnumerator operator*(const Rational& k, const WeightEnumerator& a);
WeightEnumerator power(const WeightEnumerator& a, std::size_t e);

/* x^i y^j. */
WeightEnumerator monomial(std::size_t i, std::size_t j, const Rational& c = 1);

WeightEnumerator weight_enumerator(const AdditiveCode& code, std::size_t max_length = kDefaultMaxLength);
/* Enumerator of an arbitrary set of vectors of binary length n. */
WeightEnumerator weight_enumerator(const std::vector<MixedVector>& words, std::size_t n);

/* 2x2 integer matrix acting by (x, y) -> (a x + b y, c x + d y). */
using IntMatrix = std::array<std::array<int, 2>, 2>;

/* W(a x + b y, c x + d y). */
WeightEnumerator substitute(const WeightEnumerator& w, const IntMatrix& m);

/* The MacWilliams transform is (1/sqrt 2) * kMacWilliams; kNegation is -I. */
inline constexpr IntMatrix kMacWilliams = {{{1, 1}, {1, -1}}};
inline constexpr IntMatrix kNegation = {{{-1, 0}, {0, -1}}};

/* m * m == 2^scale_log2 * I, i.e. (m / sqrt(2)^scale_log2) squares to the identity. */
bool squares_to_identity(const IntMatrix& m, unsigned scale_log2);

/* (1/size) W(x + y, x - y).  Throws PreconditionError when the result is not integral. */
WeightEnumerator macwilliams(const WeightEnumerator& w, const Rational& size);

/* (W(x, y) + W(x, -y)) / 2. */
WeightEnumerator even_subcode_we(const WeightEnumerator& w);

/* 2^(-n/2) W(x + y, -(x - y)).  Throws PreconditionError for odd n. */
WeightEnumerator shadow_we(const WeightEnumerator& w);

/* "x^6 + 4*x^3*y^3 + 3*x^2*y^4" */
std::string to_string(const WeightEnumerator& w);
/* "6: 1 0 0 4 3 0 0" */
std::string to_coefficient_string(const WeightEnumerator& w);

/*
 * Ring generators g1, g2:
 *   Type 0   x^2 + y^2,             y(x - y)
 *   Type I   x^2 + y^2,             x^2 y^2 (x^2 - y^2)^2
 *   Type II  x^8 + 14 x^4 y^4 + y^8, x^4 y^4 (x^4 - y^4)^4
 */
std::pair<WeightEnumerator, WeightEnumerator> gleason_generators(SelfDualClass cls);

struct GleasonDecomposition {
  SelfDualClass cls = SelfDualClass::NotSelfDual;
  /* Exponent pairs (a, b) of g1^a g2^b, ordered by increasing b. */
  std::vector<std::pair<std::size_t, std::size_t>> monomials;
  std::vector<Rational> coefficients;
};

/*
 * Exact solution of W = sum c_(a,b) g1^a g2^b.  Throws PreconditionError
 * when the degree does not fit the ring or the system has no solution.
 */
GleasonDecomposition gleason_decompose(const WeightEnumerator& w, SelfDualClass cls);

WeightEnumerator expand(const GleasonDecomposition& d);

/* "(1, 0, -3, -2) on (g1^3, g1^2*g2, g1*g2^2, g2^3)" */
std::string to_string(const GleasonDecomposition& d);

}  // namespace z2z4
