#include "z2z4/enumerator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "z2z4/errors.hpp"

namespace z2z4 {

WeightEnumerator::WeightEnumerator(std::size_t n, std::vector<Rational> c) : degree(n), coefficients(std::move(c)) {
  if (coefficients.size() != n + 1) throw PreconditionError("enumerator of degree n needs n + 1 coefficients");
}

Rational WeightEnumerator::total() const {
  Rational sum = 0;
  for (const auto& c : coefficients) sum += c;
  return sum;
}

bool WeightEnumerator::is_zero() const {
  return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

bool WeightEnumerator::has_integer_coefficients() const {
  return std::all_of(coefficients.begin(), coefficients.end(),
                     [](const Rational& c) { return denominator(c) == 1; });
}

namespace {

void require_same_degree(const WeightEnumerator& a, const WeightEnumerator& b) {
  if (a.degree != b.degree) throw PreconditionError("forms of different degree");
}

}  // namespace

WeightEnumerator operator+(const WeightEnumerator& a, const WeightEnumerator& b) {
  require_same_degree(a, b);
  WeightEnumerator out = a;
  for (std::size_t k = 0; k <= a.degree; ++k) out.coefficients[k] += b.coefficients[k];
  return out;
}

WeightEnumerator operator-(const WeightEnumerator& a, const WeightEnumerator& b) {
  require_same_degree(a, b);
  WeightEnumerator out = a;
  for (std::size_t k = 0; k <= a.degree; ++k) out.coefficients[k] -= b.coefficients[k];
  return out;
}

WeightEnumerator operator*(const WeightEnumerator& a, const WeightEnumerator& b) {
  WeightEnumerator out(a.degree + b.degree);
  for (std::size_t i = 0; i <= a.degree; ++i) {
    if (a.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j <= b.degree; ++j) out.coefficients[i + j] += a.coefficients[i] * b.coefficients[j];
  }
  return out;
}

WeightEnumerator operator*(const Rational& k, const WeightEnumerator& a) {
  WeightEnumerator out = a;
  for (auto& c : out.coefficients) c *= k;
  return out;
}

WeightEnumerator power(const WeightEnumerator& a, std::size_t e) {
  WeightEnumerator out = monomial(0, 0);
  for (std::size_t i = 0; i < e; ++i) out = out * a;
  return out;
}

WeightEnumerator monomial(std::size_t i, std::size_t j, const Rational& c) {
  WeightEnumerator out(i + j);
  out.coefficients[j] = c;
  return out;
}

WeightEnumerator weight_enumerator(const AdditiveCode& code, std::size_t max_length) {
  check_guard(code.ambient(), max_length);
  return weight_enumerator(code.codewords(), code.ambient().length());
}

WeightEnumerator weight_enumerator(const std::vector<MixedVector>& words, std::size_t n) {
  WeightEnumerator out(n);
  for (const auto& w : words) {
    if (w.ambient().length() != n) throw PreconditionError("vector " + to_string(w) + " has the wrong length");
    out.coefficients[weight(w)] += 1;
  }
  return out;
}

WeightEnumerator substitute(const WeightEnumerator& w, const IntMatrix& m) {
  const WeightEnumerator first(1, {m[0][0], m[0][1]});
  const WeightEnumerator second(1, {m[1][0], m[1][1]});
  WeightEnumerator out(w.degree);
  /* powers of the second linear form, built once */
  std::vector<WeightEnumerator> second_powers{monomial(0, 0)};
  for (std::size_t k = 1; k <= w.degree; ++k) second_powers.push_back(second_powers.back() * second);
  WeightEnumerator first_power = monomial(0, 0);
  for (std::size_t k = w.degree + 1; k-- > 0;) {
    /* first_power = first^(degree - k) */
    if (w.coefficients[k] != 0) out = out + w.coefficients[k] * (first_power * second_powers[k]);
    if (k > 0) first_power = first_power * first;
  }
  return out;
}

bool squares_to_identity(const IntMatrix& m, unsigned scale_log2) {
  const long scale = 1L << scale_log2;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const long entry = static_cast<long>(m[i][0]) * m[0][j] + static_cast<long>(m[i][1]) * m[1][j];
      if (entry != (i == j ? scale : 0)) return false;
    }
  }
  return true;
}

WeightEnumerator macwilliams(const WeightEnumerator& w, const Rational& size) {
  if (size <= 0) throw PreconditionError("code size must be positive");
  WeightEnumerator out = (1 / size) * substitute(w, kMacWilliams);
  if (!out.has_integer_coefficients()) {
    throw PreconditionError("MacWilliams transform is not integral; enumerator and size " + size.str() +
                            " are inconsistent");
  }
  return out;
}

WeightEnumerator even_subcode_we(const WeightEnumerator& w) {
  WeightEnumerator out = w;
  for (std::size_t k = 1; k <= w.degree; k += 2) out.coefficients[k] = 0;
  return out;
}

WeightEnumerator shadow_we(const WeightEnumerator& w) {
  if (w.degree % 2 != 0) throw PreconditionError("shadow enumerator needs even length");
  const Rational scale = Rational(1) / Rational(boost::multiprecision::cpp_int(1) << (w.degree / 2));
  return scale * substitute(w, {{{1, 1}, {-1, 1}}});
}

namespace {

std::string power_text(const char* var, std::size_t e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return std::string(var) + "^" + std::to_string(e);
}

}  // namespace

std::string to_string(const WeightEnumerator& w) {
  std::string out;
  for (std::size_t k = 0; k <= w.degree; ++k) {
    Rational c = w.coefficients[k];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (c < 0) c = -c;
    std::string vars = power_text("x", w.degree - k);
    const std::string ys = power_text("y", k);
    if (!vars.empty() && !ys.empty()) vars += "*";
    vars += ys;
    if (vars.empty()) {
      out += c.str();
    } else {
      if (c != 1) out += c.str() + "*";
      out += vars;
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_coefficient_string(const WeightEnumerator& w) {
  std::string out = std::to_string(w.degree) + ":";
  for (const auto& c : w.coefficients) out += " " + c.str();
  return out;
}

std::pair<WeightEnumerator, WeightEnumerator> gleason_generators(SelfDualClass cls) {
  const WeightEnumerator x2y2(2, {1, 0, 1});
  switch (cls) {
    case SelfDualClass::Type0: return {x2y2, WeightEnumerator(2, {0, 1, -1})};
    case SelfDualClass::TypeI: {
      const WeightEnumerator diff(2, {1, 0, -1});
      return {x2y2, monomial(2, 2) * diff * diff};
    }
    case SelfDualClass::TypeII: {
      const WeightEnumerator g1(8, {1, 0, 0, 0, 14, 0, 0, 0, 1});
      const WeightEnumerator diff(4, {1, 0, 0, 0, -1});
      return {g1, monomial(4, 4) * power(diff, 4)};
    }
    case SelfDualClass::NotSelfDual: break;
  }
  throw PreconditionError("no invariant ring for codes that are not self-dual");
}

GleasonDecomposition gleason_decompose(const WeightEnumerator& w, SelfDualClass cls) {
  const auto [g1, g2] = gleason_generators(cls);
  const std::size_t n = w.degree;
  const std::size_t step = cls == SelfDualClass::TypeII ? 8 : 2;
  if (n % step != 0) {
    throw PreconditionError("length " + std::to_string(n) + " does not fit the " + to_string(cls) + " ring");
  }

  GleasonDecomposition d;
  d.cls = cls;
  std::vector<WeightEnumerator> basis;
  for (std::size_t b = 0; b * g2.degree <= n; ++b) {
    const std::size_t rest = n - b * g2.degree;
    if (rest % g1.degree != 0) continue;
    d.monomials.emplace_back(rest / g1.degree, b);
    basis.push_back(power(g1, rest / g1.degree) * power(g2, b));
  }

  /* augmented system, one row per coefficient of the form */
  const std::size_t m = basis.size();
  std::vector<std::vector<Rational>> rows(n + 1, std::vector<Rational>(m + 1));
  for (std::size_t k = 0; k <= n; ++k) {
    for (std::size_t j = 0; j < m; ++j) rows[k][j] = basis[j].coefficients[k];
    rows[k][m] = w.coefficients[k];
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < m && rank <= n; ++col) {
    std::size_t r = rank;
    while (r <= n && rows[r][col] == 0) ++r;
    if (r > n) continue;
    std::swap(rows[r], rows[rank]);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const Rational f = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j <= m; ++j) rows[i][j] -= f * rows[rank][j];
    }
    pivots.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i <= n; ++i) {
    if (rows[i][m] != 0) {
      throw PreconditionError("enumerator " + to_string(w) + " is not in the " + to_string(cls) + " ring");
    }
  }
  if (rank != m) throw std::logic_error("ring generator products are linearly dependent");
  d.coefficients.assign(m, 0);
  for (std::size_t i = 0; i < rank; ++i) d.coefficients[pivots[i]] = rows[i][m] / rows[i][pivots[i]];

  if (expand(d) != w) throw std::logic_error("Gleason decomposition does not reproduce the enumerator");
  return d;
}

WeightEnumerator expand(const GleasonDecomposition& d) {
  const auto [g1, g2] = gleason_generators(d.cls);
  if (d.monomials.empty()) return WeightEnumerator();
  const auto [a0, b0] = d.monomials.front();
  WeightEnumerator out(a0 * g1.degree + b0 * g2.degree);
  for (std::size_t i = 0; i < d.monomials.size(); ++i) {
    const auto [a, b] = d.monomials[i];
    out = out + d.coefficients[i] * (power(g1, a) * power(g2, b));
  }
  return out;
}

std::string to_string(const GleasonDecomposition& d) {
  std::ostringstream values;
  std::ostringstream names;
  for (std::size_t i = 0; i < d.monomials.size(); ++i) {
    const auto [a, b] = d.monomials[i];
    if (i > 0) {
      values << ", ";
      names << ", ";
    }
    values << d.coefficients[i].str();
    std::string name = power_text("g1", a);
    const std::string second = power_text("g2", b);
    if (!name.empty() && !second.empty()) name += "*";
    name += second;
    names << (name.empty() ? "1" : name);
  }
  return "(" + values.str() + ") on (" + names.str() + ")";
}

}  // namespace z2z4
