#include "z2z4/code.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "z2z4/errors.hpp"

namespace z2z4 {

GeneratorMatrix::GeneratorMatrix(Ambient ambient, std::vector<MixedVector> rows) : ambient_(ambient) {
  rows_.reserve(rows.size());
  for (auto& row : rows) add_row(std::move(row));
}

void GeneratorMatrix::add_row(MixedVector row) {
  if (row.ambient() != ambient_) {
    throw PreconditionError("generator row " + to_string(row) + " does not have shape " + to_string(ambient_));
  }
  rows_.push_back(std::move(row));
}

void check_guard(Ambient ambient, std::size_t max_length) {
  if (ambient.length() > max_length) {
    throw GuardExceeded("ambient " + to_string(ambient) + " has binary length " +
                        std::to_string(ambient.length()) + ", above the enumeration guard of " +
                        std::to_string(max_length));
  }
}

namespace {

/*
 * Extends the subgroup `words` (whose members are recorded in `seen`) by the
 * multiples of `g`.  Returns false when g was already a member.
 */
bool extend_by(std::vector<MixedVector>& words, std::unordered_set<MixedVector>& seen, const MixedVector& g) {
  if (seen.contains(g)) return false;
  const std::size_t base = words.size();
  MixedVector step = g;
  for (unsigned k = 1; k < g.order(); ++k) {
    for (std::size_t i = 0; i < base; ++i) {
      MixedVector w = words[i] + step;
      if (seen.insert(w).second) words.push_back(std::move(w));
    }
    step += g;
  }
  return true;
}

}  // namespace

AdditiveCode::AdditiveCode(Ambient ambient) : ambient_(ambient), generators_(ambient), words_{MixedVector(ambient)} {}

AdditiveCode AdditiveCode::span(const GeneratorMatrix& generators, std::size_t max_length) {
  check_guard(generators.ambient(), max_length);
  AdditiveCode code(generators.ambient());
  code.generators_ = generators;
  std::unordered_set<MixedVector> seen{code.words_.front()};
  for (const auto& row : generators.rows()) extend_by(code.words_, seen, row);
  std::sort(code.words_.begin(), code.words_.end());
  return code;
}

std::optional<AdditiveCode> AdditiveCode::from_subgroup(Ambient ambient, std::vector<MixedVector> words,
                                                        std::size_t max_length) {
  check_guard(ambient, max_length);
  for (const auto& w : words) {
    if (w.ambient() != ambient) throw PreconditionError("vector " + to_string(w) + " has the wrong shape");
  }
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());

  AdditiveCode code(ambient);
  std::unordered_set<MixedVector> seen{code.words_.front()};
  for (const auto& w : words) {
    if (extend_by(code.words_, seen, w)) code.generators_.add_row(w);
    if (code.words_.size() > words.size()) return std::nullopt;
  }
  if (code.words_.size() != words.size()) return std::nullopt;
  code.words_ = std::move(words);
  return code;
}

std::size_t AdditiveCode::log2_size() const noexcept {
  return static_cast<std::size_t>(std::countr_zero(words_.size()));
}

bool AdditiveCode::contains(const MixedVector& v) const {
  return std::binary_search(words_.begin(), words_.end(), v);
}

std::string to_string(const TypeParams& p) {
  return "(" + std::to_string(p.alpha) + "," + std::to_string(p.beta) + ";" + std::to_string(p.gamma) + "," +
         std::to_string(p.delta) + ";" + std::to_string(p.kappa) + ")";
}

namespace {

std::size_t log2_exact(std::size_t n) { return static_cast<std::size_t>(std::countr_zero(n)); }

bool has_even_quaternary_part(const MixedVector& v) {
  auto q = v.quaternary();
  return std::all_of(q.begin(), q.end(), [](auto e) { return (e & 1U) == 0; });
}

std::vector<MixedVector> binary_projection(const std::vector<MixedVector>& words) {
  std::vector<MixedVector> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    out.emplace_back(std::vector<std::uint8_t>(w.binary().begin(), w.binary().end()),
                     std::vector<std::uint8_t>{});
  }
  return out;
}

std::vector<MixedVector> quaternary_projection(const std::vector<MixedVector>& words) {
  std::vector<MixedVector> out;
  out.reserve(words.size());
  for (const auto& w : words) {
    out.emplace_back(std::vector<std::uint8_t>{},
                     std::vector<std::uint8_t>(w.quaternary().begin(), w.quaternary().end()));
  }
  return out;
}

AdditiveCode subgroup_or_throw(Ambient ambient, std::vector<MixedVector> words) {
  auto code = AdditiveCode::from_subgroup(ambient, std::move(words), ambient.length());
  if (!code) throw std::logic_error("projection or subcode is not closed under addition");
  return std::move(*code);
}

}  // namespace

TypeParams type_params(const AdditiveCode& code) {
  const auto ambient = code.ambient();
  const std::size_t total = code.log2_size();
  std::vector<MixedVector> order_two;
  for (const auto& w : code.codewords()) {
    if (has_even_quaternary_part(w)) order_two.push_back(w);
  }
  const std::size_t b = log2_exact(order_two.size());
  auto projected = binary_projection(order_two);
  std::sort(projected.begin(), projected.end());
  projected.erase(std::unique(projected.begin(), projected.end()), projected.end());

  TypeParams p;
  p.alpha = ambient.alpha;
  p.beta = ambient.beta;
  p.delta = total - b;
  p.gamma = b - p.delta;
  p.kappa = log2_exact(projected.size());
  return p;
}

std::size_t StandardForm::free_width() const noexcept {
  return params.beta - (params.gamma - params.kappa) - params.delta;
}

namespace {

Block extract(const GeneratorMatrix& m, std::size_t row0, std::size_t nrows, bool binary_part, std::size_t col0,
              std::size_t ncols, unsigned divisor) {
  Block b(nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r) {
    const auto& row = m.rows()[row0 + r];
    for (std::size_t c = 0; c < ncols; ++c) {
      const unsigned v = binary_part ? row.x(col0 + c) : row.y(col0 + c);
      b(r, c) = static_cast<std::uint8_t>(v / divisor);
    }
  }
  return b;
}

}  // namespace

Block StandardForm::t_b() const {
  return extract(matrix, 0, params.kappa, true, params.kappa, params.alpha - params.kappa, 1);
}
Block StandardForm::t_2() const { return extract(matrix, 0, params.kappa, false, 0, free_width(), 2); }
Block StandardForm::t_1() const {
  return extract(matrix, params.kappa, params.gamma - params.kappa, false, 0, free_width(), 2);
}
Block StandardForm::s_b() const {
  return extract(matrix, params.gamma, params.delta, true, params.kappa, params.alpha - params.kappa, 1);
}
Block StandardForm::s_q() const { return extract(matrix, params.gamma, params.delta, false, 0, free_width(), 1); }
Block StandardForm::r() const {
  return extract(matrix, params.gamma, params.delta, false, free_width(), params.gamma - params.kappa, 1);
}

MixedVector StandardForm::to_standard(const MixedVector& v) const {
  MixedVector out(v.ambient());
  for (std::size_t i = 0; i < x_order.size(); ++i) out.set_x(i, v.x(x_order[i]));
  for (std::size_t j = 0; j < y_order.size(); ++j) out.set_y(j, v.y(y_order[j]));
  return out;
}

MixedVector StandardForm::to_original(const MixedVector& v) const {
  MixedVector out(v.ambient());
  for (std::size_t i = 0; i < x_order.size(); ++i) out.set_x(x_order[i], v.x(i));
  for (std::size_t j = 0; j < y_order.size(); ++j) out.set_y(y_order[j], v.y(j));
  return out;
}

/*
 * Reduction in three passes.  Quaternary columns are scanned right to left for
 * unit pivots (Gauss-Jordan over Z4); the remaining rows then have even
 * quaternary part and are reduced over Z2, binary columns left to right and
 * the non-pivot quaternary columns right to left.  Finally the order-four rows
 * are cleared on the binary pivots and their R entries brought into {0,1}.
 * Scanning directions make a matrix already in canonical form a fixed point.
 */
StandardForm standard_form(const GeneratorMatrix& generators) {
  const Ambient ambient = generators.ambient();
  std::vector<MixedVector> rows;
  for (const auto& r : generators.rows()) {
    if (!r.is_zero()) rows.push_back(r);
  }
  std::vector<bool> used(rows.size(), false);

  using Pivot = std::pair<std::size_t, std::size_t>;  // (column, row)
  std::vector<Pivot> unit_pivots;
  std::vector<bool> unit_column(ambient.beta, false);
  for (std::size_t c = ambient.beta; c-- > 0;) {
    std::size_t r = 0;
    while (r < rows.size() && (used[r] || (rows[r].y(c) & 1U) == 0)) ++r;
    if (r == rows.size()) continue;
    if (rows[r].y(c) == 3) rows[r] = rows[r].scaled(3);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != r && rows[k].y(c) != 0) rows[k] -= rows[r].scaled(rows[k].y(c));
    }
    used[r] = true;
    unit_pivots.emplace_back(c, r);
    unit_column[c] = true;
  }

  std::vector<std::size_t> rest;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (!used[r]) rest.push_back(r);
  }
  std::vector<bool> pivoted(rows.size(), false);
  auto eliminate = [&](std::size_t pivot_row, auto has_entry) {
    for (auto k : rest) {
      if (k != pivot_row && has_entry(rows[k])) rows[k] += rows[pivot_row];
    }
    pivoted[pivot_row] = true;
  };

  std::vector<Pivot> x_pivots;
  for (std::size_t c = 0; c < ambient.alpha; ++c) {
    auto it = std::find_if(rest.begin(), rest.end(), [&](auto r) { return !pivoted[r] && rows[r].x(c) == 1; });
    if (it == rest.end()) continue;
    eliminate(*it, [c](const MixedVector& v) { return v.x(c) == 1; });
    x_pivots.emplace_back(c, *it);
  }
  std::vector<Pivot> y_pivots;
  for (std::size_t c = ambient.beta; c-- > 0;) {
    if (unit_column[c]) continue;
    auto it = std::find_if(rest.begin(), rest.end(), [&](auto r) { return !pivoted[r] && rows[r].y(c) == 2; });
    if (it == rest.end()) continue;
    eliminate(*it, [c](const MixedVector& v) { return v.y(c) == 2; });
    y_pivots.emplace_back(c, *it);
  }

  for (const auto& [uc, ur] : unit_pivots) {
    for (const auto& [c, r] : x_pivots) {
      if (rows[ur].x(c) == 1) rows[ur] += rows[r];
    }
    for (const auto& [c, r] : y_pivots) {
      if (rows[ur].y(c) >= 2) rows[ur] += rows[r];
    }
  }

  std::sort(y_pivots.begin(), y_pivots.end());
  std::sort(unit_pivots.begin(), unit_pivots.end());

  StandardForm sf;
  std::vector<bool> x_taken(ambient.alpha, false);
  for (const auto& [c, r] : x_pivots) {
    sf.x_order.push_back(c);
    x_taken[c] = true;
  }
  for (std::size_t c = 0; c < ambient.alpha; ++c) {
    if (!x_taken[c]) sf.x_order.push_back(c);
  }
  std::vector<bool> y_taken(unit_column);
  for (const auto& [c, r] : y_pivots) y_taken[c] = true;
  for (std::size_t c = 0; c < ambient.beta; ++c) {
    if (!y_taken[c]) sf.y_order.push_back(c);
  }
  for (const auto& [c, r] : y_pivots) sf.y_order.push_back(c);
  for (const auto& [c, r] : unit_pivots) sf.y_order.push_back(c);

  sf.params.alpha = ambient.alpha;
  sf.params.beta = ambient.beta;
  sf.params.kappa = x_pivots.size();
  sf.params.gamma = x_pivots.size() + y_pivots.size();
  sf.params.delta = unit_pivots.size();

  sf.matrix = GeneratorMatrix(ambient);
  for (const auto* group : {&x_pivots, &y_pivots, &unit_pivots}) {
    for (const auto& [c, r] : *group) sf.matrix.add_row(sf.to_standard(rows[r]));
  }
  return sf;
}

AdditiveCode puncture_x(const AdditiveCode& code) {
  return subgroup_or_throw({code.ambient().alpha, 0}, binary_projection(code.codewords()));
}

AdditiveCode puncture_y(const AdditiveCode& code) {
  return subgroup_or_throw({0, code.ambient().beta}, quaternary_projection(code.codewords()));
}

AdditiveCode order_two_subcode(const AdditiveCode& code) {
  std::vector<MixedVector> words;
  for (const auto& w : code.codewords()) {
    if (has_even_quaternary_part(w)) words.push_back(w);
  }
  return subgroup_or_throw(code.ambient(), std::move(words));
}

AdditiveCode even_weight_subcode(const AdditiveCode& code) {
  std::vector<MixedVector> words;
  for (const auto& w : code.codewords()) {
    if (weight(w) % 2 == 0) words.push_back(w);
  }
  return subgroup_or_throw(code.ambient(), std::move(words));
}

std::size_t x_kernel_dimension(const AdditiveCode& code) {
  std::size_t count = 0;
  for (const auto& w : code.codewords()) {
    auto q = w.quaternary();
    if (std::all_of(q.begin(), q.end(), [](auto e) { return e == 0; })) ++count;
  }
  return log2_exact(count);
}

bool is_separable(const AdditiveCode& code) {
  return puncture_x(code).size() * puncture_y(code).size() == code.size();
}

bool is_antipodal(const AdditiveCode& code) { return code.contains(constant_vector(code.ambient(), 1, 2)); }

}  // namespace z2z4
