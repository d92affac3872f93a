#include "z2z4/construct.hpp"

#include <map>
#include <stdexcept>

#include "z2z4/duality.hpp"
#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

MixedVector pad_left(const MixedVector& v, Ambient right) { return concat(v, MixedVector(right)); }
MixedVector pad_right(const MixedVector& v, Ambient left) { return concat(MixedVector(left), v); }

}  // namespace

AdditiveCode direct_product(const AdditiveCode& c, const AdditiveCode& d, std::size_t max_length) {
  const Ambient ambient{c.ambient().alpha + d.ambient().alpha, c.ambient().beta + d.ambient().beta};
  GeneratorMatrix rows(ambient);
  for (const auto& r : c.generators().rows()) rows.add_row(pad_left(r, d.ambient()));
  for (const auto& r : d.generators().rows()) rows.add_row(pad_right(r, c.ambient()));
  return AdditiveCode::span(rows, max_length);
}

namespace {

AdditiveCode from_literals(Ambient ambient, std::initializer_list<const char*> rows) {
  GeneratorMatrix g(ambient);
  for (const char* r : rows) g.add_row(parse_vector(r, ambient));
  return AdditiveCode::span(g);
}

AdditiveCode hamming8() {
  return from_literals({8, 0}, {"10000111|", "01001011|", "00101101|", "00011110|"});
}

AdditiveCode quaternary_d4() { return from_literals({0, 4}, {"|2200", "|2020", "|1111"}); }

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"C1",     "C2",           "C3",       "C4", "C5",  "C6",
                                                 "Gprime", "Gdoubleprime", "Hamming8", "D4", "Eq7"};
  return names;
}

CatalogEntry catalog(std::string_view name) {
  using enum SelfDualClass;
  if (name == "C1") {
    return {"C1", from_literals({2, 2}, {"11|20", "01|11"}), {TypeParams{2, 2, 1, 1, 1}, Type0, false}};
  }
  if (name == "C2") {
    return {"C2", from_literals({2, 1}, {"11|0", "00|2"}), {TypeParams{2, 1, 2, 0, 1}, TypeI, true}};
  }
  if (name == "C3") {
    return {"C3",
            from_literals({4, 4}, {"1111|0000", "0101|2000", "0101|0200", "0101|0020", "0011|1111"}),
            {std::nullopt, TypeI, false}};
  }
  if (name == "C4") {
    return {"C4",
            from_literals({4, 6}, {"1111|000000", "0101|220000", "0000|202000", "0101|000200", "0101|111010",
                                   "0011|101101"}),
            {std::nullopt, TypeI, false}};
  }
  if (name == "C5") return {"C5", direct_product(hamming8(), quaternary_d4()), {std::nullopt, TypeII, true}};
  if (name == "C6") {
    /* gamma = 6 and delta = 1 are given; kappa = 4 follows from alpha = 2*kappa. */
    return {"C6",
            from_literals({8, 4}, {"10010110|0000", "01001110|0000", "00100111|0000", "00000110|2000",
                                   "00000110|0200", "00000110|0020", "00011011|1111"}),
            {TypeParams{8, 4, 6, 1, 4}, TypeII, false}};
  }
  if (name == "Gprime") return {"Gprime", from_literals({2, 0}, {"11|"}), {TypeParams{2, 0, 1, 0, 1}, TypeI, true}};
  if (name == "Gdoubleprime") {
    return {"Gdoubleprime", from_literals({0, 1}, {"|2"}), {TypeParams{0, 1, 1, 0, 0}, TypeI, true}};
  }
  if (name == "Hamming8") return {"Hamming8", hamming8(), {TypeParams{8, 0, 4, 0, 4}, TypeII, true}};
  if (name == "D4" || name == "Eq7") {
    return {std::string(name), quaternary_d4(), {TypeParams{0, 4, 2, 1, 0}, TypeII, true}};
  }
  throw PreconditionError("unknown catalog code '" + std::string(name) + "'");
}

namespace {

std::string ladder_rule(SelfDualClass cls, bool separable, bool boundary) {
  using enum SelfDualClass;
  if (boundary) {
    if (cls == Type0) return "Type 0 needs alpha >= 2 and beta >= 2";
    if (!separable) return "codes with alpha = 0 or beta = 0 are separable";
    return cls == TypeII ? "Type II needs alpha + 2*beta = 0 (mod 8) and alpha = 0 (mod 8)"
                         : "Type I needs alpha even";
  }
  switch (cls) {
    case Type0: return separable ? "Type 0 codes are non-separable" : "Type 0 needs alpha = 2 + 2a, beta >= 2";
    case TypeI:
      return separable ? "separable Type I needs alpha = 2 + 2a, beta >= 1"
                       : "non-separable Type I needs alpha = 4 + 2a, beta >= 4";
    case TypeII: return "Type II needs alpha = 8 + 8a, beta = 4 + 4b";
    case NotSelfDual: break;
  }
  return "unsupported class";
}

AdditiveCode extend(AdditiveCode code, const AdditiveCode& step, std::size_t times, std::size_t max_length) {
  for (std::size_t i = 0; i < times; ++i) code = direct_product(code, step, max_length);
  return code;
}

}  // namespace

AdditiveCode ladder_build(std::size_t alpha, std::size_t beta, SelfDualClass cls, std::optional<bool> separable,
                          std::size_t max_length) {
  using enum SelfDualClass;
  const bool boundary = alpha == 0 || beta == 0;
  if (!separable) separable = cls != Type0 && !admissible({alpha, beta, cls, false});
  if (!admissible({alpha, beta, cls, separable})) {
    throw PreconditionError("no self-dual " + to_string(cls) + (*separable ? " separable" : " non-separable") +
                            " code in " + to_string(Ambient{alpha, beta}) + ": " +
                            ladder_rule(cls, *separable, boundary));
  }
  check_guard({alpha, beta}, max_length);

  const bool even_ladder = cls != TypeII;
  const AdditiveCode alpha_step = catalog(even_ladder ? "Gprime" : "Hamming8").code;
  const AdditiveCode beta_step = catalog(even_ladder ? "Gdoubleprime" : "Eq7").code;
  const std::size_t alpha_stride = even_ladder ? 2 : 8;
  const std::size_t beta_stride = even_ladder ? 1 : 4;

  AdditiveCode code{Ambient{}};
  if (!boundary) {
    const char* base = nullptr;
    if (cls == Type0) base = "C1";
    else if (cls == TypeI) base = *separable ? "C2" : "C3";
    else base = *separable ? "C5" : "C6";
    code = catalog(base).code;
  }
  code = extend(std::move(code), alpha_step, (alpha - code.ambient().alpha) / alpha_stride, max_length);
  code = extend(std::move(code), beta_step, (beta - code.ambient().beta) / beta_stride, max_length);

  if (classify(code) != cls || is_separable(code) != *separable) {
    throw std::logic_error("ladder construction produced " + to_string(classify(code)) + " for " +
                           to_string(Ambient{alpha, beta}));
  }
  return code;
}

AdditiveCode neighbor(const AdditiveCode& c, const MixedVector& v) {
  if (v.ambient() != c.ambient()) throw PreconditionError("neighbor vector " + to_string(v) + " has the wrong shape");
  if (!is_self_dual(c)) throw PreconditionError("neighbor construction needs a self-dual code");
  if (inner_product(v, v) != 0) throw PreconditionError("vector " + to_string(v) + " is not self-orthogonal");
  if (c.contains(v)) throw PreconditionError("vector " + to_string(v) + " already lies in the code");

  std::vector<MixedVector> kept;
  for (const auto& w : c.codewords()) {
    if (inner_product(w, v) == 0) kept.push_back(w);
  }
  auto shared = AdditiveCode::from_subgroup(c.ambient(), std::move(kept), c.ambient().length());
  if (!shared) throw std::logic_error("orthogonal part of a code is not a subgroup");
  GeneratorMatrix rows = shared->generators();
  rows.add_row(v);
  return AdditiveCode::span(rows, c.ambient().length());
}

std::optional<MixedVector> find_neighbor_vector(const AdditiveCode& c,
                                                const std::function<bool(const MixedVector&)>& filter,
                                                std::size_t max_length) {
  check_guard(c.ambient(), max_length);
  const std::uint64_t count = ambient_size(c.ambient());
  for (std::uint64_t index = 0; index < count; ++index) {
    MixedVector v = ambient_element(c.ambient(), index);
    if (inner_product(v, v) == 0 && !c.contains(v) && (!filter || filter(v))) return v;
  }
  return std::nullopt;
}

AdditiveCode build_recipe(std::string_view recipe, std::size_t max_length) {
  AdditiveCode code{Ambient{}};
  bool any = false;
  while (true) {
    const auto star = recipe.find('*');
    std::string_view name = recipe.substr(0, star);
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (name.empty()) throw PreconditionError("empty factor in recipe");
    code = direct_product(code, catalog(name).code, max_length);
    any = true;
    if (star == std::string_view::npos) break;
    recipe.remove_prefix(star + 1);
  }
  if (!any) throw PreconditionError("empty recipe");
  return code;
}

}  // namespace z2z4
