#include "z2z4/shadow.hpp"

#include <algorithm>
#include <stdexcept>

#include "z2z4/classify.hpp"
#include "z2z4/duality.hpp"
#include "z2z4/errors.hpp"

namespace z2z4 {

namespace {

std::vector<MixedVector> translate(const std::vector<MixedVector>& words, const MixedVector& by) {
  std::vector<MixedVector> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w + by);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MixedVector> merged(const std::vector<MixedVector>& a, const std::vector<MixedVector>& b) {
  std::vector<MixedVector> out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::logic_error(std::string("shadow decomposition: ") + what);
}

}  // namespace

std::vector<MixedVector> shadow(const AdditiveCode& code) {
  if (!is_self_dual(code)) throw PreconditionError("the shadow is defined for self-dual codes only");
  const AdditiveCode even = even_weight_subcode(code);
  if (even.size() == code.size()) return {};
  const AdditiveCode even_dual = dual(even, code.ambient().length());
  std::vector<MixedVector> out;
  std::set_difference(even_dual.codewords().begin(), even_dual.codewords().end(), code.codewords().begin(),
                      code.codewords().end(), std::back_inserter(out));
  return out;
}

ShadowDecomposition decompose(const AdditiveCode& code) {
  if (classify(code) != SelfDualClass::Type0) throw PreconditionError("coset decomposition needs a Type 0 code");
  ShadowDecomposition d;
  d.s = constant_vector(code.ambient(), 1, 2);
  const auto& words = code.codewords();
  d.t = *std::find_if(words.begin(), words.end(), [](const MixedVector& w) { return weight(w) % 2 == 1; });

  const AdditiveCode even = even_weight_subcode(code);
  d.c00 = even.codewords();
  d.c10 = translate(d.c00, d.t);
  d.c01 = translate(d.c00, d.s);
  d.c11 = translate(d.c00, d.t + d.s);

  require(2 * d.c00.size() == code.size(), "C_0 does not have index 2");
  require(weight(d.s) % 2 == 0 && weight(d.t) % 2 == 1, "glue vector weights");
  require(inner_product(d.s, d.t) == 2 && inner_product(d.t, d.t) == 0 && inner_product(d.s, d.s) == 0,
          "glue vector inner products");
  require(merged(d.c00, d.c10) == words, "C is not C00 u C10");
  const AdditiveCode even_dual = dual(even, code.ambient().length());
  require(merged(merged(d.c00, d.c10), merged(d.c01, d.c11)) == even_dual.codewords(),
          "the four cosets do not partition C_0-perp");
  return d;
}

OrthogonalityTable orthogonality_table(const ShadowDecomposition& d) {
  OrthogonalityTable table{};
  const auto cosets = d.cosets();
  for (std::size_t a = 0; a < 4; ++a) {
    for (std::size_t b = 0; b < 4; ++b) {
      const auto& left = *cosets[a];
      const auto& right = *cosets[b];
      if (left.empty() || right.empty()) throw std::logic_error("empty coset in decomposition");
      const std::uint8_t value = inner_product(left.front(), right.front());
      for (const auto& u : left) {
        for (const auto& v : right) {
          if (inner_product(u, v) != value) {
            throw std::logic_error("inner product between cosets " + std::to_string(a) + " and " +
                                   std::to_string(b) + " is not constant");
          }
        }
      }
      table[a][b] = value;
    }
  }
  return table;
}

namespace {

void add_products(std::vector<MixedVector>& out, const std::vector<MixedVector>& left,
                  const std::vector<MixedVector>& right) {
  for (const auto& u : left) {
    for (const auto& v : right) out.push_back(concat(u, v));
  }
}

std::optional<AdditiveCode> glued(Ambient ambient, const ShadowDecomposition& c, const ShadowDecomposition& d,
                                  bool crossed, std::size_t max_length) {
  std::vector<MixedVector> words;
  add_products(words, c.c00, d.c00);
  add_products(words, c.c10, d.c10);
  add_products(words, c.c01, crossed ? d.c11 : d.c01);
  add_products(words, c.c11, crossed ? d.c01 : d.c11);
  auto code = AdditiveCode::from_subgroup(ambient, std::move(words), max_length);
  if (code && is_self_dual(*code)) return code;
  return std::nullopt;
}

}  // namespace

GlueResult glue(const AdditiveCode& c, const AdditiveCode& d, std::size_t max_length) {
  const Ambient ambient{c.ambient().alpha + d.ambient().alpha, c.ambient().beta + d.ambient().beta};
  check_guard(ambient, max_length);
  const ShadowDecomposition dc = decompose(c);
  const ShadowDecomposition dd = decompose(d);
  if (auto code = glued(ambient, dc, dd, false, max_length)) return {std::move(*code), GlueVariant::Matched};
  if (auto code = glued(ambient, dc, dd, true, max_length)) return {std::move(*code), GlueVariant::Crossed};
  throw std::logic_error("neither glued union is self-dual");
}

std::pair<AdditiveCode, AdditiveCode> non_type0_neighbors(const AdditiveCode& code) {
  const ShadowDecomposition d = decompose(code);
  auto build = [&](const std::vector<MixedVector>& other) {
    auto result = AdditiveCode::from_subgroup(code.ambient(), merged(d.c00, other), code.ambient().length());
    if (!result || classify(*result) == SelfDualClass::NotSelfDual) {
      throw std::logic_error("coset union is not a self-dual code");
    }
    return std::move(*result);
  };
  return {build(d.c01), build(d.c11)};
}

}  // namespace z2z4
