#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "z2z4/classify.hpp"
#include "z2z4/code.hpp"

namespace z2z4 {

/* Codewords (x, x' | y, y') for (x|y) in c and (x'|y') in d. */
AdditiveCode direct_product(const AdditiveCode& c, const AdditiveCode& d,
                            std::size_t max_length = kDefaultMaxLength);

struct ExpectedAttributes {
  std::optional<TypeParams> params;  // only where the type is stated or forced by self-duality
  SelfDualClass cls = SelfDualClass::NotSelfDual;
  bool separable = false;
};

struct CatalogEntry {
  std::string name;
  AdditiveCode code;
  ExpectedAttributes expected;
};

/*
 * Built-in codes: C1 ... C6, Gprime = <(11|)>, Gdoubleprime = <(|2)>,
 * Hamming8 (extended [8,4] Hamming code), D4 and Eq7 (the quaternary
 * length-4 code generated by 2200, 2020, 1111).
 */
CatalogEntry catalog(std::string_view name);
const std::vector<std::string>& catalog_names();

/*
 * A self-dual code of the requested (alpha, beta) and class.  Built from the
 * minimal example of its class extended by products with Gprime and
 * Gdoubleprime (Types 0 and I) or Hamming8 and Eq7 (Type II).  An unset
 * separability prefers a non-separable code when one exists.
 */
AdditiveCode ladder_build(std::size_t alpha, std::size_t beta, SelfDualClass cls,
                          std::optional<bool> separable = std::nullopt,
                          std::size_t max_length = kDefaultMaxLength);

/*
 * <{w in c : <w,v> = 0}, v> for a self-dual c, a self-orthogonal v not in c.
 * The result is self-dual of the same shape, and Type 0 when v has odd weight.
 */
AdditiveCode neighbor(const AdditiveCode& c, const MixedVector& v);

/*
 * First self-orthogonal vector outside c, in lexicographic ambient order,
 * that satisfies the filter (all vectors when no filter is given).
 */
std::optional<MixedVector> find_neighbor_vector(
    const AdditiveCode& c, const std::function<bool(const MixedVector&)>& filter = nullptr,
    std::size_t max_length = 20);

/* Product of catalog entries written "C1*Gprime*Gdoubleprime". */
AdditiveCode build_recipe(std::string_view recipe, std::size_t max_length = kDefaultMaxLength);

}  // namespace z2z4
