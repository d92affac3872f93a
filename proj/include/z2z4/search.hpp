#pragma once

/*
 * Exhaustive census of self-dual codes of a small ambient.  A self-dual code
 * has alpha = 2*kappa and gamma = beta + kappa - 2*delta, so its standard
 * form has blocks of widths kappa | kappa over Z2 and delta | beta - 2*delta
 * | delta over Z4.  Every such matrix satisfying the orthogonality
 * conditions is generated directly; every self-dual code is permutation
 * equivalent to one of them.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "z2z4/classify.hpp"
#include "z2z4/code.hpp"

namespace z2z4 {

inline constexpr std::size_t kDefaultSearchMaxLength = 10;

struct SearchOptions {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  std::optional<SelfDualClass> cls;
  /* Keep one code per class of codes equal up to permuting X and Y coordinates. */
  bool up_to_equivalence = false;
  /* 0 picks the hardware concurrency. */
  unsigned workers = 0;
  std::size_t max_length = kDefaultSearchMaxLength;
};

struct SearchHit {
  GeneratorMatrix generators;
  AdditiveCode code;
  SelfDualClass cls = SelfDualClass::NotSelfDual;
  bool separable = false;
};

struct SearchResult {
  /* Ordered by generator matrix; codeword sets are pairwise distinct. */
  std::vector<SearchHit> codes;
  /* Self-dual standard-form matrices met before any filtering or deduplication. */
  std::size_t matrices = 0;
};

SearchResult search(const SearchOptions& options);

/* Same codeword set after permuting binary coordinates and quaternary coordinates. */
bool permutation_equivalent(const AdditiveCode& a, const AdditiveCode& b);

}  // namespace z2z4
