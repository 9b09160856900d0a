#pragma once

#include <cstdint>
#include <vector>

#include "trigroup/words.hpp"

namespace trigroup {

struct ChiSquareResult {
  double statistic = 0;
  std::uint64_t df = 0;
  double p_value = 1;
};

/// Pearson chi-square test of `counts` against the uniform distribution.
ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts);

/// One-sided Fisher exact test of H1: rate 2 > rate 1, from k1 of n1 and
/// k2 of n2 successes. Returns P(X >= k2) under the hypergeometric null.
double fisher_greater(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2, std::uint64_t n2);

struct WordHistogram {
  std::vector<Word> support;          // enumerate_cyc_reduced_len3 order
  std::vector<std::uint64_t> counts;  // per support word
};

/// Counts of `draws` words from sample_cyc_reduced_len3 with one stream seeded by `seed`.
WordHistogram sample_word_histogram(std::uint32_t m, std::uint64_t draws, std::uint64_t seed,
                                    std::uint32_t cap = kDefaultEnumerationCap);

}  // namespace trigroup
