#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "trigroup/complex.hpp"
#include "trigroup/exact.hpp"
#include "trigroup/presentation.hpp"

namespace trigroup {

/// Letters written on each oriented edge by a tuple of words.
struct PartialLabelling {
  std::vector<Word> words;
  std::vector<std::vector<Letter>> forward;   // per edge, sorted and unique
  std::vector<std::vector<Letter>> backward;  // per edge, sorted and unique
};

/// Writes the i-th letter of w_j on the i-th oriented edge of every face
/// labelled j, for j = 1..words.size().
PartialLabelling partial_label(const AbstractLabelledComplex& y, const std::vector<Word>& words);

/// At most one letter per oriented edge, and opposite orientations carry
/// mutually inverse letters.
bool is_consistent(const PartialLabelling& pl);

/// Whether the injective sub-tuple (r_{iota[0]}, ..., r_{iota[n-1]}) of the
/// relators fulfils y. `iota` holds 0-based tuple positions.
bool fulfils(const AbstractLabelledComplex& y, const std::vector<std::uint32_t>& iota, const TriangularPresentation& p);

/// Every injective sub-tuple of p fulfilling y, in lexicographic order of
/// iota, stopping after `limit` hits.
std::vector<std::vector<std::uint32_t>> find_fulfilling_subtuples(const AbstractLabelledComplex& y,
                                                                  const TriangularPresentation& p,
                                                                  std::size_t limit = 1000);

struct ExactCaps {
  std::uint32_t max_m = 3;
  std::uint32_t max_n = 3;
};

/// Exact probabilities that uniform cyclically reduced words partially fulfil y.
struct FulfillmentProbe {
  std::uint32_t m = 0;
  std::uint64_t support = 0;          // (2m-1)^3 + 1
  std::vector<BigInt> consistent;     // consistent[i]: number of consistent i-tuples, i = 0..n
  std::vector<Rational> probability;  // p_i = consistent[i] / support^i
};

/// Counts consistent word tuples level by level with a pruned exhaustive
/// search over letters. Requires every face boundary to have length 3.
FulfillmentProbe exact_probabilities(const AbstractLabelledComplex& y, std::uint32_t m, ExactCaps caps = {},
                                     unsigned workers = 1);

/// delta_i = max of delta(f) over faces labelled i, for i = 1..n.
std::vector<std::pair<std::uint32_t, std::uint32_t>> lemma_bound(const AbstractLabelledComplex& y);

/// One level of the ratio test p_i / p_{i-1} <= (2m-1)^(-delta_i).
struct LevelCheck {
  std::uint32_t level = 0;
  std::uint32_t delta = 0;
  Rational ratio;  // p_i / p_{i-1}; 0 when p_{i-1} = 0
  Rational bound;  // (2m-1)^(-delta_i)
  bool holds = false;
};

std::vector<LevelCheck> check_ratio_bounds(const AbstractLabelledComplex& y, const FulfillmentProbe& probe);

/// True when the product of the per-level bounds dominates p_n.
bool product_bound_holds(const AbstractLabelledComplex& y, const FulfillmentProbe& probe);

/// Exponent c in the union bound (2m-1)^c,
/// c = ((3|Y| + 2(Red - Cancel)) / |Y| - 3(1-2d)) / 2.
Rational final_bound_exponent(const AbstractLabelledComplex& y, const Rational& density);

/// exp(log(2m-1) * c) for the exponent above.
double final_probability_bound(const AbstractLabelledComplex& y, std::uint32_t m, const Rational& density);

struct MonteCarloEstimate {
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> successes;  // per level i = 1..n: first i words consistent
  double estimate = 0;                   // full-tuple frequency
  double lower = 0;                      // 99% Wilson interval
  double upper = 0;
};

/// Frequency with which i.i.d. uniform word tuples fulfil y. Trial t draws
/// from its own derived seed, so the estimate does not depend on `workers`.
MonteCarloEstimate montecarlo_fulfillment(const AbstractLabelledComplex& y, std::uint32_t m, std::uint64_t trials,
                                          std::uint64_t seed, unsigned workers = 1);

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t successes, std::uint64_t trials, double z);

}  // namespace trigroup
