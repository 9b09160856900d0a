#include "trigroup/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/hypergeometric.hpp>
#include <algorithm>
#include <map>

#include "trigroup/error.hpp"

namespace trigroup {

ChiSquareResult chi_square_uniform(const std::vector<std::uint64_t>& counts) {
  if (counts.size() < 2) fail(ErrorCode::InvalidArgument, "chi-square test needs at least two cells");
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  if (total == 0) fail(ErrorCode::InvalidArgument, "chi-square test needs at least one observation");
  const double expected = static_cast<double>(total) / static_cast<double>(counts.size());
  ChiSquareResult r;
  for (std::uint64_t c : counts) {
    const double diff = static_cast<double>(c) - expected;
    r.statistic += diff * diff / expected;
  }
  r.df = counts.size() - 1;
  const boost::math::chi_squared dist(static_cast<double>(r.df));
  r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
  return r;
}

double fisher_greater(std::uint64_t k1, std::uint64_t n1, std::uint64_t k2, std::uint64_t n2) {
  if (k1 > n1 || k2 > n2 || n1 == 0 || n2 == 0) fail(ErrorCode::InvalidArgument, "invalid counts for Fisher test");
  const std::uint64_t successes = k1 + k2;
  const boost::math::hypergeometric_distribution<double> dist(successes, n2, n1 + n2);
  // X = successes landing in the second sample; summed directly so the
  // lower end of the support needs no special casing.
  const std::uint64_t top = std::min(successes, n2);
  double tail = 0;
  for (std::uint64_t x = k2; x <= top; ++x) tail += boost::math::pdf(dist, static_cast<unsigned>(x));
  return std::min(tail, 1.0);
}

WordHistogram sample_word_histogram(std::uint32_t m, std::uint64_t draws, std::uint64_t seed, std::uint32_t cap) {
  WordHistogram h;
  h.support = enumerate_cyc_reduced_len3(m, cap);
  h.counts.assign(h.support.size(), 0);
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < h.support.size(); ++i) index.emplace(h.support[i], i);
  RandomSource rng(seed);
  for (std::uint64_t t = 0; t < draws; ++t) ++h.counts[index.at(sample_cyc_reduced_len3(m, rng))];
  return h;
}

}  // namespace trigroup
