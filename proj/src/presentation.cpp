#include "trigroup/presentation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "trigroup/error.hpp"

namespace trigroup {

namespace {

void check_density(const Rational& d) {
  if (d < 0 || d >= 1) fail(ErrorCode::InvalidArgument, "density must lie in [0,1), got " + to_string(d));
}

// n <= (2m-1)^(3p/q)  <=>  n^q <= (2m-1)^(3p)
bool at_most_power(const BigInt& n, const BigInt& base_pow, unsigned q) {
  return boost::multiprecision::pow(n, q) <= base_pow;
}

}  // namespace

std::uint64_t relator_count(std::uint32_t m, const Rational& density) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  check_density(density);
  const BigInt p = boost::multiprecision::numerator(density);
  const BigInt q = boost::multiprecision::denominator(density);
  if (q > 10'000'000) fail(ErrorCode::InvalidArgument, "density denominator too large: " + to_string(density));
  const unsigned qq = q.convert_to<unsigned>();
  const unsigned exponent = (3 * p).convert_to<unsigned>();
  const BigInt base = 2 * BigInt(m) - 1;
  if (base == 1) return 1;

  const BigInt target = boost::multiprecision::pow(base, exponent);
  // A double estimate lands within one of the answer; the exact tests below
  // decide the floor.
  const double estimate = std::floor(std::pow(static_cast<double>(2ULL * m - 1), 3.0 * to_double(density)));
  BigInt n = BigInt(static_cast<std::uint64_t>(std::max(1.0, estimate)));
  if (!at_most_power(n, target, qq)) {
    while (n > 1 && !at_most_power(n, target, qq)) --n;
  } else {
    while (at_most_power(n + 1, target, qq)) ++n;
  }
  return n.convert_to<std::uint64_t>();
}

TriangularPresentation make_presentation(std::uint32_t m, const Rational& density, std::uint64_t seed,
                                         std::vector<Word> relators) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "alphabet size m must be at least 1");
  check_density(density);
  for (std::size_t i = 0; i < relators.size(); ++i) {
    const Word& r = relators[i];
    if (r.alphabet_size() != m) {
      fail(ErrorCode::InvalidArgument, "relator " + std::to_string(i) + " uses a different alphabet size");
    }
    if (r.size() != 3 || !r.is_cyclically_reduced()) {
      fail(ErrorCode::InvalidArgument,
           "relator " + std::to_string(i) + " (\"" + r.to_string() + "\") is not a cyclically reduced word of length 3");
    }
  }
  return TriangularPresentation{m, density, seed, std::move(relators)};
}

TriangularPresentation sample_presentation(std::uint32_t m, const Rational& density, std::uint64_t seed) {
  const std::uint64_t count = relator_count(m, density);
  RandomSource rng(seed);
  std::vector<Word> relators;
  relators.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) relators.push_back(sample_cyc_reduced_len3(m, rng));
  return TriangularPresentation{m, density, seed, std::move(relators)};
}

Word symmetry_class_representative(const Word& w) {
  Word best = w;
  const Word inv = w.inverse();
  for (std::size_t k = 0; k < w.size(); ++k) {
    best = std::min({best, w.rotated(k), inv.rotated(k)});
  }
  return best;
}

bool relators_distinct_up_to_symmetry(const TriangularPresentation& p) {
  std::set<Word> seen;
  for (const Word& r : p.relators) {
    if (!seen.insert(symmetry_class_representative(r)).second) return false;
  }
  return true;
}

bool has_proper_power(const TriangularPresentation& p) {
  return std::any_of(p.relators.begin(), p.relators.end(), [](const Word& r) {
    return r.size() == 3 && r[0] == r[1] && r[1] == r[2];
  });
}

}  // namespace trigroup
