#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "trigroup/chain.hpp"
#include "trigroup/error.hpp"
#include "trigroup/fulfillment.hpp"

using namespace trigroup;

namespace {

OrientedEdge fw(std::uint32_t e) { return {e, false}; }
OrientedEdge bw(std::uint32_t e) { return {e, true}; }

AbstractLabelledComplex make(std::uint32_t edges, std::vector<std::vector<OrientedEdge>> paths, std::vector<std::uint32_t> pi) {
  std::vector<Face> faces;
  for (auto& p : paths) faces.push_back(Face{std::move(p)});
  const std::uint32_t n = *std::max_element(pi.begin(), pi.end());
  return {TwoComplex::from_gluing(edges, std::move(faces)), n, std::move(pi)};
}

const AbstractLabelledComplex kSingle = make(3, {{fw(0), fw(1), fw(2)}}, {1});
const AbstractLabelledComplex kShared = make(5, {{fw(0), fw(1), fw(2)}, {bw(0), fw(3), fw(4)}}, {1, 2});
const AbstractLabelledComplex kMirror = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}}, {1, 2});
const AbstractLabelledComplex kLoop = make(2, {{fw(0), fw(0), fw(1)}}, {1});

std::vector<Word> words(std::uint32_t m, std::initializer_list<const char*> ws) {
  std::vector<Word> out;
  for (const char* w : ws) out.push_back(Word::parse(m, w));
  return out;
}

}  // namespace

TEST_SUITE("fulfillment") {
  TEST_CASE("partial labelling examples") {
    const auto pl = partial_label(kSingle, words(3, {"abc"}));
    CHECK(pl.forward[0] == std::vector<Letter>{Letter{0, false}});
    CHECK(pl.forward[2] == std::vector<Letter>{Letter{2, false}});
    CHECK(is_consistent(pl));

    const auto aab = partial_label(kLoop, words(3, {"aab"}));
    CHECK(aab.forward[0].size() == 1);
    CHECK(is_consistent(aab));

    const auto abc = partial_label(kLoop, words(3, {"abc"}));
    CHECK(abc.forward[0].size() == 2);
    CHECK_FALSE(is_consistent(abc));

    // shared edge read backwards by face 2: 'a' forwards needs 'A' there
    CHECK(is_consistent(partial_label(kShared, words(2, {"abb", "Aab"}))));
    CHECK_FALSE(is_consistent(partial_label(kShared, words(2, {"abb", "aab"}))));
    CHECK_THROWS_AS(partial_label(kSingle, words(2, {"ab"})), Error);
  }

  TEST_CASE("fulfils") {
    const auto p = make_presentation(2, Rational(1, 3), 0, words(2, {"abb", "abb", "bab"}));
    CHECK(fulfils(kSingle, {2}, p));
    CHECK(fulfils(kMirror, {0, 1}, p));  // repeated relator in two slots
    CHECK_FALSE(fulfils(kMirror, {0, 2}, p));
    CHECK_THROWS_AS(fulfils(kMirror, {1, 1}, p), Error);
    CHECK_THROWS_AS(fulfils(kMirror, {0}, p), Error);
    const auto hits = find_fulfilling_subtuples(kMirror, p);
    CHECK(hits == std::vector<std::vector<std::uint32_t>>{{0, 1}, {1, 0}});
    CHECK(find_fulfilling_subtuples(kMirror, p, 1).size() == 1);
  }

  TEST_CASE("exact probabilities: small examples") {
    const auto single = exact_probabilities(kSingle, 2);
    CHECK(single.probability[0] == 1);
    CHECK(single.probability[1] == 1);

    // p_2 / p_1 for one shared edge: the first letter of w_2 is forced
    const auto shared = exact_probabilities(kShared, 2);
    const Rational ratio = shared.probability[2] / shared.probability[1];
    CHECK(ratio <= Rational(1, 3));
    CHECK(ratio == Rational(1, 4));  // 7 of the 28 words start with a given letter

    // (e, e, g): words x x y with y != x^-1
    const auto loop = exact_probabilities(kLoop, 2);
    CHECK(loop.probability[1] == Rational(12, 28));
  }

  TEST_CASE("the per-level bound fails on a repeated edge") {
    const auto probe = exact_probabilities(kLoop, 2);
    const auto levels = check_ratio_bounds(kLoop, probe);
    REQUIRE(levels.size() == 1);
    CHECK(levels[0].delta == 1);
    CHECK(levels[0].bound == Rational(1, 3));
    CHECK(levels[0].ratio == Rational(3, 7));
    CHECK_FALSE(levels[0].holds);
    // 2m(2m-1) / ((2m-1)^3 + 1) > 1/(2m-1) for every m >= 2
    for (std::uint32_t m = 2; m <= 3; ++m) {
      const auto p = exact_probabilities(kLoop, m);
      const Rational expected(BigInt(2 * m * (2 * m - 1)), BigInt(count_cyc_reduced_len3(m)));
      CHECK(p.probability[1] == expected);
      CHECK(p.probability[1] > Rational(1, 2 * m - 1));
    }
  }

  TEST_CASE("exact counts against brute force and inclusion-exclusion") {
    RandomSource rng(77);
    int checked = 0;
    for (int t = 0; t < 300; ++t) {
      const auto y = random_labelled_complex(rng, {3, 3, 3});
      if (y.n > 3) continue;
      const auto polys = oracle::inclusion_exclusion_polys(y);
      for (std::uint32_t m = 1; m <= 2; ++m) {
        const auto probe = exact_probabilities(y, m);
        const auto brute = oracle::brute_force_counts(y, m);
        for (std::uint32_t i = 0; i <= y.n; ++i) {
          CHECK(probe.consistent[i] == brute[i]);
          CHECK(probe.consistent[i] == oracle::evaluate(polys[i], m));
        }
      }
      const auto m3 = exact_probabilities(y, 3);
      for (std::uint32_t i = 0; i <= y.n; ++i) CHECK(m3.consistent[i] == oracle::evaluate(polys[i], 3));
      ++checked;
    }
    CHECK(checked > 200);
  }

  TEST_CASE("exact counts do not depend on workers") {
    const auto y = make(6, {{fw(0), fw(1), fw(2)}, {bw(0), fw(3), fw(4)}, {bw(3), fw(5), bw(1)}}, {1, 2, 3});
    const auto a = exact_probabilities(y, 3, {}, 1);
    const auto b = exact_probabilities(y, 3, {}, 4);
    CHECK(a.consistent == b.consistent);
  }

  TEST_CASE("caps and preconditions") {
    CHECK_THROWS_AS(exact_probabilities(kSingle, 4), Error);
    CHECK(exact_probabilities(kSingle, 4, {4, 3}).probability[1] == 1);
    const auto four = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}},
                           {1, 2, 3, 4});
    try {
      exact_probabilities(four, 2);
      FAIL("expected a cap error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::CapExceeded);
    }
    const auto square = make(4, {{fw(0), fw(1), fw(2), fw(3)}}, {1});
    CHECK_THROWS_AS(exact_probabilities(square, 2), Error);
  }

  TEST_CASE("lemma bound examples") {
    using P = std::vector<std::pair<std::uint32_t, std::uint32_t>>;
    CHECK(lemma_bound(kSingle) == P{{1, 0}});
    CHECK(lemma_bound(kShared) == P{{1, 0}, {2, 1}});
    const auto same = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}}, {1, 1});
    CHECK(lemma_bound(same) == P{{1, 0}});
  }

  TEST_CASE("product bound") {
    CHECK(product_bound_holds(kShared, exact_probabilities(kShared, 2)));
    CHECK_FALSE(product_bound_holds(kLoop, exact_probabilities(kLoop, 2)));
  }

  TEST_CASE("final probability bound") {
    // Red - Cancel = 0, |Y| = 1, d = 1/3, m = 2: 3^((3 - 1)/2) = 3
    CHECK(final_bound_exponent(kSingle, Rational(1, 3)) == 1);
    CHECK(final_probability_bound(kSingle, 2, Rational(1, 3)) == doctest::Approx(3.0).epsilon(1e-12));
    // Cancel - Red = 3 > 3d|Y| = 2 for the twin pair at d = 1/3: decreasing in m
    const auto twin = make(3, {{fw(0), fw(1), fw(2)}, {fw(0), fw(1), fw(2)}}, {1, 2});
    CHECK(final_bound_exponent(twin, Rational(1, 3)) < 0);
    CHECK(final_probability_bound(twin, 10, Rational(1, 3)) < final_probability_bound(twin, 5, Rational(1, 3)));
    // violating Cancel - Red <= 3(d + eps)|Y| gives a bound below (2m-1)^(-3 eps)
    const Rational eps(1, 20);
    const Rational d(1, 5);
    REQUIRE(Rational(3) > 3 * (d + eps) * 2);
    for (std::uint32_t m = 2; m <= 20; ++m) {
      CHECK(final_probability_bound(twin, m, d) < std::pow(2.0 * m - 1, -3.0 * to_double(eps)));
    }
  }

  TEST_CASE("Monte Carlo") {
    const auto single = montecarlo_fulfillment(kSingle, 5, 1000, 3);
    CHECK(single.estimate == 1.0);

    const auto shared = montecarlo_fulfillment(kShared, 5, 20000, 8);
    CHECK(shared.lower <= 1.0 / 9.0);
    const auto again = montecarlo_fulfillment(kShared, 5, 20000, 8, 4);
    CHECK(again.successes == shared.successes);

    // agrees with the exact value at m = 2
    const auto exact = exact_probabilities(kShared, 2);
    const double p = boost::multiprecision::numerator(exact.probability[2]).convert_to<double>() /
                     boost::multiprecision::denominator(exact.probability[2]).convert_to<double>();
    const auto mc = montecarlo_fulfillment(kShared, 2, 50000, 12);
    CHECK(mc.lower <= p);
    CHECK(p <= mc.upper);
  }

  TEST_CASE("Wilson interval") {
    const auto [lo, hi] = wilson_interval(50, 100, 1.959963984540054);
    CHECK(lo == doctest::Approx(0.4038).epsilon(1e-3));
    CHECK(hi == doctest::Approx(0.5962).epsilon(1e-3));
  }
}
