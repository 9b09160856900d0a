#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "trigroup/error.hpp"
#include "trigroup/presentation.hpp"

using namespace trigroup;
using Float50 = boost::multiprecision::cpp_bin_float_50;

namespace {

TriangularPresentation with(std::uint32_t m, std::initializer_list<const char*> rels) {
  std::vector<Word> w;
  for (const char* r : rels) w.push_back(Word::parse(m, r));
  return make_presentation(m, Rational(1, 3), 0, std::move(w));
}

// floor((2m-1)^(3d)) in 50-digit floating point; nullopt when too close to call
std::optional<std::uint64_t> float_floor(std::uint32_t m, const Rational& d) {
  const Float50 x = boost::multiprecision::pow(Float50(2 * m - 1),
                                               Float50(3 * boost::multiprecision::numerator(d)) /
                                                   Float50(boost::multiprecision::denominator(d)));
  const Float50 f = boost::multiprecision::floor(x);
  if (x - f < Float50("1e-30") || f + 1 - x < Float50("1e-30")) return std::nullopt;
  return f.convert_to<std::uint64_t>();
}

}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("relator count examples") {
    CHECK(relator_count(2, Rational(1, 3)) == 3);
    CHECK(relator_count(4, parse_rational("0.4")) == 10);
    CHECK(relator_count(2, parse_rational("0.38")) == 3);
    CHECK(relator_count(5, Rational(1, 3)) == 9);   // exact integer power
    CHECK(relator_count(3, Rational(2, 3)) == 25);  // 5^2
    CHECK(relator_count(1, parse_rational("0.4")) == 1);
    CHECK_THROWS_AS(relator_count(2, Rational(1)), Error);
    CHECK_THROWS_AS(relator_count(2, Rational(-1, 3)), Error);
    CHECK_THROWS_AS(relator_count(0, Rational(1, 3)), Error);
  }

  TEST_CASE("relator count against 50-digit floats") {
    int compared = 0;
    for (std::uint32_t m = 1; m <= 40; ++m) {
      for (int num = 1; num < 100; num += 3) {
        const Rational d(num, 100);
        const auto expected = float_floor(m, d);
        if (!expected) continue;
        CHECK(relator_count(m, d) == *expected);
        ++compared;
      }
    }
    CHECK(compared > 1000);
  }

  TEST_CASE("relator count is monotone") {
    for (std::uint32_t m = 1; m < 30; ++m) {
      for (int num = 1; num < 99; ++num) {
        const Rational d(num, 100), e(num + 1, 100);
        CHECK(relator_count(m, d) <= relator_count(m, e));
        CHECK(relator_count(m, d) <= relator_count(m + 1, d));
      }
    }
  }

  TEST_CASE("sampling") {
    const auto p = sample_presentation(2, Rational(1, 3), 42);
    CHECK(p.relators.size() == 3);
    for (const Word& w : p.relators) CHECK(w.is_cyclically_reduced());
    const auto q = sample_presentation(2, Rational(1, 3), 42);
    CHECK(p.relators == q.relators);
    CHECK(p.seed == 42);
    const auto one = sample_presentation(1, parse_rational("0.4"), 3);
    REQUIRE(one.relators.size() == 1);
    CHECK(has_proper_power(one));
  }

  TEST_CASE("symmetry and proper powers") {
    CHECK_FALSE(relators_distinct_up_to_symmetry(with(3, {"abc", "bca"})));
    CHECK_FALSE(relators_distinct_up_to_symmetry(with(3, {"abc", "CBA"})));
    CHECK(relators_distinct_up_to_symmetry(with(3, {"aab", "abb"})));
    CHECK_FALSE(relators_distinct_up_to_symmetry(with(3, {"abc", "abc"})));
    CHECK(has_proper_power(with(3, {"aaa", "abc"})));
    CHECK_FALSE(has_proper_power(with(3, {"aab", "abb"})));
    CHECK(symmetry_class_representative(Word::parse(3, "bca")) == symmetry_class_representative(Word::parse(3, "ACB")));
  }

  TEST_CASE("relators are validated") {
    CHECK_THROWS_AS(with(2, {"aA"}), Error);
    CHECK_THROWS_AS(with(2, {"aAb"}), Error);
    CHECK_THROWS_AS(with(2, {"abA"}), Error);
  }

  TEST_CASE("exact rationals") {
    CHECK(parse_rational("0.38307") == Rational(38307, 100000));
    CHECK(parse_rational("-1.5e-3") == Rational(-3, 2000));
    CHECK(parse_rational("7/21") == Rational(1, 3));
    CHECK(to_string(Rational(6, 4)) == "3/2");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK(integer_root_floor(BigInt(1000000), 3) == 100);
    CHECK(integer_root_floor(BigInt(999999), 3) == 99);
  }
}
