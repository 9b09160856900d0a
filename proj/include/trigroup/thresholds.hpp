#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "trigroup/exact.hpp"

namespace trigroup {

/// Exact element a + b*sqrt(41) of the field Q(sqrt 41). Every constant in
/// the pipeline lives here, so all comparisons are exact.
class QuadraticSurd {
 public:
  static constexpr int kRadicand = 41;

  QuadraticSurd() = default;
  QuadraticSurd(Rational a) : a_(std::move(a)) {}  // NOLINT(implicit)
  QuadraticSurd(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  QuadraticSurd(long long a) : a_(a) {}  // NOLINT(implicit)

  const Rational& rational_part() const noexcept { return a_; }
  const Rational& root_part() const noexcept { return b_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  QuadraticSurd conjugate() const { return {a_, -b_}; }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) { return {x.a_ + y.a_, x.b_ + y.b_}; }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) { return {x.a_ - y.a_, x.b_ - y.b_}; }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    return {x.a_ * y.a_ + kRadicand * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y);
  QuadraticSurd operator-() const { return {-a_, -b_}; }

  friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend std::strong_ordering operator<=>(const QuadraticSurd& x, const QuadraticSurd& y) {
    const int s = (x - y).sign();
    return s < 0 ? std::strong_ordering::less : s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const;
  /// Fixed-point decimal with `digits` digits after the point, from a
  /// 100-digit binary float evaluation.
  std::string to_decimal(unsigned digits) const;
  /// "a + b*sqrt(41)" with exact rational parts.
  std::string to_exact_string() const;

 private:
  Rational a_;
  Rational b_;
};

using Surd = QuadraticSurd;

/// Conversion factor between the slim-triangle and acylindricity radii.
inline constexpr int kSlimFactor = 800;
/// Variant factor for the four-point definition of hyperbolicity.
inline constexpr int kFourPointFactor = 100;

/// 11/12 - sqrt(41)/12, the root of 18d^2 - 33d + 10 below 1/2.
Surd d_crit();

/// 4(3x - 1) / (3(1 - 2x)); throws for x >= 1/2.
Surd lhs(const Surd& x);
/// 2 - 3x; throws for x >= 1/2.
Surd rhs(const Surd& x);

/// Midpoint of d0 and d_crit; throws unless d0 < d_crit.
Surd d_prime(const Rational& d0);

/// Smallest k >= 1 with lhs(d') < rhs(d') - 1/k.
std::uint32_t min_k(const Rational& d0);

/// 12 / (1 - 2d); throws for d >= 1/2.
Rational delta_hyp(const Rational& d);

/// lhs(dp) * 2L + A1.
Surd e1_bound(const Surd& dp, const BigInt& L, const Rational& A1);

struct PipelineParams {
  Rational d0;
  Rational A1 = 0;
  Rational A2 = 0;
  Rational margin = 0;
  int slim_factor = kSlimFactor;
};

struct ConstantsReport {
  PipelineParams params;
  Surd d_crit;
  Surd d_prime;
  Surd epsilon;  // d' - d0
  Rational delta;
  Surd lhs;  // at d'
  Surd rhs;  // at d'
  Surd gap;  // rhs - lhs
  std::uint32_t k = 0;
  std::uint64_t pairs = 0;  // C(k+1, 2)
  Rational A3;
  BigInt L_floor;   // ceil(4 C delta + 4 delta + 2)
  BigInt L_strict;  // smallest L passing the strict inequality
  BigInt L;
  BigInt N;  // k * ceil(L + 2 C delta)^2
  Surd lower_at_L;
  Surd upper_at_L;
  Surd e1_bound;
  bool contradiction = false;  // upper_at_L < lower_at_L
};

ConstantsReport constants_pipeline(const PipelineParams& params);

struct SweepRow {
  Rational d0;
  Surd d_prime;
  std::uint32_t k = 0;
  BigInt L;
  BigInt N;
};

/// One pipeline run per grid point, in grid order.
std::vector<SweepRow> sweep(const std::vector<Rational>& grid, const PipelineParams& base);

}  // namespace trigroup
