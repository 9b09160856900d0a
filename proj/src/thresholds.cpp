#include "trigroup/thresholds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <sstream>

#include "trigroup/error.hpp"

namespace trigroup {

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

int sign_of(const Rational& q) { return q > 0 ? 1 : q < 0 ? -1 : 0; }

Float to_float(const Rational& q) {
  return Float(boost::multiprecision::numerator(q)) / Float(boost::multiprecision::denominator(q));
}

Float to_float(const Surd& x) {
  return to_float(x.rational_part()) + to_float(x.root_part()) * boost::multiprecision::sqrt(Float(Surd::kRadicand));
}

void require_below_half(const Surd& x, const char* what) {
  if (x >= Surd(Rational(1, 2))) fail(ErrorCode::InvalidArgument, std::string(what) + " needs an argument below 1/2 (pole)");
}

}  // namespace

int QuadraticSurd::sign() const {
  const int sa = sign_of(a_);
  const int sb = sign_of(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with 41 b^2 (never equal, sqrt 41 is irrational).
  return a_ * a_ > kRadicand * b_ * b_ ? sa : sb;
}

QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
  const Rational norm = y.a_ * y.a_ - QuadraticSurd::kRadicand * y.b_ * y.b_;
  if (norm == 0) fail(ErrorCode::InvalidArgument, "division by zero");
  const QuadraticSurd num = x * y.conjugate();
  return {num.a_ / norm, num.b_ / norm};
}

BigInt QuadraticSurd::floor() const {
  if (is_rational()) return floor_of(a_);
  BigInt n = boost::multiprecision::floor(to_float(*this)).convert_to<BigInt>();
  while (QuadraticSurd(Rational(n)) > *this) n -= 1;
  while (QuadraticSurd(Rational(n + 1)) <= *this) n += 1;
  return n;
}

BigInt QuadraticSurd::ceil() const { return -(-*this).floor(); }

double QuadraticSurd::to_double() const { return to_float(*this).convert_to<double>(); }

std::string QuadraticSurd::to_decimal(unsigned digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << std::fixed << to_float(*this);
  return os.str();
}

std::string QuadraticSurd::to_exact_string() const {
  if (is_rational()) return to_string(a_);
  return to_string(a_) + " + (" + to_string(b_) + ")*sqrt(41)";
}

Surd d_crit() { return {Rational(11, 12), Rational(-1, 12)}; }

Surd lhs(const Surd& x) {
  require_below_half(x, "lhs");
  return Surd(4) * (Surd(3) * x - Surd(1)) / (Surd(3) * (Surd(1) - Surd(2) * x));
}

Surd rhs(const Surd& x) {
  require_below_half(x, "rhs");
  return Surd(2) - Surd(3) * x;
}

Surd d_prime(const Rational& d0) {
  if (Surd(d0) >= d_crit()) fail(ErrorCode::Precondition, "d0 = " + to_string(d0) + " is not below d_crit");
  return (Surd(d0) + d_crit()) / Surd(2);
}

std::uint32_t min_k(const Rational& d0) {
  const Surd dp = d_prime(d0);
  const Surd gap = rhs(dp) - lhs(dp);
  if (gap <= Surd(0)) fail(ErrorCode::Precondition, "no gap between lhs and rhs at d'");
  // lhs < rhs - 1/k  <=>  k > 1/gap
  const BigInt k = (Surd(1) / gap).floor() + 1;
  return std::max<std::uint32_t>(1, k.convert_to<std::uint32_t>());
}

Rational delta_hyp(const Rational& d) {
  if (d >= Rational(1, 2)) fail(ErrorCode::InvalidArgument, "delta_hyp needs d below 1/2 (pole)");
  return Rational(12) / (1 - 2 * d);
}

Surd e1_bound(const Surd& dp, const BigInt& L, const Rational& A1) {
  if (L < 1) fail(ErrorCode::InvalidArgument, "L must be at least 1");
  return lhs(dp) * Surd(Rational(2 * L)) + Surd(A1);
}

ConstantsReport constants_pipeline(const PipelineParams& params) {
  if (params.slim_factor <= 0) fail(ErrorCode::InvalidArgument, "slim factor must be positive");
  if (params.margin < 0) fail(ErrorCode::InvalidArgument, "margin must be nonnegative");
  ConstantsReport r;
  r.params = params;
  r.d_crit = d_crit();
  r.d_prime = d_prime(params.d0);
  r.epsilon = r.d_prime - Surd(params.d0);
  r.delta = delta_hyp(params.d0);
  r.lhs = lhs(r.d_prime);
  r.rhs = rhs(r.d_prime);
  r.gap = r.rhs - r.lhs;
  r.k = min_k(params.d0);
  const std::uint64_t k = r.k;
  r.pairs = (k + 1) * k / 2;
  const Rational pairs(r.pairs);
  r.A3 = pairs * params.A1 - params.A2;

  const Rational C(params.slim_factor);
  r.L_floor = ceil_of(4 * C * r.delta + 4 * r.delta + 2);

  // alpha L + A3 + margin < beta L
  const Surd alpha = Surd(pairs * 2) * r.lhs;
  const Surd beta = Surd(pairs * 3) * (Surd(1) - Surd(2) * r.d_prime) +
                    Surd(Rational((static_cast<std::int64_t>(k) + 1) * (static_cast<std::int64_t>(k) - 2), 2));
  const Surd slope = beta - alpha;
  if (slope <= Surd(0)) fail(ErrorCode::Precondition, "both bounds grow at the same rate; no L separates them");
  r.L_strict = (Surd(r.A3 + params.margin) / slope).floor() + 1;
  r.L = std::max({r.L_floor, r.L_strict, BigInt(1)});

  const BigInt width = ceil_of(Rational(r.L) + 2 * C * r.delta);
  r.N = BigInt(k) * width * width;

  const Surd L(Rational(r.L));
  r.lower_at_L = Surd(pairs * 3) * (Surd(1) - Surd(2) * r.d_prime) * L +
                    Surd(Rational((static_cast<std::int64_t>(k) + 1) * (static_cast<std::int64_t>(k) - 2), 2)) * L +
                    Surd(params.A2);
  r.upper_at_L = Surd(pairs) * r.lhs * Surd(2) * L + Surd(pairs * params.A1);
  r.e1_bound = e1_bound(r.d_prime, r.L, params.A1);
  r.contradiction = r.upper_at_L < r.lower_at_L;
  return r;
}

std::vector<SweepRow> sweep(const std::vector<Rational>& grid, const PipelineParams& base) {
  std::vector<SweepRow> rows;
  for (const Rational& d0 : grid) {
    PipelineParams p = base;
    p.d0 = d0;
    const ConstantsReport r = constants_pipeline(p);
    rows.push_back({d0, r.d_prime, r.k, r.L, r.N});
  }
  return rows;
}

}  // namespace trigroup
