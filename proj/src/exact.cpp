#include "trigroup/exact.hpp"

#include <cctype>

#include "trigroup/error.hpp"

namespace trigroup {

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (s.empty()) fail(ErrorCode::Parse, "malformed number \"" + std::string(whole) + "\"");
  BigInt v = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      fail(ErrorCode::Parse, "malformed number \"" + std::string(whole) + "\"");
    }
    v = v * 10 + (c - '0');
  }
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) fail(ErrorCode::Parse, "empty number");

  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt p = parse_integer(text.substr(0, slash), whole);
    const BigInt q = parse_integer(text.substr(slash + 1), whole);
    if (q == 0) fail(ErrorCode::Parse, "zero denominator in \"" + std::string(whole) + "\"");
    value = Rational(p, q);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      const BigInt ev = parse_integer(exp_part, whole);
      if (ev > 10000) fail(ErrorCode::Parse, "exponent too large in \"" + std::string(whole) + "\"");
      exponent = ev.convert_to<long>();
      if (exp_negative) exponent = -exponent;
      text = text.substr(0, e);
    }
    std::string digits;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      const std::string_view int_part = text.substr(0, dot);
      const std::string_view frac_part = text.substr(dot + 1);
      if (int_part.empty() && frac_part.empty()) fail(ErrorCode::Parse, "malformed number \"" + std::string(whole) + "\"");
      digits = std::string(int_part) + std::string(frac_part);
      exponent -= static_cast<long>(frac_part.size());
    } else {
      digits = std::string(text);
    }
    const BigInt mantissa = parse_integer(digits, whole);
    BigInt scale = 1;
    for (long i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) scale *= 10;
    value = exponent >= 0 ? Rational(mantissa * scale) : Rational(mantissa, scale);
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt floor_of(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  BigInt quot = num / den;  // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

BigInt ceil_of(const Rational& q) { return -floor_of(Rational(-q)); }

BigInt integer_root_floor(const BigInt& x, unsigned k) {
  if (x < 0 || k == 0) fail(ErrorCode::InvalidArgument, "integer_root_floor needs x >= 0 and k >= 1");
  if (x < 2 || k == 1) return x;
  // Bisection on [0, 2^(bits/k + 1)].
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1;
  BigInt lo = 0;
  BigInt hi = BigInt(1) << (bits / k + 1);
  while (lo < hi) {
    const BigInt mid = (lo + hi + 1) >> 1;
    if (boost::multiprecision::pow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace trigroup
