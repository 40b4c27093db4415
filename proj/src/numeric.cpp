#include "joints/numeric.hpp"

#include "joints/error.hpp"

#include <cctype>
#include <cmath>

namespace joints {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::InvalidParam: return "InvalidParam";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::IsTuranGraph: return "IsTuranGraph";
    case ErrorKind::IndivisibleOrder: return "IndivisibleOrder";
    case ErrorKind::UnknownBound: return "UnknownBound";
    case ErrorKind::MissingInput: return "MissingInput";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational rpow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

BigInt floor_div(const Rational& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt q = num / den;
  if (num % den != 0 && num < 0) q -= 1;
  return q;
}

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) { return numerator(x).str() + "/" + denominator(x).str(); }

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::ParseError, "empty number");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw Error(ErrorKind::ParseError, "bad number '" + std::string(text) + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
    return Rational(parse_integer(text.substr(0, slash)), den);
  }
  std::int64_t exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<std::int64_t>(parse_integer(text.substr(e + 1)));
    text = text.substr(0, e);
  }
  std::string digits(text);
  if (auto dot = digits.find('.'); dot != std::string::npos) {
    exponent -= static_cast<std::int64_t>(digits.size() - dot - 1);
    digits.erase(dot, 1);
  }
  Rational value(parse_integer(digits));
  Rational ten_power = rpow(Rational(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  return exponent < 0 ? Rational(value / ten_power) : Rational(value * ten_power);
}

double Surd::approx() const {
  return rational.convert_to<double>() + coefficient.convert_to<double>() * std::sqrt(radicand.convert_to<double>());
}

int compare_sqrt(const Rational& a, const Rational& b) {
  if (b < 0) return 1;
  Rational b2 = b * b;
  if (a > b2) return 1;
  if (a < b2) return -1;
  return 0;
}

int compare(const Rational& x, const Surd& s) {
  // x - rational  vs  coefficient * sqrt(radicand)
  Rational lhs = x - s.rational;
  if (s.is_rational()) return lhs > 0 ? 1 : (lhs < 0 ? -1 : 0);
  if (s.radicand < 0) throw Error(ErrorKind::InvalidParam, "negative radicand");
  Rational c2r = s.coefficient * s.coefficient * s.radicand;
  int rhs_sign = s.coefficient > 0 ? 1 : -1;
  int lhs_sign = lhs > 0 ? 1 : (lhs < 0 ? -1 : 0);
  if (lhs_sign != rhs_sign) return lhs_sign > rhs_sign ? 1 : -1;
  Rational l2 = lhs * lhs;
  int magnitude = l2 > c2r ? 1 : (l2 < c2r ? -1 : 0);
  return rhs_sign > 0 ? magnitude : -magnitude;
}

}  // namespace joints
