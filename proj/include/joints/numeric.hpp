#pragma once

// Exact integer and rational arithmetic used by every verdict in the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace joints {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(const BigInt& num, const BigInt& den) { return Rational(num, den); }

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt ipow(const BigInt& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

BigInt floor_div(const Rational& x);

std::string to_string(const BigInt& x);
/// Always "p/q" with q > 0, including q = 1.
std::string to_string(const Rational& x);
/// Accepts "p/q", an integer, or a finite decimal such as "0.0001" or "1e-4".
Rational parse_rational(std::string_view text);

/// rational + coefficient * sqrt(radicand), radicand >= 0.
///
/// Only the stability bounds need this: they involve sqrt(alpha), which is
/// irrational in general. Comparisons against a rational are decided exactly
/// by sign analysis and squaring.
struct Surd {
  Rational rational{0};
  Rational coefficient{0};
  Rational radicand{0};

  bool is_rational() const { return coefficient == 0 || radicand == 0; }
  double approx() const;
};

/// Sign of (x - s): -1, 0 or +1.
int compare(const Rational& x, const Surd& s);

/// Sign of sqrt(a) vs b for a >= 0, i.e. sign(sqrt(a) - b).
int compare_sqrt(const Rational& a, const Rational& b);

}  // namespace joints
