#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "seqspace/errors.hpp"

namespace seqspace {

/// Exact kernel.  All structural identities (inversion, duality, transform
/// round trips) hold with equality over this type.
using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

enum class NumericMode { rational, floating };

const char* numeric_mode_name(NumericMode mode) noexcept;
NumericMode parse_numeric_mode(std::string_view name);

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline bool is_zero(double v) { return v == 0.0; }
inline bool is_zero(const Rational& v) { return v.is_zero(); }

inline double abs_value(double v) { return std::fabs(v); }
inline Rational abs_value(const Rational& v) {
  return v < 0 ? Rational(-v) : v;
}

template <class S>
S scalar_of(long long num, long long den = 1);

template <>
inline double scalar_of<double>(long long num, long long den) {
  return static_cast<double>(num) / static_cast<double>(den);
}

template <>
inline Rational scalar_of<Rational>(long long num, long long den) {
  if (den == 0) raise(errc::range_error, "rational with zero denominator");
  return Rational(num, den);
}

/// Accumulator for long mixed-sign sums.  The float kernel compensates the
/// rounding (Neumaier); exact kernels add directly.
template <class S>
class CompensatedSum {
 public:
  void add(const S& term) { sum_ += term; }
  S value() const { return sum_; }

 private:
  S sum_ = scalar_of<S>(0);
};

template <>
class CompensatedSum<double> {
 public:
  void add(double term) {
    double t = sum_ + term;
    if (std::fabs(sum_) >= std::fabs(term))
      comp_ += (sum_ - t) + term;
    else
      comp_ += (term - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

template <class S>
S from_rational(const Rational& q);

template <>
inline double from_rational<double>(const Rational& q) {
  return to_double(q);
}

template <>
inline Rational from_rational<Rational>(const Rational& q) {
  return q;
}

template <class S>
const char* scalar_name();

template <>
inline const char* scalar_name<double>() {
  return "float";
}

template <>
inline const char* scalar_name<Rational>() {
  return "rational";
}

/// base^e by binary exponentiation; exact over the rational kernel.
template <class S>
S int_pow(const S& base, unsigned long e) {
  S result = scalar_of<S>(1);
  S b = base;
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1UL;
  }
  return result;
}

/// C(n, k) via the multiplicative formula, evaluated in the active kernel.
/// Exact over rationals (the running product is an integer at every step).
template <class S>
S binomial_coefficient(unsigned long n, unsigned long k) {
  if (k > n) return scalar_of<S>(0);
  if (k > n - k) k = n - k;
  S result = scalar_of<S>(1);
  for (unsigned long i = 1; i <= k; ++i) {
    result *= scalar_of<S>(static_cast<long long>(n - k + i));
    result /= scalar_of<S>(static_cast<long long>(i));
  }
  return result;
}

/// Parses "3", "-7/2", "1.25", "2e3", "-1.5e-2" into an exact rational.
Rational parse_rational_literal(std::string_view text);

/// Exact rational equal to the shortest decimal round trip of v, so float
/// inputs convert deterministically.
Rational rational_from_double(double v);

/// "num/den" (or plain "num" when den = 1); inverse of parse_rational_literal.
std::string rational_to_string(const Rational& q);

/// floor(a^(1/m)) for a >= 0.
BigInt integer_nth_root(const BigInt& a, unsigned m);

/// Encloses value^(1/m) in [lo, hi] with hi - lo <= 2^(1 - precision_bits).
/// Requires value >= 0.  Used by exactness certificates for paranorm
/// inequalities: comparisons between enclosures are rigorous.
std::pair<Rational, Rational> nth_root_bounds(const Rational& value,
                                              unsigned m,
                                              unsigned precision_bits);

}  // namespace seqspace
