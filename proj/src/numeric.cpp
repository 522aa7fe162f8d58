#include "seqspace/numeric.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace seqspace {

const char* errc_name(errc code) noexcept {
  switch (code) {
    case errc::zero_s0: return "zero-s0";
    case errc::zero_r: return "zero-r";
    case errc::zero_t: return "zero-t";
    case errc::oracle_scale_exceeded: return "oracle-scale-exceeded";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::bad_exponent: return "bad-exponent";
    case errc::mixed_exponent_regime: return "mixed-exponent-regime";
    case errc::index_out_of_range: return "index-out-of-range";
    case errc::range_error: return "range-error";
    case errc::parse_error: return "parse-error";
    case errc::invalid_config: return "invalid-config";
    case errc::series_divergence: return "series-divergence";
    case errc::numeric_policy: return "numeric-policy";
  }
  return "unknown";
}

const char* numeric_mode_name(NumericMode mode) noexcept {
  return mode == NumericMode::rational ? "rational" : "float";
}

NumericMode parse_numeric_mode(std::string_view name) {
  if (name == "rational") return NumericMode::rational;
  if (name == "float") return NumericMode::floating;
  raise(errc::invalid_config,
        "unknown numeric mode '" + std::string(name) + "' (rational|float)");
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

BigInt pow10(long e) {
  BigInt r = 1;
  for (long i = 0; i < e; ++i) r *= 10;
  return r;
}

}  // namespace

Rational parse_rational_literal(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  if (s.empty()) raise(errc::parse_error, "empty numeric literal");

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) raise(errc::parse_error, "sign without digits");

  auto fail = [&] {
    raise(errc::parse_error,
          "cannot parse numeric literal '" + std::string(text) + "'");
  };

  // The string constructor auto-detects octal/hex prefixes, so digit runs
  // must be fed to it without leading zeros.
  auto parse_digits = [](std::string_view d) {
    std::size_t i = 0;
    while (i + 1 < d.size() && d[i] == '0') ++i;
    return BigInt(std::string(d.substr(i)));
  };

  // a/b form
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    BigInt n = parse_digits(num);
    BigInt d = parse_digits(den);
    if (d == 0) raise(errc::parse_error, "zero denominator in literal");
    Rational q(n, d);
    return negative ? Rational(-q) : q;
  }

  // decimal with optional exponent
  long exponent10 = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    std::string_view expo = s.substr(epos + 1);
    s = s.substr(0, epos);
    bool eneg = false;
    if (!expo.empty() && (expo.front() == '+' || expo.front() == '-')) {
      eneg = expo.front() == '-';
      expo.remove_prefix(1);
    }
    if (!all_digits(expo)) fail();
    long e = 0;
    auto [ptr, ec] = std::from_chars(expo.data(), expo.data() + expo.size(), e);
    if (ec != std::errc() || ptr != expo.data() + expo.size() || e > 4096) fail();
    exponent10 = eneg ? -e : e;
  }

  std::string digits;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) fail();
    if (!ip.empty() && !all_digits(ip)) fail();
    if (!fp.empty() && !all_digits(fp)) fail();
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) fail();
    digits = std::string(s);
  }
  if (digits.empty()) fail();

  BigInt mantissa = parse_digits(digits);
  long net = exponent10 - frac_digits;
  Rational q = net >= 0 ? Rational(mantissa * pow10(net))
                        : Rational(mantissa, pow10(-net));
  return negative ? Rational(-q) : q;
}

Rational rational_from_double(double v) {
  if (!std::isfinite(v))
    raise(errc::numeric_policy, "nonfinite value cannot become a rational");
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc()) raise(errc::numeric_policy, "double format failure");
  return parse_rational_literal(std::string_view(buf, ptr - buf));
}

std::string rational_to_string(const Rational& q) {
  std::string num = numerator(q).str();
  if (denominator(q) == 1) return num;
  return num + "/" + denominator(q).str();
}

BigInt integer_nth_root(const BigInt& a, unsigned m) {
  if (a < 0) raise(errc::range_error, "nth root of a negative integer");
  if (m == 0) raise(errc::range_error, "zeroth root");
  if (a == 0 || a == 1 || m == 1) return a;

  unsigned long bits = boost::multiprecision::msb(a) + 1;
  BigInt x = BigInt(1) << (bits / m + 1);
  // Newton iteration for floor(a^(1/m)); descending once above the root.
  while (true) {
    BigInt xm1 = 1;
    for (unsigned i = 0; i + 1 < m; ++i) xm1 *= x;
    BigInt next = ((m - 1) * x + a / xm1) / m;
    if (next >= x) break;
    x = next;
  }
  // Guard against off-by-one at the boundary.
  auto pow_m = [&](const BigInt& b) {
    BigInt r = 1;
    for (unsigned i = 0; i < m; ++i) r *= b;
    return r;
  };
  while (pow_m(x) > a) --x;
  while (pow_m(x + 1) <= a) ++x;
  return x;
}

std::pair<Rational, Rational> nth_root_bounds(const Rational& value,
                                              unsigned m,
                                              unsigned precision_bits) {
  if (value < 0) raise(errc::range_error, "nth root of a negative rational");
  if (value == 0) return {Rational(0), Rational(0)};
  BigInt scale = BigInt(1) << precision_bits;
  BigInt scale_m = 1;
  for (unsigned i = 0; i < m; ++i) scale_m *= scale;
  BigInt scaled = numerator(value) * scale_m / denominator(value);
  BigInt w = integer_nth_root(scaled, m);
  // w/scale <= value^(1/m) < (w+2)/scale: the floor division loses < 1,
  // and (w+2)^m >= (w+1)^m + 1 > scaled + 1 covers it.
  return {Rational(w, scale), Rational(w + 2, scale)};
}

}  // namespace seqspace
