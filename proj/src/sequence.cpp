#include "seqspace/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace seqspace {

SequenceFamily SequenceFamily::ones() { return constant(Rational(1)); }

SequenceFamily SequenceFamily::constant(Rational c) {
  SequenceFamily f(Kind::constant);
  f.a_ = std::move(c);
  return f;
}

SequenceFamily SequenceFamily::arithmetic(Rational a0, Rational step) {
  SequenceFamily f(Kind::arithmetic);
  f.a_ = std::move(a0);
  f.b_ = std::move(step);
  return f;
}

SequenceFamily SequenceFamily::geometric(Rational a0, Rational ratio) {
  SequenceFamily f(Kind::geometric);
  f.a_ = std::move(a0);
  f.b_ = std::move(ratio);
  return f;
}

SequenceFamily SequenceFamily::one_plus_geometric(Rational alpha) {
  SequenceFamily f(Kind::one_plus_geometric);
  f.a_ = std::move(alpha);
  return f;
}

SequenceFamily SequenceFamily::prefix(std::vector<Rational> values) {
  if (values.empty())
    raise(errc::invalid_config, "explicit sequence needs at least one value");
  SequenceFamily f(Kind::explicit_prefix);
  f.prefix_ = std::move(values);
  return f;
}

SequenceFamily SequenceFamily::prefix_then(std::vector<Rational> values,
                                           SequenceFamily tail) {
  SequenceFamily f = prefix(std::move(values));
  f.inner_ = std::make_shared<SequenceFamily>(std::move(tail));
  return f;
}

SequenceFamily SequenceFamily::reciprocal(SequenceFamily inner) {
  SequenceFamily f(Kind::reciprocal);
  f.inner_ = std::make_shared<SequenceFamily>(std::move(inner));
  return f;
}

SequenceFamily SequenceFamily::difference(SequenceFamily inner) {
  SequenceFamily f(Kind::difference);
  f.inner_ = std::make_shared<SequenceFamily>(std::move(inner));
  return f;
}

Rational SequenceFamily::term_rational(std::size_t n) const {
  switch (kind_) {
    case Kind::explicit_prefix:
      if (n < prefix_.size()) return prefix_[n];
      if (inner_) return inner_->term_rational(n);
      raise(errc::range_error,
            "term " + std::to_string(n) + " requested beyond explicit prefix of length " +
                std::to_string(prefix_.size()) + " (no tail rule)");
    case Kind::constant:
      return a_;
    case Kind::arithmetic:
      return a_ + Rational(static_cast<long>(n)) * b_;
    case Kind::geometric:
      return a_ * int_pow(b_, static_cast<unsigned long>(n));
    case Kind::one_plus_geometric:
      return Rational(1) + int_pow(a_, static_cast<unsigned long>(n));
    case Kind::reciprocal: {
      Rational v = inner_->term_rational(n);
      if (v.is_zero())
        raise(errc::range_error,
              "reciprocal of a zero term at index " + std::to_string(n));
      return Rational(1) / v;
    }
    case Kind::difference: {
      Rational v = inner_->term_rational(n);
      if (n == 0) return v;
      return v - inner_->term_rational(n - 1);
    }
  }
  raise(errc::invalid_config, "corrupt sequence family");
}

std::string SequenceFamily::describe() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::explicit_prefix: {
      out << "prefix[";
      for (std::size_t i = 0; i < prefix_.size(); ++i) {
        if (i) out << ",";
        out << rational_to_string(prefix_[i]);
      }
      out << "]";
      if (inner_) out << "+" << inner_->describe();
      break;
    }
    case Kind::constant:
      out << "constant(" << rational_to_string(a_) << ")";
      break;
    case Kind::arithmetic:
      out << "arithmetic(" << rational_to_string(a_) << ","
          << rational_to_string(b_) << ")";
      break;
    case Kind::geometric:
      out << "geometric(" << rational_to_string(a_) << ","
          << rational_to_string(b_) << ")";
      break;
    case Kind::one_plus_geometric:
      out << "onePlusPower(" << rational_to_string(a_) << ")";
      break;
    case Kind::reciprocal:
      out << "reciprocal(" << inner_->describe() << ")";
      break;
    case Kind::difference:
      out << "difference(" << inner_->describe() << ")";
      break;
  }
  return out.str();
}

ExponentSequence ExponentSequence::constant(double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    raise(errc::bad_exponent, "exponents must be strictly positive and finite");
  ExponentSequence e;
  e.constant_ = true;
  e.value_ = p;
  return e;
}

ExponentSequence ExponentSequence::from_list(std::vector<double> values) {
  if (values.empty())
    raise(errc::bad_exponent, "exponent list needs at least one value");
  for (double v : values)
    if (!(v > 0.0) || !std::isfinite(v))
      raise(errc::bad_exponent, "exponents must be strictly positive and finite");
  ExponentSequence e;
  e.constant_ = false;
  e.values_ = std::move(values);
  return e;
}

double ExponentSequence::at(std::size_t k) const {
  if (constant_) return value_;
  if (k >= values_.size())
    raise(errc::range_error,
          "exponent index " + std::to_string(k) + " beyond explicit list of length " +
              std::to_string(values_.size()));
  return values_[k];
}

double ExponentSequence::sup(std::size_t N) const {
  if (constant_) return value_;
  double h = 0.0;
  for (std::size_t k = 0; k <= N; ++k) h = std::max(h, at(k));
  return h;
}

double ExponentSequence::outer_exponent(std::size_t N) const {
  return std::max(1.0, sup(N));
}

double ExponentSequence::inf(std::size_t N) const {
  if (constant_) return value_;
  double h = at(0);
  for (std::size_t k = 1; k <= N; ++k) h = std::min(h, at(k));
  return h;
}

double ExponentSequence::conjugate_at(std::size_t k) const {
  double p = at(k);
  if (!(p > 1.0))
    raise(errc::bad_exponent,
          "conjugate exponent requested at p_k = " + std::to_string(p) +
              " <= 1");
  return p / (p - 1.0);
}

bool ExponentSequence::all_greater_one(std::size_t N) const {
  for (std::size_t k = 0; k <= N; ++k)
    if (!(at(k) > 1.0)) return false;
  return true;
}

bool ExponentSequence::all_at_most_one(std::size_t N) const {
  for (std::size_t k = 0; k <= N; ++k)
    if (at(k) > 1.0) return false;
  return true;
}

bool ExponentSequence::integral_on(std::size_t N) const {
  for (std::size_t k = 0; k <= N; ++k) {
    double p = at(k);
    if (p != std::floor(p) || p > 64.0) return false;
  }
  return true;
}

double ExponentSequence::constant_value() const {
  if (!constant_)
    raise(errc::bad_exponent, "exponent sequence is not constant");
  return value_;
}

std::string ExponentSequence::describe() const {
  if (constant_) {
    std::ostringstream out;
    out << "constant(" << value_ << ")";
    return out.str();
  }
  std::ostringstream out;
  out << "list[";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out << ",";
    out << values_[i];
  }
  out << "]";
  return out.str();
}

}  // namespace seqspace
