#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "seqspace/numeric.hpp"

namespace seqspace {

/// A scalar sequence given by an explicit prefix, a closed form, or a simple
/// combinator over another family.  Terms are produced exactly (as rationals)
/// and converted to the active kernel on demand, so the two numeric modes see
/// the same underlying sequence.
class SequenceFamily {
 public:
  enum class Kind {
    explicit_prefix,     // finitely many stored values, optional tail rule
    constant,            // c
    arithmetic,          // a0 + n*step
    geometric,           // a0 * ratio^n
    one_plus_geometric,  // 1 + alpha^n
    reciprocal,          // 1 / inner(n)
    difference,          // inner(n) - inner(n-1), inner(-1) = 0
  };

  static SequenceFamily ones();
  static SequenceFamily constant(Rational c);
  static SequenceFamily arithmetic(Rational a0, Rational step);
  static SequenceFamily geometric(Rational a0, Rational ratio);
  static SequenceFamily one_plus_geometric(Rational alpha);
  static SequenceFamily prefix(std::vector<Rational> values);
  static SequenceFamily prefix_then(std::vector<Rational> values,
                                    SequenceFamily tail);
  static SequenceFamily reciprocal(SequenceFamily inner);
  static SequenceFamily difference(SequenceFamily inner);

  /// Exact term; throws range_error for an explicit prefix without tail rule
  /// when n goes past the stored values, or when a reciprocal hits a zero.
  Rational term_rational(std::size_t n) const;

  template <class S>
  S term(std::size_t n) const {
    return from_rational<S>(term_rational(n));
  }

  Kind kind() const noexcept { return kind_; }
  std::string describe() const;

 private:
  SequenceFamily(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<Rational> prefix_;
  Rational a_{0};
  Rational b_{0};
  std::shared_ptr<const SequenceFamily> inner_;
};

/// The exponent sequence p = (p_k) of a Maddox-type space.  Entries must be
/// strictly positive and bounded; statistics (sup, outer exponent, conjugates)
/// are always taken over an explicit truncation window.
class ExponentSequence {
 public:
  static ExponentSequence constant(double p);
  static ExponentSequence from_list(std::vector<double> values);

  double at(std::size_t k) const;

  /// H = sup of p over [0, N].
  double sup(std::size_t N) const;
  /// M = max(1, H); the paranorm's outer exponent.
  double outer_exponent(std::size_t N) const;
  double inf(std::size_t N) const;

  /// p_k / (p_k - 1); requires p_k > 1.
  double conjugate_at(std::size_t k) const;

  bool all_greater_one(std::size_t N) const;
  bool all_at_most_one(std::size_t N) const;
  /// True when every p_k on [0, N] is a (small) positive integer, in which
  /// case power sums are exact over the rational kernel.
  bool integral_on(std::size_t N) const;

  bool is_constant() const noexcept { return constant_; }
  double constant_value() const;

  std::string describe() const;

 private:
  ExponentSequence() = default;
  bool constant_ = true;
  double value_ = 1.0;
  std::vector<double> values_;
};

}  // namespace seqspace
