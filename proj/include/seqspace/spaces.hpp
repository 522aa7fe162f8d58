#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "seqspace/triangles.hpp"

namespace seqspace {

/// Value of the paranorm together with its power sum.  In the rational kernel
/// with integer exponents, sum_powers and last_term_power are exact and
/// exact_sum is set; the outer (1/M)-th root is always reported as a double.
template <class S>
struct ParanormResult {
  double value = 0.0;
  double last_term = 0.0;  // |y_N|^(p_N), the truncation diagnostic
  S sum_powers = scalar_of<S>(0);
  S last_term_power = scalar_of<S>(0);
  bool exact_sum = false;
};

template <class S>
struct NormResult {
  double value = 0.0;
  S sum_powers = scalar_of<S>(0);
  bool exact_sum = false;
};

template <class S>
struct ReconstructionStep {
  std::vector<S> partial;
  ParanormResult<S> remainder;
};

/// The sequence space determined by SpaceParams at a fixed truncation window.
/// Forward/inverse transforms, paranorm, norm, basis vectors and basis
/// reconstructions all live here.  The two triangle caches are write-once.
template <class S>
class Space {
 public:
  Space(SpaceParams params, std::size_t truncation)
      : params_(std::move(params)), N_(truncation) {
    params_.validate(N_);
    d_ = compute_d_coefficients<S>(params_.s, N_);
  }

  const SpaceParams& params() const noexcept { return params_; }
  std::size_t truncation() const noexcept { return N_; }

  const TriangleMatrix<S>& composite() const {
    if (!composite_) composite_.emplace(build_composite<S>(params_, N_));
    return *composite_;
  }

  const TriangleMatrix<S>& inverse_composite() const {
    if (!inverse_) inverse_.emplace(build_inverse_composite<S>(params_, N_));
    return *inverse_;
  }

  /// y = A(r,s,t) Delta^(m) x, computed in stages: m first-difference passes,
  /// then the means triangle.  Agreement with the composite kernel matrix is
  /// a library invariant exercised by the tests.
  std::vector<S> forward(std::span<const S> x) const {
    require_window(x.size());
    std::vector<S> z(x.begin(), x.end());
    for (unsigned pass = 0; pass < params_.m; ++pass)
      for (std::size_t n = N_ + 1; n-- > 1;) z[n] -= z[n - 1];
    std::vector<S> y(N_ + 1, scalar_of<S>(0));
    for (std::size_t n = 0; n <= N_; ++n) {
      S acc = scalar_of<S>(0);
      for (std::size_t k = 0; k <= n; ++k)
        acc += params_.s.term<S>(n - k) * params_.t.term<S>(k) * z[k];
      y[n] = acc / params_.r.term<S>(n);
    }
    return y;
  }

  /// x = G^(-1) y via the materialized inverse composite.
  std::vector<S> inverse(std::span<const S> y) const {
    require_window(y.size());
    return inverse_composite().apply(y);
  }

  ParanormResult<S> paranorm(std::span<const S> x) const {
    std::vector<S> y = forward(x);
    return paranorm_of_image(y);
  }

  /// Paranorm evaluated directly on an image sequence y:
  /// h(x) = (sum |y_n|^(p_n))^(1/M).
  ParanormResult<S> paranorm_of_image(std::span<const S> y) const {
    require_window(y.size());
    ParanormResult<S> out;
    double M = params_.p.outer_exponent(N_);
    if constexpr (std::is_same_v<S, Rational>) {
      if (params_.p.integral_on(N_)) {
        out.exact_sum = true;
        S sum = scalar_of<S>(0);
        for (std::size_t n = 0; n <= N_; ++n) {
          S term = int_pow(abs_value(y[n]),
                           static_cast<unsigned long>(params_.p.at(n)));
          sum += term;
          if (n == N_) out.last_term_power = term;
        }
        out.sum_powers = sum;
        out.value = std::pow(to_double(sum), 1.0 / M);
        out.last_term = to_double(out.last_term_power);
        return out;
      }
    }
    double sum = 0.0;
    double last = 0.0;
    for (std::size_t n = 0; n <= N_; ++n) {
      double term = std::pow(std::fabs(to_double(y[n])), params_.p.at(n));
      sum += term;
      if (n == N_) last = term;
    }
    if (!std::isfinite(sum))
      raise(errc::numeric_policy, "paranorm power sum overflowed");
    out.sum_powers = from_rational<S>(rational_from_double(sum));
    out.value = std::pow(sum, 1.0 / M);
    out.last_term = last;
    return out;
  }

  /// BK-norm for constant exponent p >= 1: the l_p norm of the image.
  NormResult<S> bk_norm(std::span<const S> x, double p) const {
    if (!(p >= 1.0) || !std::isfinite(p))
      raise(errc::bad_exponent, "bk_norm needs a constant exponent p >= 1");
    std::vector<S> y = forward(x);
    NormResult<S> out;
    if constexpr (std::is_same_v<S, Rational>) {
      if (p == std::floor(p) && p <= 64.0) {
        out.exact_sum = true;
        S sum = scalar_of<S>(0);
        for (std::size_t n = 0; n <= N_; ++n)
          sum += int_pow(abs_value(y[n]), static_cast<unsigned long>(p));
        out.sum_powers = sum;
        out.value = std::pow(to_double(sum), 1.0 / p);
        return out;
      }
    }
    double sum = 0.0;
    for (std::size_t n = 0; n <= N_; ++n)
      sum += std::pow(std::fabs(to_double(y[n])), p);
    if (!std::isfinite(sum))
      raise(errc::numeric_policy, "norm power sum overflowed");
    out.sum_powers = from_rational<S>(rational_from_double(sum));
    out.value = std::pow(sum, 1.0 / p);
    return out;
  }

  /// j-th basis vector: zero through n = j-1, then
  ///   b_n = sum_{k=j}^{n} (-1)^(k-j) C(m+n-k-1, n-k) D_{k-j} r_j / t_k.
  /// Evaluated from this display directly; column extraction from the inverse
  /// composite is the oracle in the tests.
  std::vector<S> basis_vector(std::size_t j) const {
    if (j > N_)
      raise(errc::index_out_of_range, "basis index beyond truncation");
    std::vector<S> b(N_ + 1, scalar_of<S>(0));
    S rj = params_.r.term<S>(j);
    for (std::size_t n = j; n <= N_; ++n) {
      S acc = scalar_of<S>(0);
      for (std::size_t k = j; k <= n; ++k) {
        S term = binomial_coefficient<S>(params_.m + n - k - 1, n - k) *
                 d_.values[k - j] / params_.t.term<S>(k);
        if ((k - j) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      b[n] = acc * rj;
    }
    return b;
  }

  /// Partial basis expansion sum_{j<=J} mu_j b^(j) with mu = forward(x), and
  /// the paranorm of what is left.  The remainder is formed and transformed
  /// explicitly; no shortcut through the inversion identity.
  ReconstructionStep<S> reconstruct(std::span<const S> x, std::size_t J) const {
    require_window(x.size());
    if (J > N_)
      raise(errc::index_out_of_range, "reconstruction cutoff beyond truncation");
    std::vector<S> mu = forward(x);
    std::vector<S> partial = partial_expansion(mu, J);
    return finish_step(x, std::move(partial));
  }

  /// Remainder paranorms for every cutoff J = 0..Jmax, reusing one forward
  /// transform and extending the partial expansion incrementally.
  std::vector<ParanormResult<S>> reconstruction_curve(std::span<const S> x,
                                                      std::size_t Jmax) const {
    require_window(x.size());
    if (Jmax > N_)
      raise(errc::index_out_of_range, "reconstruction cutoff beyond truncation");
    std::vector<S> mu = forward(x);
    const TriangleMatrix<S>& inv = inverse_composite();
    std::vector<S> partial(N_ + 1, scalar_of<S>(0));
    std::vector<ParanormResult<S>> curve;
    curve.reserve(Jmax + 1);
    for (std::size_t J = 0; J <= Jmax; ++J) {
      for (std::size_t n = J; n <= N_; ++n)
        partial[n] += mu[J] * inv.at(n, J);
      std::vector<S> remainder(N_ + 1);
      for (std::size_t n = 0; n <= N_; ++n) remainder[n] = x[n] - partial[n];
      curve.push_back(paranorm(remainder));
    }
    return curve;
  }

 private:
  void require_window(std::size_t len) const {
    if (len != N_ + 1)
      raise(errc::dimension_mismatch,
            "vector length " + std::to_string(len) +
                " does not match truncation window " + std::to_string(N_ + 1));
  }

  std::vector<S> partial_expansion(const std::vector<S>& mu,
                                   std::size_t J) const {
    const TriangleMatrix<S>& inv = inverse_composite();
    std::vector<S> partial(N_ + 1, scalar_of<S>(0));
    for (std::size_t n = 0; n <= N_; ++n) {
      S acc = scalar_of<S>(0);
      for (std::size_t j = 0; j <= std::min(n, J); ++j)
        acc += mu[j] * inv.at(n, j);
      partial[n] = acc;
    }
    return partial;
  }

  ReconstructionStep<S> finish_step(std::span<const S> x,
                                    std::vector<S> partial) const {
    std::vector<S> remainder(N_ + 1);
    for (std::size_t n = 0; n <= N_; ++n) remainder[n] = x[n] - partial[n];
    ReconstructionStep<S> step;
    step.remainder = paranorm(remainder);
    step.partial = std::move(partial);
    return step;
  }

  SpaceParams params_;
  std::size_t N_;
  DCoefficients<S> d_;
  mutable std::optional<TriangleMatrix<S>> composite_;
  mutable std::optional<TriangleMatrix<S>> inverse_;
};

}  // namespace seqspace
