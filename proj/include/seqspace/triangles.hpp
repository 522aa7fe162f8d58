#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

#include "seqspace/params.hpp"
#include "seqspace/triangle.hpp"

namespace seqspace {

/// Coefficients D_0, D_1, ... of the inverse of the generalized-means
/// triangle.  D_0 = 1/s_0 and, for nu >= 1, the convolution
///   sum_{u=0}^{nu} (-1)^u D_u s_{nu-u} = 0,
/// which pins each D_nu from its predecessors.
template <class S>
struct DCoefficients {
  std::vector<S> values;
  bool loss_of_precision = false;  // float kernel: an intermediate passed the
                                   // magnitude policy bound

  const S& operator[](std::size_t i) const { return values[i]; }
  std::size_t size() const noexcept { return values.size(); }
};

inline constexpr double kMagnitudePolicyBound = 1e150;

template <class S>
DCoefficients<S> compute_d_coefficients(const SequenceFamily& s,
                                        std::size_t count_through) {
  Rational s0 = s.term_rational(0);
  if (s0.is_zero()) raise(errc::zero_s0, "s_0 = 0: D coefficients undefined");

  DCoefficients<S> d;
  d.values.reserve(count_through + 1);
  d.values.push_back(scalar_of<S>(1) / s.term<S>(0));
  for (std::size_t nu = 1; nu <= count_through; ++nu) {
    // (-1)^nu D_nu s_0 = -sum_{u<nu} (-1)^u D_u s_{nu-u}, hence
    // D_nu = (-1)^(nu+1) acc / s_0 with acc the alternating partial sum.
    S acc = scalar_of<S>(0);
    for (std::size_t u = 0; u < nu; ++u) {
      S term = d.values[u] * s.term<S>(nu - u);
      if (u % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    S value = acc / s.term<S>(0);
    if (nu % 2 == 0) value = -value;
    d.values.push_back(value);
    if constexpr (std::is_same_v<S, double>) {
      double mag = std::fabs(d.values.back());
      if (!std::isfinite(mag))
        raise(errc::numeric_policy, "nonfinite D coefficient in float mode");
      if (mag > kMagnitudePolicyBound) d.loss_of_precision = true;
    }
  }
  return d;
}

/// Literal determinant expression for D_n (size cap 8): D_n equals
/// det of the n x n band matrix with (i,j) entry s_{i+1-j}, divided by
/// s_0^{n+1}.  Kept as a test oracle for the recurrence.
template <class S>
S determinant_oracle_d(const SequenceFamily& s, unsigned n) {
  if (n > 8)
    raise(errc::oracle_scale_exceeded,
          "determinant oracle capped at n = 8, requested " + std::to_string(n));
  Rational s0 = s.term_rational(0);
  if (s0.is_zero()) raise(errc::zero_s0, "s_0 = 0: D coefficients undefined");
  if (n == 0) return scalar_of<S>(1) / s.term<S>(0);

  std::vector<std::vector<S>> mat(n, std::vector<S>(n, scalar_of<S>(0)));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (j <= i + 1) mat[i][j] = s.term<S>(i + 1 - j);

  // Laplace expansion along the first row; n <= 8 keeps this honest and fast.
  struct Det {
    static S run(const std::vector<std::vector<S>>& a,
                 std::vector<unsigned> cols, unsigned row) {
      if (cols.size() == 1) return a[row][cols[0]];
      S acc = scalar_of<S>(0);
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const S& pivot = a[row][cols[c]];
        if (is_zero(pivot)) continue;
        std::vector<unsigned> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
          if (j != c) rest.push_back(cols[j]);
        S sub = run(a, rest, row + 1);
        S term = pivot * sub;
        if (c % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      return acc;
    }
  };
  std::vector<unsigned> cols(n);
  for (unsigned j = 0; j < n; ++j) cols[j] = j;
  S det = Det::run(mat, cols, 0);
  S denom = int_pow(s.term<S>(0), n + 1);
  return det / denom;
}

/// A(r,s,t): a_nk = s_{n-k} t_k / r_n on the lower triangle.
template <class S>
TriangleMatrix<S> build_means(const SequenceFamily& r, const SequenceFamily& s,
                              const SequenceFamily& t, std::size_t N) {
  if (s.term_rational(0).is_zero())
    raise(errc::zero_s0, "s_0 = 0: means triangle is singular");
  TriangleMatrix<S> out(N, TriangleMatrix<S>::Tag::means);
  for (std::size_t n = 0; n <= N; ++n) {
    Rational rn = r.term_rational(n);
    if (rn.is_zero()) raise(errc::zero_r, "r_" + std::to_string(n) + " = 0");
    if (t.term_rational(n).is_zero())
      raise(errc::zero_t, "t_" + std::to_string(n) + " = 0");
    S rinv = scalar_of<S>(1) / r.term<S>(n);
    for (std::size_t k = 0; k <= n; ++k)
      out.at(n, k) = s.term<S>(n - k) * t.term<S>(k) * rinv;
  }
  return out;
}

/// Delta^(m): entry (n,k) is (-1)^(n-k) C(m, n-k), zero once n-k > m.
template <class S>
TriangleMatrix<S> build_difference(unsigned m, std::size_t N) {
  if (m == 0) raise(errc::invalid_config, "difference order m must be >= 1");
  TriangleMatrix<S> out(N, TriangleMatrix<S>::Tag::difference);
  for (std::size_t n = 0; n <= N; ++n) {
    std::size_t lo = n >= m ? n - m : 0;
    for (std::size_t k = lo; k <= n; ++k) {
      S c = binomial_coefficient<S>(m, n - k);
      out.at(n, k) = ((n - k) % 2 == 0) ? c : S(-c);
    }
  }
  return out;
}

/// Composite triangle G = A(r,s,t) Delta^(m):
///   g_nj = (1/r_n) sum_{i=j}^{min(n, j+m)} (-1)^(i-j) C(m, i-j) s_{n-i} t_i.
/// Built from this kernel directly; the product of the two factors is the
/// test oracle.
template <class S>
TriangleMatrix<S> build_composite(const SpaceParams& params, std::size_t N) {
  params.validate(N);
  TriangleMatrix<S> out(N, TriangleMatrix<S>::Tag::composite);
  for (std::size_t n = 0; n <= N; ++n) {
    S rinv = scalar_of<S>(1) / params.r.term<S>(n);
    for (std::size_t j = 0; j <= n; ++j) {
      std::size_t hi = std::min(n, j + params.m);
      S acc = scalar_of<S>(0);
      for (std::size_t i = j; i <= hi; ++i) {
        S term = binomial_coefficient<S>(params.m, i - j) *
                 params.s.term<S>(n - i) * params.t.term<S>(i);
        if ((i - j) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      out.at(n, j) = acc * rinv;
    }
  }
  return out;
}

/// B = A(r,s,t)^(-1): b_nk = (-1)^(n-k) D_{n-k} r_k / t_n.
template <class S>
TriangleMatrix<S> build_inverse_means(const SequenceFamily& r,
                                      const SequenceFamily& s,
                                      const SequenceFamily& t, std::size_t N) {
  DCoefficients<S> d = compute_d_coefficients<S>(s, N);
  TriangleMatrix<S> out(N, TriangleMatrix<S>::Tag::inverse_means);
  for (std::size_t n = 0; n <= N; ++n) {
    if (t.term_rational(n).is_zero())
      raise(errc::zero_t, "t_" + std::to_string(n) + " = 0");
    S tinv = scalar_of<S>(1) / t.term<S>(n);
    for (std::size_t k = 0; k <= n; ++k) {
      if (r.term_rational(k).is_zero())
        raise(errc::zero_r, "r_" + std::to_string(k) + " = 0");
      S v = d.values[n - k] * r.term<S>(k) * tinv;
      out.at(n, k) = ((n - k) % 2 == 0) ? v : S(-v);
    }
  }
  return out;
}

/// G^(-1) = summation^m composed with B:
///   entry (n,j) = sum_{k=j}^{n} (-1)^(k-j) C(m+n-k-1, n-k) D_{k-j} r_j / t_k.
template <class S>
TriangleMatrix<S> build_inverse_composite(const SpaceParams& params,
                                          std::size_t N) {
  params.validate(N);
  DCoefficients<S> d = compute_d_coefficients<S>(params.s, N);
  std::vector<S> tinv(N + 1);
  for (std::size_t k = 0; k <= N; ++k)
    tinv[k] = scalar_of<S>(1) / params.t.term<S>(k);

  TriangleMatrix<S> out(N, TriangleMatrix<S>::Tag::inverse_composite);
  for (std::size_t n = 0; n <= N; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      CompensatedSum<S> acc;
      for (std::size_t k = j; k <= n; ++k) {
        S term = binomial_coefficient<S>(params.m + n - k - 1, n - k) *
                 d.values[k - j] * tinv[k];
        if ((k - j) % 2 == 0)
          acc.add(term);
        else
          acc.add(S(-term));
      }
      out.at(n, j) = S(acc.value() * params.r.term<S>(j));
    }
  }
  return out;
}

}  // namespace seqspace
