#pragma once

#include <cstddef>
#include <vector>

#include "seqspace/operators.hpp"
#include "seqspace/params.hpp"
#include "seqspace/triangle.hpp"
#include "seqspace/triangles.hpp"

namespace seqspace {

/// Associated sequence of a row (a_j): for each column index k,
///   atilde_k = r_k [ a_k/(s_0 t_k)
///              + sum_{i=k}^{k+1} (-1)^(i-k) (D_{i-k}/t_i)
///                    sum_{j=k+1}^inf C(m+j-i-1, j-i) a_j
///              + sum_{l=2}^inf (-1)^l (D_l/t_{l+k})
///                    sum_{j=k+l}^inf C(m+j-k-l-1, j-k-l) a_j ].
/// Finite-support rows are summed exactly; decay-certified rows are summed
/// until a rigorous geometric tail bound dips below tol, with the bound
/// accumulated into error_budget.  Rows that defeat the convergence probe
/// raise series_divergence.
template <class S>
struct AssociatedSequence {
  std::vector<S> values;
  bool exact = true;
  double error_budget = 0.0;
};

namespace detail {

/// sum_{j=start}^inf C(m+j-i-1, j-i) a_j for a single inner series.
/// start >= i.  Exact for finite support; bounded truncation otherwise.
template <class S>
struct InnerSum {
  S value = scalar_of<S>(0);
  bool exact = true;
  double tail_bound = 0.0;
};

template <class S>
InnerSum<S> inner_series(const OperatorRow<S>& row, unsigned m, std::size_t i,
                         std::size_t start, double tol) {
  InnerSum<S> out;
  if (auto end = row.support_end()) {
    for (std::size_t j = start; j <= *end; ++j)
      out.value += binomial_coefficient<S>(m + j - i - 1, j - i) * row.entry(j);
    return out;
  }
  const auto& cert = row.decay();
  if (!cert)
    raise(errc::invalid_config,
          "operator row without support bound or decay certificate");
  out.exact = false;
  double rho = cert->ratio;
  // A certificate that cannot reach tol within the iteration budget is
  // rejected up front; the estimate ignores binomial growth, so it only
  // underestimates the work.
  if (rho > 0.0 && cert->magnitude > 0.0) {
    double needed = (std::log(std::max(tol, 1e-300)) -
                     std::log(cert->magnitude)) /
                    std::log(rho);
    if (needed > 200000.0)
      raise(errc::series_divergence,
            "decay certificate too weak to reach the tolerance within the "
            "iteration budget");
  }
  std::size_t j = start;
  std::size_t iterations = 0;
  while (true) {
    if (++iterations > 200000)
      raise(errc::series_divergence,
            "inner series failed to settle within the iteration cap");
    out.value += binomial_coefficient<S>(m + j - i - 1, j - i) * row.entry(j);
    // Geometric tail bound: once the certified ratio times the binomial
    // growth factor drops below 1, the remaining mass is a geometric series.
    std::size_t depth = j + 1 - i;
    double growth = rho * (static_cast<double>(m + depth) /
                           static_cast<double>(depth + 1));
    if (growth < 1.0 && j >= cert->from) {
      double head =
          to_double(binomial_coefficient<double>(m + j - i, j + 1 - i)) *
          cert->magnitude * std::pow(rho, static_cast<double>(j + 1));
      double bound = head / (1.0 - growth);
      if (bound <= tol) {
        out.tail_bound = bound;
        return out;
      }
    }
    ++j;
  }
}

}  // namespace detail

template <class S>
AssociatedSequence<S> associated_sequence(const OperatorRow<S>& row,
                                          const SpaceParams& params,
                                          std::size_t N, double tol = 1e-14) {
  params.validate(N);
  AssociatedSequence<S> out;
  out.values.assign(N + 1, scalar_of<S>(0));

  // The l-series touches D and t beyond the window for finite rows; size the
  // caches to the support when we know it.
  std::size_t reach = N + 1;
  if (auto end = row.support_end()) reach = std::max(reach, *end + 1);
  DCoefficients<S> d = compute_d_coefficients<S>(params.s, reach);
  auto t_at = [&](std::size_t i) { return params.t.term<S>(i); };

  S s0 = params.s.term<S>(0);
  for (std::size_t k = 0; k <= N; ++k) {
    S acc = row.entry(k) / (s0 * t_at(k));
    double budget_k = 0.0;  // entrywise bound before the r_k factor

    for (std::size_t i = k; i <= k + 1; ++i) {
      auto inner = detail::inner_series(row, params.m, i, k + 1, tol);
      S weight = d.values[i - k] / t_at(i);
      if (!inner.exact) {
        out.exact = false;
        budget_k += inner.tail_bound * std::fabs(to_double(weight));
      }
      S term = weight * inner.value;
      if ((i - k) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }

    if (auto end = row.support_end()) {
      // l ranges until the inner sum (starting at k+l) has emptied out.
      for (std::size_t l = 2; k + l <= *end; ++l) {
        auto inner = detail::inner_series(row, params.m, k + l, k + l, tol);
        S term = d.values[l] * inner.value / t_at(k + l);
        if (l % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
    } else {
      // Convergence probe over l: stop once the terms stay below tol for a
      // few consecutive steps; fail loudly if they refuse to settle.
      unsigned quiet = 0;
      std::size_t l = 2;
      while (quiet < 3) {
        if (l > 4096)
          raise(errc::series_divergence,
                "outer series over D coefficients failed the convergence probe");
        if (l >= d.size()) d = compute_d_coefficients<S>(params.s, 2 * l + 8);
        auto inner = detail::inner_series(row, params.m, k + l, k + l, tol);
        S weight = d.values[l] / t_at(k + l);
        if (!inner.exact)
          budget_k += inner.tail_bound * std::fabs(to_double(weight));
        S term = weight * inner.value;
        if (l % 2 == 0)
          acc += term;
        else
          acc -= term;
        double mag = std::fabs(to_double(term));
        if (mag <= tol)
          ++quiet;
        else
          quiet = 0;
        ++l;
      }
      // The probe cut the l-series off; charge the stopping tolerance too.
      budget_k += 3.0 * tol;
      out.exact = false;
    }

    out.values[k] = acc * params.r.term<S>(k);
    double scaled = budget_k * std::fabs(to_double(params.r.term<S>(k)));
    out.error_budget = std::max(out.error_budget, scaled);
  }
  return out;
}

}  // namespace seqspace
