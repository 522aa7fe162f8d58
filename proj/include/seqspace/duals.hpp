#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "seqspace/associated.hpp"
#include "seqspace/conditions.hpp"
#include "seqspace/operators.hpp"
#include "seqspace/params.hpp"
#include "seqspace/spaces.hpp"

namespace seqspace {

/// The duality matrix E attached to a scalar sequence a: for 0 <= n <= l,
///   e_ln = r_n [ a_n/(s_0 t_n)
///          + sum_{k=n}^{n+1} (-1)^(k-n) (D_{k-n}/t_k)
///                sum_{j=n+1}^{l} C(m+j-k-1, j-k) a_j
///          + sum_{k=n+2}^{l} (-1)^(k-n) (D_{k-n}/t_k)
///                sum_{j=k}^{l} C(m+j-k-1, j-k) a_j ],
/// with empty sums equal to zero (and their k-terms skipped, so no generating
/// term beyond the window is ever requested).  Satisfies the partial-sum
/// identity sum_{n<=l} a_n x_n = sum_n e_ln y_n for y the forward transform.
template <class S>
TriangleMatrix<S> build_e_matrix(std::span<const S> a, const SpaceParams& params,
                                 std::size_t N) {
  params.validate(N);
  if (a.size() != N + 1)
    raise(errc::dimension_mismatch, "coefficient vector must cover the window");
  DCoefficients<S> d = compute_d_coefficients<S>(params.s, N);
  std::vector<S> tinv(N + 1), rv(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    tinv[i] = scalar_of<S>(1) / params.t.term<S>(i);
    rv[i] = params.r.term<S>(i);
  }
  S s0 = params.s.term<S>(0);
  unsigned m = params.m;

  TriangleMatrix<S> e(N);
  std::vector<S> w(N + 1);  // w[k] = sum_{j=k}^{l} C(m+j-k-1, j-k) a_j
  for (std::size_t l = 0; l <= N; ++l) {
    for (std::size_t k = 0; k <= l; ++k) {
      S acc = scalar_of<S>(0);
      for (std::size_t j = k; j <= l; ++j)
        acc += binomial_coefficient<S>(m + j - k - 1, j - k) * a[j];
      w[k] = acc;
    }
    for (std::size_t n = 0; n <= l; ++n) {
      S acc = a[n] / s0 * tinv[n];
      if (l > n) {
        // k = n: inner sum starts at j = n+1, i.e. w[n] minus its j = n term.
        acc += d.values[0] * tinv[n] * (w[n] - a[n]);
        // k = n+1: inner sum coincides with w[n+1].
        acc -= d.values[1] * tinv[n + 1] * w[n + 1];
      }
      for (std::size_t k = n + 2; k <= l; ++k) {
        S term = d.values[k - n] * tinv[k] * w[k];
        if ((k - n) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      e.at(l, n) = acc * rv[n];
    }
  }
  return e;
}

enum class DualKind { alpha, beta, gamma };

inline const char* dual_kind_name(DualKind kind) noexcept {
  switch (kind) {
    case DualKind::alpha: return "alpha";
    case DualKind::beta: return "beta";
    case DualKind::gamma: return "gamma";
  }
  return "?";
}

inline DualKind parse_dual_kind(const std::string& name) {
  if (name == "alpha") return DualKind::alpha;
  if (name == "beta") return DualKind::beta;
  if (name == "gamma") return DualKind::gamma;
  raise(errc::invalid_config,
        "unknown dual kind '" + name + "' (alpha|beta|gamma)");
}

/// Aggregate of a battery of condition checks: fails dominates, then
/// inconclusive; holds only when every member holds.
struct DualVerdict {
  ConditionVerdict overall;
  std::vector<std::pair<std::string, ConditionVerdict>> parts;

  void add(std::string name, ConditionVerdict v) {
    parts.emplace_back(std::move(name), std::move(v));
  }

  void aggregate(const std::string& battery_note) {
    overall = ConditionVerdict{};
    overall.holds = Verdict::holds;
    overall.method = Method::exact_subset;
    for (const auto& [name, v] : parts) {
      overall.sup_value = std::max(overall.sup_value, v.sup_value);
      if (v.method == Method::interval_heuristic)
        overall.method = Method::interval_heuristic;
      if (v.holds == Verdict::fails) overall.holds = Verdict::fails;
      if (v.holds == Verdict::inconclusive &&
          overall.holds != Verdict::fails)
        overall.holds = Verdict::inconclusive;
    }
    overall.note = battery_note;
    if (overall.holds == Verdict::inconclusive)
      overall.method = Method::interval_heuristic;
  }
};

namespace detail {

enum class Regime { low, high };  // p uniformly <= 1 / uniformly > 1

inline Regime exponent_regime(const ExponentSequence& p, std::size_t N) {
  if (p.all_greater_one(N)) return Regime::high;
  if (p.all_at_most_one(N)) return Regime::low;
  raise(errc::mixed_exponent_regime,
        "dual characterizations need p uniformly > 1 or uniformly <= 1 "
        "over the window");
}

// Series probe: partial sums over the tail half of the window must settle
// (oscillation within tol relative to scale).  Heuristic by construction.
inline ConditionVerdict cauchy_probe(const std::vector<double>& terms,
                                     double tol, const std::string& label) {
  ConditionVerdict out;
  out.method = Method::interval_heuristic;
  double partial = 0.0, lo = 0.0, hi = 0.0, scale = 0.0;
  std::vector<double> partials(terms.size());
  for (std::size_t i = 0; i < terms.size(); ++i) {
    partial += terms[i];
    partials[i] = partial;
    scale = std::max(scale, std::fabs(partial));
  }
  if (terms.empty() || terms.size() < 4) {
    out.holds = Verdict::holds;
    out.note = label + ": too few terms to oscillate";
    return out;
  }
  std::size_t from = terms.size() / 2;
  lo = hi = partials[from];
  for (std::size_t i = from; i < partials.size(); ++i) {
    lo = std::min(lo, partials[i]);
    hi = std::max(hi, partials[i]);
  }
  double osc = hi - lo;
  out.sup_value = osc;
  double tail_mag = 0.0, head_mag = 0.0;
  for (std::size_t i = from; i < terms.size(); ++i)
    tail_mag = std::max(tail_mag, std::fabs(terms[i]));
  for (std::size_t i = 0; i < from; ++i)
    head_mag = std::max(head_mag, std::fabs(terms[i]));
  if (osc <= tol * (1.0 + scale)) {
    out.holds = Verdict::holds;
    out.note = label + ": tail partial sums settled";
  } else if (tail_mag > 4.0 * std::max(head_mag, tol)) {
    out.holds = Verdict::fails;
    out.note = label + ": terms grow down the tail";
  } else {
    out.holds = Verdict::inconclusive;
    out.note = label + ": tail partial sums still moving";
  }
  return out;
}

}  // namespace detail

/// Membership test of the sequence a in the alpha-, beta-, or gamma-dual of
/// the space, over the truncation window.
template <class S>
DualVerdict dual_membership(std::span<const S> a, DualKind kind,
                            const SpaceParams& params, std::size_t N,
                            const ConditionOptions& opts = {}) {
  params.validate(N);
  if (a.size() != N + 1)
    raise(errc::dimension_mismatch, "coefficient vector must cover the window");
  detail::Regime regime = detail::exponent_regime(params.p, N);
  DualVerdict verdict;

  if (kind == DualKind::alpha) {
    // Window matrix c_nj = a_n * (G^{-1})_{nj}; the alpha-dual battery is the
    // subset condition over it.
    TriangleMatrix<S> inv = build_inverse_composite<S>(params, N);
    DenseWindow<double> c(N + 1, N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
      double an = to_double(a[n]);
      for (std::size_t j = 0; j <= n; ++j)
        c.at(n, j) = an * to_double(inv.at(n, j));
    }
    if (regime == detail::Regime::low)
      verdict.add("H1", check_condition(ConditionId::c4_4, c, params.p, opts));
    else
      verdict.add("H2", check_condition(ConditionId::c4_5, c, params.p, opts));
    verdict.aggregate("alpha-dual battery over the weighted inverse window");
    return verdict;
  }

  TriangleMatrix<S> e = build_e_matrix(a, params, N);
  DenseWindow<double> ew = triangle_to_window(e);

  if (kind == DualKind::gamma) {
    if (regime == detail::Regime::low)
      verdict.add("Gamma1",
                  check_condition(ConditionId::c4_14, ew, params.p, opts));
    else
      verdict.add("Gamma2",
                  check_condition(ConditionId::c4_15, ew, params.p, opts));
    verdict.aggregate("gamma-dual battery over the duality matrix");
    return verdict;
  }

  // Beta battery.  B1/B2 are convergence probes for the two series feeding
  // the duality matrix; B3 bounds the diagonal part; the remaining members
  // are window conditions on E.  B4 coincides with the gamma-dual condition.
  {
    std::vector<double> ad(N + 1);
    for (std::size_t i = 0; i <= N; ++i) ad[i] = to_double(a[i]);

    std::size_t probes = std::min<std::size_t>(6, N / 2 + 1);
    ConditionVerdict b1;
    b1.holds = Verdict::holds;
    b1.method = Method::interval_heuristic;
    for (std::size_t k = 0; k < probes; ++k) {
      std::vector<double> terms;
      for (std::size_t j = k + 1; j <= N; ++j)
        terms.push_back(
            to_double(binomial_coefficient<double>(params.m + j - k - 1, j - k)) *
            ad[j]);
      ConditionVerdict probe = detail::cauchy_probe(
          terms, opts.tol, "B1 inner series at k=" + std::to_string(k));
      b1.sup_value = std::max(b1.sup_value, probe.sup_value);
      if (probe.holds == Verdict::fails) b1.holds = Verdict::fails;
      if (probe.holds == Verdict::inconclusive && b1.holds != Verdict::fails)
        b1.holds = Verdict::inconclusive;
      if (probe.holds != Verdict::holds && b1.note.empty()) b1.note = probe.note;
    }
    if (b1.note.empty())
      b1.note = "inner series settled at every probed column";
    verdict.add("B1", b1);

    DCoefficients<double> dd = compute_d_coefficients<double>(params.s, N);
    ConditionVerdict b2;
    b2.holds = Verdict::holds;
    b2.method = Method::interval_heuristic;
    for (std::size_t n = 0; n < std::min<std::size_t>(2, N + 1); ++n) {
      std::vector<double> terms;
      for (std::size_t k = n + 2; k <= N; ++k) {
        double inner = 0.0;
        for (std::size_t j = k; j <= N; ++j)
          inner +=
              to_double(binomial_coefficient<double>(params.m + j - k - 1, j - k)) *
              ad[j];
        double sign = (k - n) % 2 == 0 ? 1.0 : -1.0;
        terms.push_back(sign * dd.values[k - n] /
                        to_double(params.t.term<double>(k)) * inner);
      }
      ConditionVerdict probe = detail::cauchy_probe(
          terms, opts.tol, "B2 outer series at n=" + std::to_string(n));
      b2.sup_value = std::max(b2.sup_value, probe.sup_value);
      if (probe.holds == Verdict::fails) b2.holds = Verdict::fails;
      if (probe.holds == Verdict::inconclusive && b2.holds != Verdict::fails)
        b2.holds = Verdict::inconclusive;
      if (probe.holds != Verdict::holds && b2.note.empty()) b2.note = probe.note;
    }
    if (b2.note.empty())
      b2.note = "outer series settled at every probed row";
    verdict.add("B2", b2);

    std::vector<double> diag(N + 1);
    for (std::size_t n = 0; n <= N; ++n)
      diag[n] = to_double(params.r.term<double>(n)) * ad[n] /
                to_double(params.t.term<double>(n));
    ConditionVerdict b3 = sup_sequence_power(diag, params.p, opts);
    b3.note += "; exponent sequence taken from the space itself";
    verdict.add("B3", b3);
  }

  if (regime == detail::Regime::high) {
    verdict.add("B4", check_condition(ConditionId::c4_15, ew, params.p, opts));
    verdict.add("B6", check_condition(ConditionId::c4_11, ew, params.p, opts));
    verdict.add("B8", check_condition(ConditionId::c4_13, ew, params.p, opts));
  } else {
    verdict.add("B5", check_condition(ConditionId::c4_9, ew, params.p, opts));
    verdict.add("B6", check_condition(ConditionId::c4_11, ew, params.p, opts));
    verdict.add("B7", check_condition(ConditionId::c4_12, ew, params.p, opts));
  }
  verdict.aggregate("beta-dual battery over the duality matrix");
  return verdict;
}

enum class MapTarget { l_inf, l_1 };

inline const char* map_target_name(MapTarget t) noexcept {
  return t == MapTarget::l_inf ? "linf" : "l1";
}

inline MapTarget parse_map_target(const std::string& name) {
  if (name == "linf" || name == "l_inf") return MapTarget::l_inf;
  if (name == "l1" || name == "l_1") return MapTarget::l_1;
  raise(errc::invalid_config,
        "unknown mapping target '" + name + "' (linf|l1)");
}

/// Characterization of A mapping the space into l_inf or l_1: the row-wise
/// duality transform must satisfy the matching window condition, and every
/// row must pass the beta-dual battery.
template <class S>
DualVerdict mapping_class_test(const OperatorSpec<S>& A, MapTarget target,
                               const SpaceParams& params, std::size_t N,
                               const ConditionOptions& opts = {}) {
  A.validate();
  params.validate(N);
  detail::Regime regime = detail::exponent_regime(params.p, N);

  DenseWindow<double> etilde(N + 1, N + 1);
  for (std::size_t l = 0; l <= N && l < A.rows.size(); ++l) {
    AssociatedSequence<S> assoc =
        associated_sequence(A.row(l), params, N, opts.tol);
    for (std::size_t n = 0; n <= N; ++n)
      etilde.at(l, n) = to_double(assoc.values[n]);
  }

  DualVerdict verdict;
  if (target == MapTarget::l_inf) {
    if (regime == detail::Regime::high)
      verdict.add("rowSum",
                  check_condition(ConditionId::c4_15, etilde, params.p, opts));
    else
      verdict.add("rowSup",
                  check_condition(ConditionId::c4_9, etilde, params.p, opts));
  } else {
    if (regime == detail::Regime::high)
      verdict.add("subsetSum",
                  check_condition(ConditionId::c4_5, etilde, params.p, opts));
    else
      verdict.add("subsetSup",
                  check_condition(ConditionId::c4_4, etilde, params.p, opts));
  }

  // Row-wise beta membership, folded into one battery entry per outcome.
  std::size_t row_count = std::min<std::size_t>(N + 1, A.rows.size());
  std::size_t rows_held = 0, rows_failed = 0, rows_open = 0;
  double worst = 0.0;
  bool any_heuristic = false;
  for (std::size_t l = 0; l < row_count; ++l) {
    std::vector<S> row_window(N + 1);
    for (std::size_t k = 0; k <= N; ++k) row_window[k] = A.row(l).entry(k);
    DualVerdict row_verdict =
        dual_membership<S>(row_window, DualKind::beta, params, N, opts);
    worst = std::max(worst, row_verdict.overall.sup_value);
    if (row_verdict.overall.method == Method::interval_heuristic)
      any_heuristic = true;
    switch (row_verdict.overall.holds) {
      case Verdict::holds: ++rows_held; break;
      case Verdict::fails: ++rows_failed; break;
      case Verdict::inconclusive: ++rows_open; break;
    }
  }
  ConditionVerdict rows;
  rows.sup_value = worst;
  rows.method = any_heuristic ? Method::interval_heuristic : Method::exact_subset;
  rows.note = std::to_string(rows_held) + " of " + std::to_string(row_count) +
              " rows pass the beta-dual battery";
  if (rows_failed > 0)
    rows.holds = Verdict::fails;
  else if (rows_open > 0)
    rows.holds = Verdict::inconclusive;
  else
    rows.holds = Verdict::holds;
  if (rows.holds == Verdict::inconclusive)
    rows.method = Method::interval_heuristic;
  verdict.add("rowsInBetaDual", rows);

  verdict.aggregate(std::string("mapping test into ") + map_target_name(target));
  return verdict;
}

}  // namespace seqspace
