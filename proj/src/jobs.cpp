#include "seqspace/jobs.hpp"

#include <fstream>
#include <random>

#include "seqspace/compact.hpp"
#include "seqspace/duals.hpp"
#include "seqspace/spaces.hpp"
#include "seqspace/version.hpp"

namespace seqspace {

namespace {

using io::json;

json verdict_to_json(const ConditionVerdict& v) {
  json out;
  out["verdict"] = verdict_name(v.holds);
  out["holds"] = v.holds == Verdict::holds
                     ? json(true)
                     : (v.holds == Verdict::fails ? json(false) : json());
  out["witnessL"] = v.witness_l ? json(*v.witness_l) : json();
  out["supValue"] = v.sup_value;
  out["method"] = method_name(v.method);
  out["note"] = v.note;
  return out;
}

json dual_to_json(const DualVerdict& v) {
  json out;
  out["overall"] = verdict_to_json(v.overall);
  json parts = json::object();
  for (const auto& [name, part] : v.parts) parts[name] = verdict_to_json(part);
  out["parts"] = parts;
  return out;
}

json chi_to_json(const ChiEstimate& chi) {
  json out;
  out["lower"] = chi.lower;
  out["upper"] = chi.upper;
  out["plateauQuality"] = chi.plateau_quality;
  out["plateauReached"] = chi.plateau_reached;
  out["errorBudget"] = chi.error_budget;
  out["rowNorms"] = chi.row_norms;
  out["tailSequence"] = chi.tail_sequence;
  if (!chi.alpha_tilde.empty()) {
    out["alphaTilde"] = chi.alpha_tilde;
    out["alphaMaxDeviation"] = chi.alpha_max_deviation;
  }
  return out;
}

template <class S>
json triangle_to_json(const TriangleMatrix<S>& t) {
  json rows = json::array();
  for (std::size_t n = 0; n <= t.truncation(); ++n) {
    json entries = json::array();
    for (std::size_t k = 0; k <= n; ++k)
      entries.push_back(json::array({k, io::scalar_to_json(t.at(n, k))}));
    rows.push_back(json{{"n", n}, {"entries", entries}});
  }
  return rows;
}

struct JobContext {
  const JobConfig& cfg;
  std::size_t N = 16;
  SpaceParams params;
};

SpaceParams resolve_params(const JobConfig& cfg) {
  SpaceParams params;
  if (cfg.params_path) {
    params = io::params_from_json(io::load_json(*cfg.params_path));
  } else if (cfg.preset) {
    params = io::params_from_preset(*cfg.preset, cfg.m.value_or(1),
                                    cfg.p.value_or(2.0));
  } else {
    params.p = ExponentSequence::constant(cfg.p.value_or(2.0));
  }
  if (cfg.m) params.m = *cfg.m;
  if (cfg.p) params.p = ExponentSequence::constant(*cfg.p);
  return params;
}

std::size_t resolve_truncation(const JobConfig& cfg,
                               std::optional<std::size_t> input_len) {
  if (cfg.N) {
    if (*cfg.N < 1)
      raise(errc::invalid_config, "truncation N must be at least 1");
    return *cfg.N;
  }
  if (input_len) {
    if (*input_len == 0) raise(errc::invalid_config, "empty input vector");
    return *input_len - 1;
  }
  return 16;
}

int strict_exit(const JobConfig& cfg, Verdict v) {
  return (cfg.strict && v == Verdict::inconclusive) ? 4 : 0;
}

ConditionOptions make_opts(const JobConfig& cfg) {
  ConditionOptions opts;
  opts.tol = cfg.tol;
  return opts;
}

template <class S>
json run_build(JobContext& ctx) {
  const JobConfig& cfg = ctx.cfg;
  const std::string& which = cfg.matrix;
  json payload;
  payload["matrix"] = which;
  if (which == "means")
    payload["rows"] = triangle_to_json(
        build_means<S>(ctx.params.r, ctx.params.s, ctx.params.t, ctx.N));
  else if (which == "difference")
    payload["rows"] = triangle_to_json(build_difference<S>(ctx.params.m, ctx.N));
  else if (which == "composite")
    payload["rows"] = triangle_to_json(build_composite<S>(ctx.params, ctx.N));
  else if (which == "inverse-composite")
    payload["rows"] =
        triangle_to_json(build_inverse_composite<S>(ctx.params, ctx.N));
  else if (which == "inverse-means")
    payload["rows"] = triangle_to_json(
        build_inverse_means<S>(ctx.params.r, ctx.params.s, ctx.params.t, ctx.N));
  else if (which == "duality") {
    if (!cfg.a_path)
      raise(errc::invalid_config, "duality matrix needs --a coefficients");
    auto a = io::to_kernel<S>(io::load_vector(*cfg.a_path));
    if (a.size() != ctx.N + 1)
      raise(errc::dimension_mismatch,
            "coefficient vector must have N+1 entries");
    payload["rows"] = triangle_to_json(build_e_matrix<S>(a, ctx.params, ctx.N));
  } else {
    raise(errc::invalid_config,
          "unknown matrix '" + which +
              "' (means|difference|composite|inverse-composite|"
              "inverse-means|duality)");
  }
  payload["meta"] = json{{"params", ctx.params.describe()},
                         {"m", ctx.params.m}};
  return payload;
}

template <class S>
json run_transform(JobContext& ctx) {
  if (!ctx.cfg.x_path)
    raise(errc::invalid_config, "transform needs --x input");
  auto x = io::to_kernel<S>(io::load_vector(*ctx.cfg.x_path));
  Space<S> space(ctx.params, ctx.N);
  std::vector<S> y = space.forward(x);
  ParanormResult<S> h = space.paranorm_of_image(y);
  json payload;
  payload["y"] = io::vector_to_json(y);
  payload["paranorm"] = h.value;
  payload["lastTerm"] = h.last_term;
  return payload;
}

template <class S>
json run_paranorm(JobContext& ctx) {
  if (!ctx.cfg.x_path)
    raise(errc::invalid_config, "paranorm needs --x input");
  auto x = io::to_kernel<S>(io::load_vector(*ctx.cfg.x_path));
  Space<S> space(ctx.params, ctx.N);
  ParanormResult<S> h = space.paranorm(x);
  json payload;
  payload["paranorm"] = h.value;
  payload["lastTerm"] = h.last_term;
  payload["sumPowers"] = io::scalar_to_json(h.sum_powers);
  payload["exactSum"] = h.exact_sum;
  return payload;
}

template <class S>
json run_basis(JobContext& ctx) {
  const JobConfig& cfg = ctx.cfg;
  Space<S> space(ctx.params, ctx.N);
  json payload;
  if (cfg.basis_j) {
    payload["j"] = *cfg.basis_j;
    payload["vector"] = io::vector_to_json(space.basis_vector(*cfg.basis_j));
    return payload;
  }
  if (!cfg.x_path)
    raise(errc::invalid_config, "basis needs --j or --x for a reconstruction");
  auto x = io::to_kernel<S>(io::load_vector(*cfg.x_path));
  std::size_t hi = cfg.cutoff.value_or(ctx.N);
  auto curve = space.reconstruction_curve(x, hi);
  json remainders = json::array();
  for (std::size_t J = 0; J < curve.size(); ++J)
    remainders.push_back(json{{"J", J}, {"remainder", curve[J].value}});
  payload["remainders"] = remainders;
  if (cfg.csv_path) {
    std::ofstream csv(*cfg.csv_path);
    if (!csv) raise(errc::invalid_config, "cannot write " + *cfg.csv_path);
    csv << "J,remainder\n";
    for (std::size_t J = 0; J < curve.size(); ++J)
      csv << J << "," << curve[J].value << "\n";
    payload["csv"] = *cfg.csv_path;
  }
  return payload;
}

template <class S>
std::pair<json, Verdict> run_duals_check(JobContext& ctx) {
  if (!ctx.cfg.a_path)
    raise(errc::invalid_config, "duals check needs --a coefficients");
  auto a = io::to_kernel<S>(io::load_vector(*ctx.cfg.a_path));
  if (a.size() != ctx.N + 1)
    raise(errc::dimension_mismatch, "coefficient vector must have N+1 entries");
  DualKind kind = parse_dual_kind(ctx.cfg.dual);
  DualVerdict v =
      dual_membership<S>(a, kind, ctx.params, ctx.N, make_opts(ctx.cfg));
  json payload = dual_to_json(v);
  payload["dual"] = dual_kind_name(kind);
  return {payload, v.overall.holds};
}

template <class S>
std::pair<json, Verdict> run_duals_map(JobContext& ctx) {
  if (!ctx.cfg.op_path)
    raise(errc::invalid_config, "duals map needs --A operator file");
  OperatorSpec<S> A = io::operator_from_json<S>(io::load_json(*ctx.cfg.op_path));
  if (ctx.cfg.p) A.p = *ctx.cfg.p;
  MapTarget target = parse_map_target(ctx.cfg.target.value_or("linf"));
  DualVerdict v =
      mapping_class_test<S>(A, target, ctx.params, ctx.N, make_opts(ctx.cfg));
  json payload = dual_to_json(v);
  payload["target"] = map_target_name(target);
  return {payload, v.overall.holds};
}

template <class S>
OperatorSpec<S> load_operator(JobContext& ctx) {
  if (!ctx.cfg.op_path)
    raise(errc::invalid_config, "this command needs --A operator file");
  OperatorSpec<S> A = io::operator_from_json<S>(io::load_json(*ctx.cfg.op_path));
  if (ctx.cfg.p) A.p = *ctx.cfg.p;
  if (ctx.cfg.target)
    A.target = TargetSpace::parse(*ctx.cfg.target, ctx.cfg.q.value_or(1.0));
  return A;
}

template <class S>
json run_compact_norm(JobContext& ctx) {
  OperatorSpec<S> A = load_operator<S>(ctx);
  json payload;
  payload["target"] = A.target.name();
  payload["p"] = A.p;
  if (A.target.kind == TargetKind::l1) {
    if (A.p != 1.0)
      raise(errc::bad_exponent, "the l1-target norm formula needs p = 1");
    S norm = l1_norm(A, ctx.params, ctx.N, ctx.cfg.tol * 1e-4);
    payload["norm"] = to_double(norm);
    payload["exact"] = io::scalar_to_json(norm);
    payload["formula"] = "largest column absolute sum of the associated matrix";
  } else if (A.target.kind == TargetKind::bv) {
    if (A.p != 1.0)
      raise(errc::bad_exponent, "the bv-target norm formula needs p = 1");
    S norm = bv_norm(A, ctx.params, ctx.N, ctx.cfg.tol * 1e-4);
    payload["norm"] = to_double(norm);
    payload["exact"] = io::scalar_to_json(norm);
    payload["formula"] =
        "largest column absolute sum of first differences down the rows";
  } else {
    payload["norm"] = operator_norm(A, ctx.params, ctx.N, ctx.cfg.tol * 1e-4);
    payload["formula"] = "sup over rows of the conjugate-exponent row norm";
  }
  return payload;
}

template <class S>
json run_compact_chi(JobContext& ctx) {
  OperatorSpec<S> A = load_operator<S>(ctx);
  ChiEstimate chi =
      chi_estimate(A, ctx.params, ctx.N, ctx.cfg.window, ctx.cfg.tol * 1e-4);
  json payload = chi_to_json(chi);
  payload["target"] = A.target.name();
  payload["window"] = ctx.cfg.window;
  if (ctx.cfg.csv_path) {
    std::ofstream csv(*ctx.cfg.csv_path);
    if (!csv) raise(errc::invalid_config, "cannot write " + *ctx.cfg.csv_path);
    csv << "n,rowNorm,tail\n";
    for (std::size_t n = 0; n < chi.tail_sequence.size(); ++n)
      csv << n << "," << chi.row_norms[n] << "," << chi.tail_sequence[n]
          << "\n";
    payload["csv"] = *ctx.cfg.csv_path;
  }
  return payload;
}

template <class S>
std::pair<json, Verdict> run_compact_classify(JobContext& ctx) {
  OperatorSpec<S> A = load_operator<S>(ctx);
  ClassificationResult result =
      classify_compact(A, ctx.params, ctx.N, ctx.cfg.window, ctx.cfg.tol);
  json payload;
  payload["classification"] = compactness_name(result.verdict);
  payload["rationale"] = result.rationale;
  payload["target"] = A.target.name();
  if (result.chi) payload["chi"] = chi_to_json(*result.chi);
  Verdict as_verdict = result.verdict == Compactness::undetermined
                           ? Verdict::inconclusive
                           : Verdict::holds;
  return {payload, as_verdict};
}

json run_selftest(JobContext& ctx) {
  // Always over the exact kernel: every check below is an identity.
  using S = Rational;
  json checks = json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool pass) {
    checks.push_back(json{{"name", name}, {"pass", pass}});
    all = all && pass;
  };
  std::mt19937_64 rng(424242);
  auto small = [&](bool nonzero) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    int n = num(rng);
    while (nonzero && n == 0) n = num(rng);
    return Rational(n, den(rng));
  };

  std::size_t N = std::min<std::size_t>(ctx.N, 24);
  const SpaceParams& params = ctx.params;

  {
    bool pass = true;
    for (int trial = 0; trial < 10 && pass; ++trial) {
      std::vector<Rational> sv{small(true)};
      for (int i = 0; i < 7; ++i) sv.push_back(small(false));
      SequenceFamily s = SequenceFamily::prefix(sv);
      DCoefficients<S> d = compute_d_coefficients<S>(s, 6);
      for (unsigned n = 0; n <= 6 && pass; ++n)
        pass = d.values[n] == determinant_oracle_d<S>(s, n);
    }
    record("d-recurrence-matches-determinant", pass);
  }
  {
    TriangleMatrix<S> a = build_means<S>(params.r, params.s, params.t, N);
    TriangleMatrix<S> b =
        build_inverse_means<S>(params.r, params.s, params.t, N);
    record("means-inverse-identity",
           a.multiply(b).equals(TriangleMatrix<S>::identity(N)));
  }
  {
    TriangleMatrix<S> comp = build_composite<S>(params, N);
    TriangleMatrix<S> oracle =
        build_means<S>(params.r, params.s, params.t, N)
            .multiply(build_difference<S>(params.m, N));
    record("composite-factorization", comp.equals(oracle));
    TriangleMatrix<S> inv = build_inverse_composite<S>(params, N);
    record("composite-inverse-identity",
           comp.multiply(inv).equals(TriangleMatrix<S>::identity(N)));
  }
  {
    Space<S> space(params, N);
    bool pass = true;
    for (int trial = 0; trial < 5 && pass; ++trial) {
      std::vector<S> x(N + 1);
      for (auto& v : x) v = small(false);
      std::vector<S> back = space.inverse(space.forward(x));
      pass = back == x;
    }
    record("transform-round-trip", pass);
  }
  {
    Space<S> space(params, N);
    TriangleMatrix<S> inv = build_inverse_composite<S>(params, N);
    bool pass = true;
    for (std::size_t j = 0; j <= std::min<std::size_t>(3, N) && pass; ++j) {
      std::vector<S> b = space.basis_vector(j);
      for (std::size_t n = 0; n <= N && pass; ++n)
        pass = b[n] == inv.entry(n, j);
    }
    record("basis-column-identity", pass);
  }
  {
    std::size_t Ne = std::min<std::size_t>(N, 12);
    bool pass = true;
    for (int trial = 0; trial < 3 && pass; ++trial) {
      std::vector<S> a(Ne + 1), x(Ne + 1);
      for (auto& v : a) v = small(false);
      for (auto& v : x) v = small(false);
      Space<S> space(params, Ne);
      std::vector<S> y = space.forward(x);
      TriangleMatrix<S> e = build_e_matrix<S>(a, params, Ne);
      for (std::size_t l = 0; l <= Ne && pass; ++l) {
        S lhs = scalar_of<S>(0);
        for (std::size_t n = 0; n <= l; ++n) lhs += a[n] * x[n];
        S rhs = scalar_of<S>(0);
        for (std::size_t n = 0; n <= l; ++n) rhs += e.at(l, n) * y[n];
        pass = lhs == rhs;
      }
    }
    record("duality-partial-sum-identity", pass);
  }
  {
    Space<S> space(params, N);
    bool pass = true;
    for (int trial = 0; trial < 20 && pass; ++trial) {
      std::vector<S> x(N + 1), y(N + 1), sum(N + 1);
      for (std::size_t i = 0; i <= N; ++i) {
        x[i] = small(false);
        y[i] = small(false);
        sum[i] = x[i] + y[i];
      }
      double hx = space.paranorm(x).value;
      double hy = space.paranorm(y).value;
      double hs = space.paranorm(sum).value;
      pass = hs <= hx + hy + 1e-9 * (1.0 + hx + hy);
    }
    record("paranorm-triangle-inequality", pass);
  }
  json payload;
  payload["checks"] = checks;
  payload["allPass"] = all;
  payload["exitHint"] = all ? 0 : 3;
  return payload;
}

template <class S>
JobResult run_typed(JobContext& ctx) {
  const JobConfig& cfg = ctx.cfg;
  JobResult result;
  json payload;
  if (cfg.command == "build") {
    payload = run_build<S>(ctx);
  } else if (cfg.command == "transform") {
    payload = run_transform<S>(ctx);
  } else if (cfg.command == "paranorm") {
    payload = run_paranorm<S>(ctx);
  } else if (cfg.command == "basis") {
    payload = run_basis<S>(ctx);
  } else if (cfg.command == "duals-check") {
    auto [p, verdict] = run_duals_check<S>(ctx);
    payload = p;
    result.exit_code = strict_exit(cfg, verdict);
  } else if (cfg.command == "duals-map") {
    auto [p, verdict] = run_duals_map<S>(ctx);
    payload = p;
    result.exit_code = strict_exit(cfg, verdict);
  } else if (cfg.command == "compact-norm") {
    payload = run_compact_norm<S>(ctx);
  } else if (cfg.command == "compact-chi") {
    payload = run_compact_chi<S>(ctx);
  } else if (cfg.command == "compact-classify") {
    auto [p, verdict] = run_compact_classify<S>(ctx);
    payload = p;
    result.exit_code = strict_exit(cfg, verdict);
  } else if (cfg.command == "selftest") {
    payload = run_selftest(ctx);
    if (!payload["allPass"].get<bool>()) result.exit_code = 3;
  } else {
    raise(errc::invalid_config, "unknown command '" + cfg.command + "'");
  }
  result.report = payload;
  return result;
}

std::optional<std::size_t> probe_input_length(const JobConfig& cfg) {
  try {
    if (cfg.x_path) return io::load_vector(*cfg.x_path).size();
    if (cfg.a_path) return io::load_vector(*cfg.a_path).size();
  } catch (const Error&) {
    // let the command itself surface the parse failure
  }
  return std::nullopt;
}

}  // namespace

JobResult run_job(const JobConfig& cfg) {
  JobResult result;
  json envelope;
  envelope["toolkit"] = json{{"name", kToolkitName}, {"version", kToolkitVersion}};
  envelope["command"] = cfg.command;
  envelope["mode"] = numeric_mode_name(cfg.mode);
  envelope["tol"] = cfg.tol;
  try {
    JobContext ctx{cfg, resolve_truncation(cfg, probe_input_length(cfg)),
                   resolve_params(cfg)};
    envelope["N"] = ctx.N;
    JobResult typed = cfg.mode == NumericMode::rational
                          ? run_typed<Rational>(ctx)
                          : run_typed<double>(ctx);
    result.exit_code = typed.exit_code;
    envelope["result"] = typed.report;
  } catch (const Error& e) {
    result.exit_code = e.exit_code();
    envelope["error"] = json{{"code", errc_name(e.code())}, {"what", e.what()}};
  }
  result.report = envelope;
  if (cfg.out_path) {
    std::ofstream out(*cfg.out_path);
    if (out) out << result.report.dump(2) << "\n";
  }
  return result;
}

}  // namespace seqspace
