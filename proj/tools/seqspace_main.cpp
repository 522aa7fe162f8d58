// Command line front end.  Every subcommand is a thin shim over run_job so
// the tests can replay the same configs in-process and compare bytes.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "seqspace/jobs.hpp"
#include "seqspace/version.hpp"

namespace {

struct CliState {
  seqspace::JobConfig cfg;
  std::string mode = "rational";
  std::string params_path;
  std::string preset;
  std::string x_path;
  std::string a_path;
  std::string op_path;
  std::string out_path;
  std::string csv_path;
  std::string target;
  std::size_t N = 0;
  unsigned m = 0;
  double p = 0.0;
  double q = 0.0;
  std::size_t basis_j = 0;
  std::size_t cutoff = 0;
};

void add_common(CLI::App* cmd, CliState& st) {
  cmd->add_option("--params", st.params_path,
                  "JSON file with r/s/t/m/p (or a preset reference)");
  cmd->add_option("--preset", st.preset,
                  "named parameter family: weighted-mean|cesaro-alpha|lambda");
  cmd->add_option("--N", st.N, "truncation index (window holds N+1 terms)");
  cmd->add_option("--mode", st.mode, "numeric kernel: rational|float")
      ->check(CLI::IsMember({"rational", "float"}));
  cmd->add_option("--tol", st.cfg.tol, "floating tolerance for verdicts");
  cmd->add_option("--m", st.m, "difference order override");
  cmd->add_option("--p", st.p, "constant exponent override");
  cmd->add_option("--out", st.out_path, "write the JSON report here too");
  cmd->add_flag("--strict", st.cfg.strict,
                "exit 4 when the verdict is inconclusive/undetermined");
}

bool was_set(CLI::App* cmd, const char* name) {
  const CLI::Option* o = cmd->get_option_no_throw(name);
  return o != nullptr && o->count() > 0;
}

void collect(CLI::App* cmd, CliState& st) {
  auto opt = [&](const char* name) { return was_set(cmd, name); };
  st.cfg.mode = seqspace::parse_numeric_mode(st.mode);
  if (opt("--params")) st.cfg.params_path = st.params_path;
  if (opt("--preset")) st.cfg.preset = st.preset;
  if (opt("--N")) st.cfg.N = st.N;
  if (opt("--m")) st.cfg.m = st.m;
  if (opt("--p")) st.cfg.p = st.p;
  if (opt("--out")) st.cfg.out_path = st.out_path;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paranormed difference sequence space toolkit"};
  app.set_version_flag("--version", std::string(seqspace::kToolkitName) + " " +
                                        seqspace::kToolkitVersion);
  app.require_subcommand(1);

  CliState st;

  CLI::App* build = app.add_subcommand(
      "build", "emit one of the triangle matrices as JSON");
  add_common(build, st);
  build->add_option("--matrix", st.cfg.matrix,
                    "means|difference|composite|inverse-composite|"
                    "inverse-means|duality");
  build->add_option("--a", st.a_path,
                    "coefficient vector (duality matrix only)");

  CLI::App* transform = app.add_subcommand(
      "transform", "apply the composite map to a vector, report the paranorm");
  add_common(transform, st);
  transform->add_option("--x", st.x_path, "input vector, JSON or CSV")
      ->required();

  CLI::App* paranorm = app.add_subcommand(
      "paranorm", "paranorm of a vector as a member of the space");
  add_common(paranorm, st);
  paranorm->add_option("--x", st.x_path, "input vector, JSON or CSV")
      ->required();

  CLI::App* basis = app.add_subcommand(
      "basis", "basis vectors and reconstruction remainder sweeps");
  add_common(basis, st);
  basis->add_option("--j", st.basis_j, "emit the j-th basis vector");
  basis->add_option("--x", st.x_path, "vector to reconstruct");
  basis->add_option("--cutoff", st.cutoff, "largest cutoff J in the sweep");
  basis->add_option("--csv", st.csv_path, "write J,remainder rows here");

  CLI::App* duals_check = app.add_subcommand(
      "duals-check", "test a coefficient sequence against a dual description");
  add_common(duals_check, st);
  duals_check->add_option("--a", st.a_path, "coefficient vector")->required();
  duals_check->add_option("--dual", st.cfg.dual, "alpha|beta|gamma");

  CLI::App* duals_map = app.add_subcommand(
      "duals-map", "test whether a matrix maps the space into l1 or linf");
  add_common(duals_map, st);
  duals_map->add_option("--A", st.op_path, "operator JSON file")->required();
  duals_map->add_option("--target", st.target, "l1|linf");

  CLI::App* compact_norm = app.add_subcommand(
      "compact-norm", "operator norm through the associated matrix");
  add_common(compact_norm, st);
  compact_norm->add_option("--A", st.op_path, "operator JSON file")
      ->required();
  compact_norm->add_option("--target", st.target, "c0|c|linf|l1|bv");
  compact_norm->add_option("--q", st.q, "exponent for an lq target");

  CLI::App* compact_chi = app.add_subcommand(
      "compact-chi", "window bounds for the measure of noncompactness");
  add_common(compact_chi, st);
  compact_chi->add_option("--A", st.op_path, "operator JSON file")->required();
  compact_chi->add_option("--target", st.target, "c0|c|linf");
  compact_chi->add_option("--window", st.cfg.window, "tail window width");
  compact_chi->add_option("--csv", st.csv_path, "write n,rowNorm,tail here");

  CLI::App* classify = app.add_subcommand(
      "compact-classify", "compact / not compact / undetermined, with reasons");
  add_common(classify, st);
  classify->add_option("--A", st.op_path, "operator JSON file")->required();
  classify->add_option("--target", st.target, "c0|c|linf|l1|lq|bv");
  classify->add_option("--q", st.q, "exponent for an lq target");
  classify->add_option("--window", st.cfg.window, "tail window width");

  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the built-in exact identity battery");
  add_common(selftest, st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* active = app.get_subcommands().front();
  st.cfg.command = active->get_name();
  collect(active, st);
  auto opt = [&](const char* name) { return was_set(active, name); };
  if (opt("--x")) st.cfg.x_path = st.x_path;
  if (opt("--a")) st.cfg.a_path = st.a_path;
  if (opt("--A")) st.cfg.op_path = st.op_path;
  if (opt("--csv")) st.cfg.csv_path = st.csv_path;
  if (opt("--j")) st.cfg.basis_j = st.basis_j;
  if (opt("--cutoff")) st.cfg.cutoff = st.cutoff;
  if (opt("--q")) st.cfg.q = st.q;
  if (opt("--target")) st.cfg.target = st.target;

  seqspace::JobResult result = seqspace::run_job(st.cfg);
  std::cout << result.report.dump(2) << "\n";
  return result.exit_code;
}
