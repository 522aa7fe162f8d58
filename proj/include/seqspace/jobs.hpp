#pragma once

#include <optional>
#include <string>

#include "seqspace/io.hpp"

namespace seqspace {

/// One CLI invocation, normalized.  The same structure drives in-process runs
/// from the tests, so command output is byte-reproducible by construction.
struct JobConfig {
  std::string command;  // build|transform|paranorm|basis|duals-check|
                        // duals-map|compact-norm|compact-chi|
                        // compact-classify|selftest
  std::optional<std::string> params_path;
  std::optional<std::string> preset;
  std::optional<std::size_t> N;
  NumericMode mode = NumericMode::rational;
  double tol = 1e-10;
  std::optional<unsigned> m;       // overrides the params document
  std::optional<double> p;         // overrides the params document / operator
  std::optional<std::string> x_path;
  std::optional<std::string> a_path;
  std::optional<std::string> op_path;
  std::optional<std::string> out_path;
  std::optional<std::string> csv_path;
  std::string matrix = "composite";
  std::optional<std::size_t> basis_j;
  std::optional<std::size_t> cutoff;  // reconstruction sweep bound
  std::string dual = "beta";
  std::optional<std::string> target;  // absent: keep the operator file's own
  std::optional<double> q;
  std::size_t window = 16;
  bool strict = false;
};

struct JobResult {
  int exit_code = 0;
  io::json report;
};

/// Runs one job.  Exit codes: 0 success, 2 validation failure, 3 numeric
/// policy violation, 4 inconclusive-only verdict under strict mode.  Errors
/// raised by the library are caught and turned into {error: ...} reports with
/// the matching code; programming errors propagate.
JobResult run_job(const JobConfig& cfg);

}  // namespace seqspace
