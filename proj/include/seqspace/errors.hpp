#pragma once

#include <stdexcept>
#include <string>

namespace seqspace {

/// Failure categories used across the toolkit.  Every category maps to one of
/// the documented process exit codes: validation-type failures exit with 2,
/// numeric-policy violations (divergent series, overflow traps) with 3.
enum class errc {
  zero_s0,                // s_0 = 0: the means triangle is not invertible
  zero_r,                 // some r_n = 0
  zero_t,                 // some t_n = 0
  oracle_scale_exceeded,  // determinant oracle asked beyond its size cap
  dimension_mismatch,     // vector length does not match the truncation
  bad_exponent,           // exponent outside the admissible range
  mixed_exponent_regime,  // p must be uniformly > 1 or uniformly <= 1
  index_out_of_range,
  range_error,            // sequence term requested beyond its definition
  parse_error,
  invalid_config,
  series_divergence,      // partial sums failed the convergence probe
  numeric_policy,         // nonfinite intermediate in float mode
};

const char* errc_name(errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

  int exit_code() const noexcept {
    return (code_ == errc::series_divergence || code_ == errc::numeric_policy)
               ? 3
               : 2;
  }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace seqspace
