#pragma once

#include <cstddef>
#include <string>

#include "seqspace/sequence.hpp"

namespace seqspace {

/// Parameters of the space l(r,s,t,p; Delta^(m)): the three generating
/// sequences, the difference order m >= 1, and the exponent sequence p.
struct SpaceParams {
  SequenceFamily r = SequenceFamily::ones();
  SequenceFamily s = SequenceFamily::ones();
  SequenceFamily t = SequenceFamily::ones();
  unsigned m = 1;
  ExponentSequence p = ExponentSequence::constant(1.0);

  /// Degenerate-input checks over the window [0, N]: r_n != 0, t_n != 0,
  /// s_0 != 0, m >= 1, exponents positive (each failure has its own code).
  void validate(std::size_t N) const {
    if (m == 0) raise(errc::invalid_config, "difference order m must be >= 1");
    if (s.term_rational(0).is_zero())
      raise(errc::zero_s0, "s_0 = 0: generating triangle is singular");
    for (std::size_t n = 0; n <= N; ++n) {
      if (r.term_rational(n).is_zero())
        raise(errc::zero_r, "r_" + std::to_string(n) + " = 0");
      if (t.term_rational(n).is_zero())
        raise(errc::zero_t, "t_" + std::to_string(n) + " = 0");
    }
    p.sup(N);  // walks the window; throws on missing or invalid entries
    if (!(p.inf(N) > 0.0))
      raise(errc::bad_exponent, "inf p_k must be positive");
  }

  std::string describe() const {
    return "r=" + r.describe() + " s=" + s.describe() + " t=" + t.describe() +
           " m=" + std::to_string(m) + " p=" + p.describe();
  }
};

/// r_n = 1/u_n, s = e, t_n = v_n: the weighted-mean family.
inline SpaceParams preset_weighted_mean(SequenceFamily u, SequenceFamily v,
                                        unsigned m, ExponentSequence p) {
  SpaceParams params;
  params.r = SequenceFamily::reciprocal(std::move(u));
  params.s = SequenceFamily::ones();
  params.t = std::move(v);
  params.m = m;
  params.p = std::move(p);
  return params;
}

/// r_n = n+1, s = e, t_n = 1 + alpha^n.
inline SpaceParams preset_cesaro_alpha(Rational alpha, unsigned m,
                                       ExponentSequence p) {
  SpaceParams params;
  params.r = SequenceFamily::arithmetic(Rational(1), Rational(1));
  params.s = SequenceFamily::ones();
  params.t = SequenceFamily::one_plus_geometric(std::move(alpha));
  params.m = m;
  params.p = std::move(p);
  return params;
}

/// r_n = lambda_n, s = e, t_n = lambda_n - lambda_{n-1}.  lambda must be
/// strictly increasing and positive for the window checks to pass.
inline SpaceParams preset_lambda(SequenceFamily lambda, unsigned m,
                                 ExponentSequence p) {
  SpaceParams params;
  params.r = lambda;
  params.s = SequenceFamily::ones();
  params.t = SequenceFamily::difference(std::move(lambda));
  params.m = m;
  params.p = std::move(p);
  return params;
}

}  // namespace seqspace
