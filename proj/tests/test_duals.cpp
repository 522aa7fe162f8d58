#include <doctest.h>

#include <random>

#include "seqspace/duals.hpp"

using namespace seqspace;

namespace {

SpaceParams plain_params(double p) {
  SpaceParams params;  // r = s = t = e, m = 1: transform is the identity
  params.p = ExponentSequence::constant(p);
  return params;
}

SpaceParams layered_params(double p, unsigned m = 2) {
  SpaceParams params;
  params.r = SequenceFamily::arithmetic(Rational(1), Rational(1));
  params.s = SequenceFamily::prefix_then({Rational(1), Rational(2)},
                                         SequenceFamily::constant(Rational(0)));
  params.t = SequenceFamily::reciprocal(
      SequenceFamily::arithmetic(Rational(2), Rational(1)));
  params.m = m;
  params.p = ExponentSequence::constant(p);
  return params;
}

// s = (2,1,0,...) keeps the inversion coefficients decaying (D_v = 2^-(v+1)),
// so dual windows stay bounded for decaying coefficient sequences.
SpaceParams tame_params(double p, unsigned m = 1) {
  SpaceParams params;
  params.r = SequenceFamily::arithmetic(Rational(1), Rational(1));
  params.s = SequenceFamily::prefix_then({Rational(2), Rational(1)},
                                         SequenceFamily::constant(Rational(0)));
  params.t = SequenceFamily::reciprocal(
      SequenceFamily::arithmetic(Rational(2), Rational(1)));
  params.m = m;
  params.p = ExponentSequence::constant(p);
  return params;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<Rational> v(len);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

}  // namespace

TEST_CASE("duality matrix satisfies the partial-sum identity exactly") {
  std::mt19937_64 rng(111);
  std::size_t N = 12;
  SpaceParams params = layered_params(1.0);
  Space<Rational> space(params, N);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> a = random_vector(rng, N + 1);
    std::vector<Rational> x = random_vector(rng, N + 1);
    std::vector<Rational> y = space.forward(x);
    TriangleMatrix<Rational> e = build_e_matrix<Rational>(a, params, N);
    for (std::size_t l = 0; l <= N; ++l) {
      Rational lhs(0), rhs(0);
      for (std::size_t n = 0; n <= l; ++n) lhs += a[n] * x[n];
      for (std::size_t n = 0; n <= l; ++n) rhs += e.at(l, n) * y[n];
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("unit coefficients reduce the duality matrix to one column") {
  std::size_t N = 8;
  SpaceParams params = layered_params(1.0);
  std::vector<Rational> a(N + 1, Rational(0));
  a[0] = 1;
  TriangleMatrix<Rational> e = build_e_matrix<Rational>(a, params, N);
  // sum_{n<=l} a_n x_n = x_0 depends on y_0 alone, through (G^{-1})_00.
  Rational expected = params.r.term_rational(0) /
                      (params.s.term_rational(0) * params.t.term_rational(0));
  for (std::size_t l = 0; l <= N; ++l) {
    CHECK(e.at(l, 0) == expected);
    for (std::size_t n = 1; n <= l; ++n) CHECK(e.at(l, n) == 0);
  }
}

TEST_CASE("identity parameters make the duality matrix row-constant") {
  std::size_t N = 10;
  SpaceParams params = plain_params(1.0);
  std::vector<Rational> a(N + 1);
  for (std::size_t n = 0; n <= N; ++n) a[n] = Rational(n + 1, 2);
  TriangleMatrix<Rational> e = build_e_matrix<Rational>(a, params, N);
  for (std::size_t l = 0; l <= N; ++l)
    for (std::size_t n = 0; n <= l; ++n) CHECK(e.at(l, n) == a[n]);
}

TEST_CASE("duality matrix rejects short coefficient vectors") {
  std::vector<Rational> a(4, Rational(1));
  CHECK_THROWS_AS(build_e_matrix<Rational>(a, plain_params(1.0), 8), Error);
}

TEST_CASE("the zero sequence belongs to every dual") {
  std::size_t N = 16;
  std::vector<Rational> a(N + 1, Rational(0));
  for (double p : {0.5, 2.0}) {
    SpaceParams params = layered_params(p);
    for (DualKind kind : {DualKind::alpha, DualKind::beta, DualKind::gamma}) {
      DualVerdict v = dual_membership<Rational>(a, kind, params, N);
      CHECK(v.overall.holds == Verdict::holds);
      CHECK(v.overall.sup_value == 0.0);
    }
  }
}

TEST_CASE("rapidly decaying coefficients pass the beta battery") {
  // The series probes need enough window for the geometric tail to drop
  // below tolerance, hence the wide window.
  std::size_t N = 70;
  SpaceParams params = plain_params(2.0);
  std::vector<Rational> a(N + 1);
  for (std::size_t n = 0; n <= N; ++n) a[n] = int_pow(Rational(1, 2), n);
  DualVerdict v = dual_membership<Rational>(a, DualKind::beta, params, N);
  CHECK(v.overall.holds == Verdict::holds);
  // battery names follow the p > 1 regime
  bool saw_b4 = false;
  for (const auto& [name, part] : v.parts) {
    if (name == "B4") saw_b4 = true;
    CHECK(part.holds == Verdict::holds);
  }
  CHECK(saw_b4);
}

TEST_CASE("factorially growing coefficients fail the beta battery") {
  std::size_t N = 16;
  SpaceParams params = plain_params(2.0);
  std::vector<Rational> a(N + 1, Rational(1));
  for (std::size_t n = 1; n <= N; ++n)
    a[n] = a[n - 1] * Rational(static_cast<long long>(n));
  DualVerdict v = dual_membership<Rational>(a, DualKind::beta, params, N);
  CHECK(v.overall.holds == Verdict::fails);
  bool b3_failed = false;
  for (const auto& [name, part] : v.parts)
    if (name == "B3" && part.holds == Verdict::fails) b3_failed = true;
  CHECK(b3_failed);
}

TEST_CASE("gamma membership for decaying coefficients in both regimes") {
  std::size_t N = 20;
  std::vector<Rational> a(N + 1);
  for (std::size_t n = 0; n <= N; ++n) a[n] = int_pow(Rational(1, 2), n);
  {
    SpaceParams params = tame_params(2.0);
    DualVerdict v = dual_membership<Rational>(a, DualKind::gamma, params, N);
    CHECK(v.overall.holds == Verdict::holds);
    CHECK(v.parts.size() == 1);
    CHECK(v.parts[0].first == "Gamma2");
  }
  {
    SpaceParams params = tame_params(0.5);
    DualVerdict v = dual_membership<Rational>(a, DualKind::gamma, params, N);
    CHECK(v.overall.holds == Verdict::holds);
    CHECK(v.parts[0].first == "Gamma1");
  }
}

TEST_CASE("alpha membership weighs the inverse window") {
  std::size_t N = 16;
  SpaceParams params = plain_params(2.0);
  std::vector<Rational> a(N + 1);
  for (std::size_t n = 0; n <= N; ++n) a[n] = int_pow(Rational(1, 2), n);
  DualVerdict v = dual_membership<Rational>(a, DualKind::alpha, params, N);
  CHECK(v.overall.holds == Verdict::holds);
  CHECK(v.parts[0].first == "H2");
}

TEST_CASE("mixed exponent regimes are rejected for dual batteries") {
  std::size_t N = 4;
  SpaceParams params = plain_params(1.0);
  params.p = ExponentSequence::from_list({0.5, 2.0, 0.5, 2.0, 0.5});
  std::vector<Rational> a(N + 1, Rational(1));
  try {
    dual_membership<Rational>(a, DualKind::beta, params, N);
    FAIL("expected a mixed_exponent_regime rejection");
  } catch (const Error& e) {
    CHECK(e.code() == errc::mixed_exponent_regime);
  }
}

TEST_CASE("finite-row operators map into linf when rows decay") {
  std::size_t N = 16;
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  // Support stays in the first columns so the window sees complete tails.
  for (std::size_t l = 0; l <= N; ++l) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    entries.emplace_back(l % 3, Rational(1, static_cast<long long>(l + 1)));
    A.rows.push_back(OperatorRow<Rational>::finite(std::move(entries)));
  }
  DualVerdict v = mapping_class_test<Rational>(A, MapTarget::l_inf, params, N);
  CHECK(v.overall.holds == Verdict::holds);
  bool saw_rows = false;
  for (const auto& [name, part] : v.parts) {
    if (name == "rowsInBetaDual") {
      saw_rows = true;
      CHECK(part.holds == Verdict::holds);
    }
  }
  CHECK(saw_rows);
}

TEST_CASE("exploding rows are rejected from the l1 mapping class") {
  std::size_t N = 12;
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  for (std::size_t l = 0; l <= N; ++l) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t k = 0; k <= N; ++k)
      entries.emplace_back(k, int_pow(Rational(3), k));
    A.rows.push_back(OperatorRow<Rational>::finite(std::move(entries)));
  }
  DualVerdict v = mapping_class_test<Rational>(A, MapTarget::l_1, params, N);
  CHECK(v.overall.holds == Verdict::fails);
}
