#include <doctest.h>

#include <cmath>
#include <random>

#include "seqspace/compact.hpp"

using namespace seqspace;

namespace {

SpaceParams plain_params(double p) {
  SpaceParams params;  // identity transform: the associated matrix equals A
  params.p = ExponentSequence::constant(p);
  return params;
}

SpaceParams shaped_params(double p) {
  SpaceParams params;
  params.r = SequenceFamily::arithmetic(Rational(1), Rational(1));
  params.s = SequenceFamily::prefix_then({Rational(2), Rational(1)},
                                         SequenceFamily::constant(Rational(0)));
  params.t = SequenceFamily::constant(Rational(3));
  params.m = 2;
  params.p = ExponentSequence::constant(p);
  return params;
}

OperatorRow<Rational> dense_row(std::mt19937_64& rng, std::size_t cols) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (std::size_t k = 0; k < cols; ++k)
    entries.emplace_back(k, Rational(num(rng), den(rng)));
  return OperatorRow<Rational>::finite(std::move(entries));
}

}  // namespace

TEST_CASE("associated rows are the rows times the inverse composite") {
  std::mt19937_64 rng(131);
  std::size_t N = 16;
  SpaceParams params = shaped_params(2.0);
  TriangleMatrix<Rational> inv = build_inverse_composite<Rational>(params, N);
  for (int trial = 0; trial < 5; ++trial) {
    OperatorRow<Rational> row = dense_row(rng, N + 1);
    AssociatedSequence<Rational> assoc =
        associated_sequence(row, params, N, 1e-14);
    CHECK(assoc.exact);
    CHECK(assoc.error_budget == 0.0);
    for (std::size_t k = 0; k <= N; ++k) {
      Rational oracle(0);
      for (std::size_t l = k; l <= N; ++l)
        oracle += row.entry(l) * inv.at(l, k);
      CHECK(assoc.values[k] == oracle);
    }
  }
}

TEST_CASE("identity parameters leave rows unchanged") {
  std::size_t N = 10;
  SpaceParams params = plain_params(2.0);
  std::vector<std::pair<std::size_t, Rational>> entries;
  for (std::size_t k = 0; k <= N; ++k)
    entries.emplace_back(k, Rational(static_cast<long long>(k) - 3, 2));
  OperatorRow<Rational> row = OperatorRow<Rational>::finite(entries);
  AssociatedSequence<Rational> assoc =
      associated_sequence(row, params, N, 1e-14);
  for (std::size_t k = 0; k <= N; ++k)
    CHECK(assoc.values[k] == Rational(static_cast<long long>(k) - 3, 2));
}

TEST_CASE("a decay certificate yields a bounded truncation error") {
  std::size_t N = 12;
  SpaceParams params = plain_params(2.0);
  OperatorRow<Rational> row = OperatorRow<Rational>::geometric_decay(
      [](std::size_t k) { return int_pow(Rational(1, 2), k); },
      {1.0, 0.5, 0});
  AssociatedSequence<Rational> assoc =
      associated_sequence(row, params, N, 1e-12);
  CHECK_FALSE(assoc.exact);
  CHECK(assoc.error_budget > 0.0);
  CHECK(assoc.error_budget < 1e-9);
  // With the identity transform the associated value is the entry itself,
  // up to the certified truncation error.
  for (std::size_t k = 0; k <= N; ++k)
    CHECK(to_double(assoc.values[k]) ==
          doctest::Approx(std::pow(0.5, double(k))).epsilon(1e-6));
}

TEST_CASE("a certificate too weak for the tolerance raises a policy error") {
  std::size_t N = 6;
  SpaceParams params = plain_params(2.0);
  OperatorRow<Rational> row = OperatorRow<Rational>::geometric_decay(
      [](std::size_t) { return Rational(1, 1000000); }, {1.0, 0.99995, 0});
  try {
    associated_sequence(row, params, N, 1e-14);
    FAIL("expected a series_divergence rejection");
  } catch (const Error& e) {
    CHECK(e.code() == errc::series_divergence);
    CHECK(e.exit_code() == 3);
  }
}

TEST_CASE("operator norm has the closed form for a product kernel") {
  // atilde_nk = 2^(-(n+k)) at p = 2: norm = sqrt(sum_k 4^-k) = sqrt(4/3).
  std::size_t N = 40;
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  A.target = TargetSpace::parse("c0");
  for (std::size_t n = 0; n <= N; ++n) {
    std::vector<std::pair<std::size_t, Rational>> entries;
    for (std::size_t k = 0; k <= N; ++k)
      entries.emplace_back(k, int_pow(Rational(1, 2), n + k));
    A.rows.push_back(OperatorRow<Rational>::finite(std::move(entries)));
  }
  double norm = operator_norm(A, params, N);
  CHECK(norm == doctest::Approx(std::sqrt(4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("rows attain their norm on the conjugate extremal sequence") {
  std::mt19937_64 rng(151);
  std::size_t N = 12;
  SpaceParams params = plain_params(3.0);
  double p = 3.0, pc = 1.5;
  for (int trial = 0; trial < 5; ++trial) {
    OperatorRow<Rational> row = dense_row(rng, N + 1);
    AssociatedSequence<Rational> assoc =
        associated_sequence(row, params, N, 1e-14);
    double denom = 0.0;
    for (std::size_t k = 0; k <= N; ++k)
      denom += std::pow(std::fabs(to_double(assoc.values[k])), pc);
    if (denom == 0.0) continue;
    double row_norm = std::pow(denom, 1.0 / pc);
    // y_k = sgn(a_k) |a_k|^(pc-1) / ||a||^(pc-1) has unit l_p norm and pairs
    // with the row to exactly the conjugate norm.
    double paired = 0.0, ynorm = 0.0;
    for (std::size_t k = 0; k <= N; ++k) {
      double a = to_double(assoc.values[k]);
      double y = (a > 0 ? 1.0 : (a < 0 ? -1.0 : 0.0)) *
                 std::pow(std::fabs(a), pc - 1.0) /
                 std::pow(row_norm, pc - 1.0);
      paired += a * y;
      ynorm += std::pow(std::fabs(y), p);
    }
    CHECK(std::pow(ynorm, 1.0 / p) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(paired == doctest::Approx(row_norm).epsilon(1e-9));
  }
}

TEST_CASE("the l1 operator norm is the largest column sum") {
  std::size_t N = 1;
  SpaceParams params = plain_params(1.0);
  OperatorSpec<Rational> A;
  A.p = 1.0;
  A.target = TargetSpace::parse("l1");
  A.rows.push_back(OperatorRow<Rational>::finite({{0, Rational(1)},
                                                  {1, Rational(2)}}));
  A.rows.push_back(OperatorRow<Rational>::finite({{0, Rational(3)},
                                                  {1, Rational(4)}}));
  CHECK(l1_norm(A, params, N) == Rational(6));
}

TEST_CASE("the bv norm doubles a single interior entry") {
  std::size_t N = 5;
  SpaceParams params = plain_params(1.0);
  OperatorSpec<Rational> A;
  A.p = 1.0;
  A.target = TargetSpace::parse("bv");
  A.rows.push_back(OperatorRow<Rational>::zero());
  A.rows.push_back(OperatorRow<Rational>::zero());
  A.rows.push_back(
      OperatorRow<Rational>::finite({{0, Rational(-7, 3)}}));
  CHECK(bv_norm(A, params, N) == Rational(14, 3));
}

TEST_CASE("the bv norm equals the l1 norm of the differenced operator") {
  std::mt19937_64 rng(161);
  std::size_t N = 10;
  SpaceParams params = shaped_params(1.0);
  for (int trial = 0; trial < 5; ++trial) {
    OperatorSpec<Rational> A;
    A.p = 1.0;
    A.target = TargetSpace::parse("bv");
    for (std::size_t n = 0; n <= N; ++n) A.rows.push_back(dense_row(rng, N + 1));

    OperatorSpec<Rational> diff;
    diff.p = 1.0;
    diff.target = TargetSpace::parse("l1");
    for (std::size_t n = 0; n <= N; ++n) {
      std::vector<std::pair<std::size_t, Rational>> entries;
      for (std::size_t k = 0; k <= N; ++k) {
        Rational prev = n == 0 ? Rational(0) : A.rows[n - 1].entry(k);
        entries.emplace_back(k, Rational(prev - A.rows[n].entry(k)));
      }
      diff.rows.push_back(OperatorRow<Rational>::finite(std::move(entries)));
    }
    CHECK(bv_norm(A, params, N) == l1_norm(diff, params, N));
  }
}

TEST_CASE("finite-rank operators have vanishing chi bounds") {
  std::size_t N = 64;
  SpaceParams params = shaped_params(2.0);
  std::mt19937_64 rng(171);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  for (const char* target : {"c0", "c", "linf"}) {
    A.target = TargetSpace::parse(target);
    A.rows.clear();
    for (std::size_t n = 0; n < 5; ++n) A.rows.push_back(dense_row(rng, 8));
    ChiEstimate chi = chi_estimate(A, params, N, 16);
    CHECK(chi.lower == 0.0);
    CHECK(chi.upper == 0.0);
    CHECK(chi.plateau_reached);

    ClassificationResult c = classify_compact(A, params, N, 16);
    CHECK(c.verdict == Compactness::compact);
  }
}

TEST_CASE("constant unit rows are noncompact into c0") {
  std::size_t N = 64;
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  A.target = TargetSpace::parse("c0");
  for (std::size_t n = 0; n <= N; ++n)
    A.rows.push_back(OperatorRow<Rational>::finite({{0, Rational(1)}}));
  ChiEstimate chi = chi_estimate(A, params, N, 16);
  CHECK(chi.lower >= 1.0 - 1e-12);
  ClassificationResult c = classify_compact(A, params, N, 16);
  CHECK(c.verdict == Compactness::noncompact);
}

TEST_CASE("a drop below the source exponent is compact by the Pitt route") {
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  A.target = TargetSpace::parse("lq", 1.0);
  // Entries do not matter for this route.
  A.rows.push_back(OperatorRow<Rational>::finite({{0, Rational(1000000)}}));
  ClassificationResult c = classify_compact(A, params, 16, 4);
  CHECK(c.verdict == Compactness::compact);

  A.target = TargetSpace::parse("lq", 3.0);
  ClassificationResult c2 = classify_compact(A, params, 16, 4);
  CHECK(c2.verdict == Compactness::undetermined);
}

TEST_CASE("bv targets with p above one ride the difference theorem") {
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  A.target = TargetSpace::parse("bv");
  A.rows.push_back(OperatorRow<Rational>::finite({{0, Rational(1)}}));
  CHECK(classify_compact(A, params, 8, 2).verdict == Compactness::compact);
}

TEST_CASE("harmonic deviations from a constant limit are compact into c") {
  std::size_t N = 128;
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  A.target = TargetSpace::parse("c");
  for (std::size_t n = 0; n <= N; ++n)
    A.rows.push_back(OperatorRow<Rational>::finite(
        {{0, Rational(1) + Rational(1, static_cast<long long>(n) + 1)}}));
  ClassificationResult c = classify_compact(A, params, N, 16);
  CHECK(c.verdict == Compactness::compact);
  REQUIRE(c.chi.has_value());
  CHECK(c.chi->upper <= c.chi->tail_sequence[0] + 1e-12);
}

TEST_CASE("chi bounds sit inside the operator norm") {
  std::mt19937_64 rng(181);
  std::size_t N = 48;
  SpaceParams params = shaped_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 2.0;
  A.target = TargetSpace::parse("c0");
  for (std::size_t n = 0; n <= N; ++n) A.rows.push_back(dense_row(rng, 10));
  ChiEstimate chi = chi_estimate(A, params, N, 12);
  double norm = operator_norm(A, params, N);
  CHECK(0.0 <= chi.lower);
  CHECK(chi.lower <= chi.upper + 1e-12);
  CHECK(chi.upper <= norm + 1e-12);
}

TEST_CASE("chi estimates reject out-of-scope inputs") {
  SpaceParams params = plain_params(2.0);
  OperatorSpec<Rational> A;
  A.p = 1.0;
  A.target = TargetSpace::parse("c0");
  A.rows.push_back(OperatorRow<Rational>::zero());
  CHECK_THROWS_AS(chi_estimate(A, params, 8, 2), Error);  // p = 1

  A.p = 2.0;
  A.target = TargetSpace::parse("l1");
  CHECK_THROWS_AS(chi_estimate(A, params, 8, 2), Error);  // target

  A.target = TargetSpace::parse("c0");
  CHECK_THROWS_AS(chi_estimate(A, params, 8, 0), Error);  // window
  CHECK_THROWS_AS(chi_estimate(A, params, 8, 9), Error);  // window
}
