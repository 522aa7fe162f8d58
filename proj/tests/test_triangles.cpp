#include <doctest.h>

#include <random>

#include "seqspace/triangles.hpp"

using namespace seqspace;

namespace {

SequenceFamily finite_seq(std::vector<Rational> head) {
  return SequenceFamily::prefix_then(std::move(head),
                                     SequenceFamily::constant(Rational(0)));
}

Rational small_rational(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  int n = num(rng);
  while (nonzero && n == 0) n = num(rng);
  return Rational(n, den(rng));
}

// Nonvanishing families only; numerators stay small so exact arithmetic at
// window sizes up to 64 stays fast.
SequenceFamily nonzero_family(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> nz(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  Rational c(sign(rng) ? nz(rng) : -nz(rng));
  switch (pick(rng)) {
    case 0: return SequenceFamily::arithmetic(Rational(1), Rational(1));
    case 1: return SequenceFamily::constant(c);
    case 2: return SequenceFamily::geometric(c, Rational(1, 2));
    default:
      return SequenceFamily::reciprocal(
          SequenceFamily::arithmetic(Rational(1), Rational(1)));
  }
}

SpaceParams random_params(std::mt19937_64& rng, unsigned m) {
  std::uniform_int_distribution<int> nz(1, 4);
  std::uniform_int_distribution<int> sign(0, 1);
  SpaceParams params;
  params.r = nonzero_family(rng);
  std::vector<Rational> sv{Rational(sign(rng) ? nz(rng) : -nz(rng))};
  for (int i = 0; i < 3; ++i) sv.push_back(small_rational(rng, false));
  params.s = SequenceFamily::prefix_then(
      std::move(sv), SequenceFamily::constant(Rational(0)));
  params.t = nonzero_family(rng);
  params.m = m;
  params.p = ExponentSequence::constant(1.0);
  return params;
}

}  // namespace

TEST_CASE("inversion coefficients for the all-ones kernel") {
  DCoefficients<Rational> d =
      compute_d_coefficients<Rational>(SequenceFamily::ones(), 5);
  CHECK(d.values[0] == 1);
  CHECK(d.values[1] == 1);
  for (std::size_t n = 2; n <= 5; ++n) CHECK(d.values[n] == 0);
  CHECK_FALSE(d.loss_of_precision);
}

TEST_CASE("inversion coefficients double when s = (1,2,0,...)") {
  DCoefficients<Rational> d = compute_d_coefficients<Rational>(
      finite_seq({Rational(1), Rational(2)}), 3);
  CHECK(d.values[0] == 1);
  CHECK(d.values[1] == 2);
  CHECK(d.values[2] == 4);
  CHECK(d.values[3] == 8);
}

TEST_CASE("inversion coefficients halve when s = (2,1,0,...)") {
  DCoefficients<Rational> d = compute_d_coefficients<Rational>(
      finite_seq({Rational(2), Rational(1)}), 3);
  CHECK(d.values[0] == Rational(1, 2));
  CHECK(d.values[1] == Rational(1, 4));
  CHECK(d.values[2] == Rational(1, 8));
  CHECK(d.values[3] == Rational(1, 16));
}

TEST_CASE("determinant oracle pins the recurrence") {
  CHECK(determinant_oracle_d<Rational>(SequenceFamily::ones(), 2) == 0);
  CHECK(determinant_oracle_d<Rational>(
            finite_seq({Rational(1), Rational(2)}), 2) == 4);
  CHECK_THROWS_AS(determinant_oracle_d<Rational>(SequenceFamily::ones(), 9),
                  Error);

  std::mt19937_64 rng(1001);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> sv{small_rational(rng, true)};
    for (int i = 0; i < 8; ++i) sv.push_back(small_rational(rng, false));
    SequenceFamily s = SequenceFamily::prefix(sv);
    DCoefficients<Rational> d = compute_d_coefficients<Rational>(s, 8);
    for (unsigned n = 0; n <= 8; ++n)
      CHECK(d.values[n] == determinant_oracle_d<Rational>(s, n));
  }
}

TEST_CASE("the means triangle with natural weights is the running average") {
  SequenceFamily r = SequenceFamily::arithmetic(Rational(1), Rational(1));
  TriangleMatrix<Rational> a =
      build_means<Rational>(r, SequenceFamily::ones(), SequenceFamily::ones(), 4);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(a.at(n, k) == Rational(1, static_cast<long long>(n) + 1));
}

TEST_CASE("difference triangles carry alternating binomial bands") {
  TriangleMatrix<Rational> d1 = build_difference<Rational>(1, 3);
  CHECK(d1.at(0, 0) == 1);
  CHECK(d1.at(2, 1) == -1);
  CHECK(d1.at(2, 2) == 1);
  CHECK(d1.entry(3, 0) == 0);

  TriangleMatrix<Rational> d2 = build_difference<Rational>(2, 4);
  CHECK(d2.at(2, 0) == 1);
  CHECK(d2.at(2, 1) == -2);
  CHECK(d2.at(2, 2) == 1);
  CHECK(d2.entry(4, 1) == 0);
}

TEST_CASE("composite kernel matches the product of its factors") {
  std::mt19937_64 rng(2002);
  for (unsigned m = 1; m <= 3; ++m) {
    SpaceParams params = random_params(rng, m);
    TriangleMatrix<Rational> composite = build_composite<Rational>(params, 12);
    TriangleMatrix<Rational> product =
        build_means<Rational>(params.r, params.s, params.t, 12)
            .multiply(build_difference<Rational>(m, 12));
    CHECK(composite.equals(product));
  }
}

TEST_CASE("composite row example under averaged first differences") {
  SpaceParams params;
  params.r = SequenceFamily::arithmetic(Rational(1), Rational(1));
  TriangleMatrix<Rational> g = build_composite<Rational>(params, 3);
  CHECK(g.at(0, 0) == 1);
  CHECK(g.at(1, 0) == 0);
  CHECK(g.at(1, 1) == Rational(1, 2));
  CHECK(g.at(3, 3) == Rational(1, 4));
}

TEST_CASE("plain summation of second differences is the first difference") {
  SpaceParams params;
  params.m = 2;
  TriangleMatrix<Rational> g = build_composite<Rational>(params, 6);
  CHECK(g.equals(build_difference<Rational>(1, 6)));

  TriangleMatrix<Rational> inv = build_inverse_composite<Rational>(params, 6);
  for (std::size_t n = 0; n <= 6; ++n)
    for (std::size_t k = 0; k <= n; ++k) CHECK(inv.at(n, k) == 1);
}

TEST_CASE("inverse triangles invert on both sides") {
  std::mt19937_64 rng(3003);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<unsigned> order(1, 3);
    SpaceParams params = random_params(rng, order(rng));
    TriangleMatrix<Rational> id = TriangleMatrix<Rational>::identity(16);

    TriangleMatrix<Rational> a =
        build_means<Rational>(params.r, params.s, params.t, 16);
    TriangleMatrix<Rational> b =
        build_inverse_means<Rational>(params.r, params.s, params.t, 16);
    CHECK(a.multiply(b).equals(id));
    CHECK(b.multiply(a).equals(id));

    TriangleMatrix<Rational> g = build_composite<Rational>(params, 16);
    TriangleMatrix<Rational> ginv = build_inverse_composite<Rational>(params, 16);
    CHECK(g.multiply(ginv).equals(id));
    CHECK(ginv.multiply(g).equals(id));
  }
}

TEST_CASE("triangle plumbing validates indices and shapes") {
  TriangleMatrix<Rational> id = TriangleMatrix<Rational>::identity(3);
  CHECK(id.entry(1, 3) == 0);  // above the diagonal
  CHECK_THROWS_AS(id.at(4, 0), Error);
  CHECK(id.diagonal_nonzero());
  CHECK(id.max_abs_deviation_from_identity() == 0.0);

  std::vector<Rational> wrong(3, Rational(1));
  CHECK_THROWS_AS(id.apply(wrong), Error);
  std::vector<Rational> right(4, Rational(2));
  CHECK(id.apply(right) == right);

  TriangleMatrix<Rational> other(5);
  CHECK_THROWS_AS(id.multiply(other), Error);
}

TEST_CASE("degenerate parameters are rejected with their own codes") {
  SpaceParams params;
  params.s = finite_seq({Rational(0), Rational(1)});
  try {
    build_composite<Rational>(params, 4);
    FAIL("expected a zero_s0 rejection");
  } catch (const Error& e) {
    CHECK(e.code() == errc::zero_s0);
  }
}

TEST_CASE("float kernel composite tracks the rational kernel") {
  std::mt19937_64 rng(4004);
  SpaceParams params = random_params(rng, 2);
  TriangleMatrix<Rational> exact = build_composite<Rational>(params, 10);
  TriangleMatrix<double> approx = build_composite<double>(params, 10);
  for (std::size_t n = 0; n <= 10; ++n)
    for (std::size_t k = 0; k <= n; ++k)
      CHECK(approx.at(n, k) ==
            doctest::Approx(to_double(exact.at(n, k))).epsilon(1e-12));
}
