#include <doctest.h>

#include <random>

#include "seqspace/spaces.hpp"

using namespace seqspace;

namespace {

SpaceParams identity_params(double p = 1.0) {
  SpaceParams params;  // r = s = t = e, m = 1: the composite is the identity
  params.p = ExponentSequence::constant(p);
  return params;
}

SpaceParams averaged_params(double p) {
  SpaceParams params;
  params.r = SequenceFamily::arithmetic(Rational(1), Rational(1));
  params.t = SequenceFamily::reciprocal(
      SequenceFamily::arithmetic(Rational(2), Rational(1)));
  params.m = 2;
  params.p = ExponentSequence::constant(p);
  return params;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<Rational> x(len);
  for (auto& v : x) v = Rational(num(rng), den(rng));
  return x;
}

}  // namespace

TEST_CASE("identity parameters make the composite the identity map") {
  Space<Rational> space(identity_params(), 8);
  CHECK(space.composite().equals(TriangleMatrix<Rational>::identity(8)));
  std::vector<Rational> x{Rational(1), Rational(-2), Rational(3), Rational(0),
                          Rational(5), Rational(1), Rational(1, 2),
                          Rational(7), Rational(-1)};
  CHECK(space.forward(x) == x);
}

TEST_CASE("forward then inverse is the identity on the window") {
  std::mt19937_64 rng(5005);
  Space<Rational> space(averaged_params(1.0), 24);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rational> x = random_vector(rng, 25);
    std::vector<Rational> y = space.forward(x);
    CHECK(space.inverse(y) == x);
  }
}

TEST_CASE("staged forward transform agrees with the composite matrix") {
  std::mt19937_64 rng(6006);
  Space<Rational> space(averaged_params(1.0), 20);
  std::vector<Rational> x = random_vector(rng, 21);
  CHECK(space.forward(x) == space.composite().apply(x));
}

TEST_CASE("geometric tail paranorm is exact at p = 1") {
  std::size_t N = 40;
  Space<Rational> space(identity_params(1.0), N);
  std::vector<Rational> x(N + 1);
  for (std::size_t k = 0; k <= N; ++k) x[k] = int_pow(Rational(1, 2), k);
  ParanormResult<Rational> h = space.paranorm(x);
  CHECK(h.exact_sum);
  CHECK(h.sum_powers == Rational(2) - int_pow(Rational(1, 2), N));
  CHECK(h.value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(h.last_term_power == int_pow(Rational(1, 2), N));
}

TEST_CASE("bk norm recovers the 3-4-5 triangle at p = 2") {
  Space<Rational> space(identity_params(2.0), 4);
  std::vector<Rational> x{Rational(3), Rational(4), Rational(0), Rational(0),
                          Rational(0)};
  NormResult<Rational> norm = space.bk_norm(x, 2.0);
  CHECK(norm.exact_sum);
  CHECK(norm.sum_powers == 25);
  CHECK(norm.value == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(space.bk_norm(x, 0.5), Error);
}

TEST_CASE("fractional exponents fall back to a float power sum") {
  Space<Rational> space(identity_params(1.5), 3);
  std::vector<Rational> x{Rational(1), Rational(1), Rational(0), Rational(0)};
  ParanormResult<Rational> h = space.paranorm(x);
  CHECK_FALSE(h.exact_sum);
  // M = 1.5, sum = 2: h = 2^(2/3)
  CHECK(h.value == doctest::Approx(std::pow(2.0, 2.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("basis vectors are the inverse composite columns") {
  Space<Rational> space(averaged_params(1.0), 18);
  const TriangleMatrix<Rational>& inv = space.inverse_composite();
  for (std::size_t j = 0; j <= 18; j += 3) {
    std::vector<Rational> b = space.basis_vector(j);
    for (std::size_t n = 0; n <= 18; ++n) CHECK(b[n] == inv.entry(n, j));
  }
  CHECK_THROWS_AS(space.basis_vector(19), Error);
}

TEST_CASE("basis vectors reproduce unit images") {
  Space<Rational> space(averaged_params(1.0), 12);
  for (std::size_t j = 0; j <= 12; j += 4) {
    std::vector<Rational> b = space.basis_vector(j);
    std::vector<Rational> image = space.forward(b);
    for (std::size_t n = 0; n <= 12; ++n)
      CHECK(image[n] == (n == j ? Rational(1) : Rational(0)));
  }
}

TEST_CASE("reconstruction remainders telescope for a geometric sequence") {
  std::size_t N = 30;
  Space<Rational> space(identity_params(1.0), N);
  std::vector<Rational> x(N + 1);
  for (std::size_t k = 0; k <= N; ++k) x[k] = int_pow(Rational(1, 2), k);

  auto curve = space.reconstruction_curve(x, N);
  REQUIRE(curve.size() == N + 1);
  for (std::size_t J = 0; J <= N; ++J) {
    Rational expected = int_pow(Rational(1, 2), J) - int_pow(Rational(1, 2), N);
    CHECK(curve[J].sum_powers == expected);
  }
  for (std::size_t J = 1; J <= N; ++J)
    CHECK(curve[J].sum_powers <= curve[J - 1].sum_powers);
  CHECK(curve[N].sum_powers == 0);

  ReconstructionStep<Rational> step = space.reconstruct(x, 10);
  CHECK(step.remainder.sum_powers == curve[10].sum_powers);
}

TEST_CASE("reconstruction converges under nontrivial parameters too") {
  std::mt19937_64 rng(7007);
  std::size_t N = 16;
  Space<Rational> space(averaged_params(1.0), N);
  std::vector<Rational> x = random_vector(rng, N + 1);
  auto curve = space.reconstruction_curve(x, N);
  CHECK(curve[N].sum_powers == 0);  // full expansion recovers x exactly
}

TEST_CASE("paranorm axioms hold on random samples") {
  std::mt19937_64 rng(8008);
  std::size_t N = 12;
  Space<Rational> space(averaged_params(1.0), N);

  std::vector<Rational> zero(N + 1, Rational(0));
  CHECK(space.paranorm(zero).sum_powers == 0);

  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> x = random_vector(rng, N + 1);
    std::vector<Rational> y = random_vector(rng, N + 1);
    std::vector<Rational> neg(N + 1), sum(N + 1);
    for (std::size_t i = 0; i <= N; ++i) {
      neg[i] = -x[i];
      sum[i] = x[i] + y[i];
    }
    ParanormResult<Rational> hx = space.paranorm(x);
    CHECK(space.paranorm(neg).sum_powers == hx.sum_powers);
    // p <= 1 everywhere: the power sum itself is subadditive, so the
    // triangle inequality can be checked without leaving the rationals.
    CHECK(space.paranorm(sum).sum_powers <=
          hx.sum_powers + space.paranorm(y).sum_powers);
  }
}

TEST_CASE("window mismatches are rejected") {
  Space<Rational> space(identity_params(), 4);
  std::vector<Rational> x(4, Rational(1));
  CHECK_THROWS_AS(space.forward(x), Error);
  CHECK_THROWS_AS(space.paranorm(x), Error);
}
