#include <doctest.h>

#include "oracles.hpp"
#include "ore/commuting_sets.hpp"
#include "ore/errors.hpp"
#include "support.hpp"

using namespace ore;

namespace {

OrePolynomial P(const RingPtr& r, const char* text) { return OrePolynomial::parse(r, text); }

}  // namespace

TEST_CASE("constant polynomials") {
  ConstantPolynomial f(71, {-44, 22, 48});
  CHECK(f.coeffs() == std::vector<std::uint32_t>{27, 22, 48});
  CHECK(f.degree() == 2);
  CHECK(f.to_string() == "[27,22,48]");
  CHECK(ConstantPolynomial::parse(71, "[27,22,48]") == f);
  CHECK(ConstantPolynomial(5, {1, 2, 0, 0}).degree() == 1);
  CHECK_THROWS_AS(ConstantPolynomial(71, {0, 1}), DomainError);
  CHECK_THROWS_AS(ConstantPolynomial(71, {71, 1}), DomainError);
  CHECK_THROWS_AS(ConstantPolynomial(71, {5}), DomainError);
  CHECK_THROWS_AS(ConstantPolynomial(71, {5, 0}), DomainError);
  CHECK_THROWS_AS(ConstantPolynomial(8, {1, 1}), StructuralError);
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    auto g = ConstantPolynomial::random(5, 4, rng);
    REQUIRE(g.coeffs().front() != 0);
    REQUIRE(g.degree() == 4);
  }
}

TEST_CASE("evaluation at the Weyl example generators") {
  auto w = OreRing::parse("weyl3-f71");
  auto p = P(w, "-5*x3^2 - 2*x1*d3 + 34");
  CHECK(evaluate_at(ConstantPolynomial(71, {0 + 1, 1}), p) == p + P(w, "1"));
  auto pa = evaluate_at(ConstantPolynomial(71, {27, 22, 48}), p);
  CHECK(pa == p * p * P(w, "48") + p * P(w, "22") + P(w, "27"));
}

TEST_CASE("Horner evaluation agrees with the power-sum oracle") {
  Rng rng(52);
  for (const char* name : {"f125-skew2", "weyl2-f71", "weyl3-f71"}) {
    auto ring = OreRing::parse(name);
    const std::uint32_t p = ring->field()->characteristic();
    for (int i = 0; i < 30; ++i) {
      auto gen = support::small_random(ring, 3, 5, rng);
      auto f = ConstantPolynomial::random(p, rng.between(1, 5), rng);
      REQUIRE(evaluate_at(f, gen) == oracle::evaluate_naive(f.coeffs(), gen));
    }
  }
}

TEST_CASE("members of one pool commute and degrees scale") {
  Rng rng(53);
  for (const char* name : {"f125-skew2", "weyl2-f71"}) {
    auto ring = OreRing::parse(name);
    const std::uint32_t p = ring->field()->characteristic();
    for (int i = 0; i < 200; ++i) {
      auto gen = support::small_nonconstant(ring, 2, 4, rng);
      auto f = ConstantPolynomial::random(p, rng.between(1, 3), rng);
      auto g = ConstantPolynomial::random(p, rng.between(1, 3), rng);
      auto fp = evaluate_at(f, gen), gp = evaluate_at(g, gen);
      REQUIRE(fp * gp == gp * fp);
      DegreeProfile expected = gen.degree_profile();
      for (std::size_t k = 1; k < f.degree(); ++k) expected = expected + gen.degree_profile();
      auto got = fp.degree_profile();
      REQUIRE(got.per_variable == expected.per_variable);
      REQUIRE(got.total == expected.total);
    }
  }
}

TEST_CASE("private sampling") {
  auto ring = OreRing::parse("f125-skew2");
  Rng rng(54);
  auto L = random_polynomial(ring, 6, kDense, rng);
  auto gen = random_polynomial(ring, 2, kDense, rng);
  REQUIRE_FALSE(commutes(gen, L));
  for (int i = 0; i < 100; ++i) {
    auto [f, value] = sample_private(gen, L, 3, rng);
    REQUIRE(f.coeffs().front() != 0);
    REQUIRE(f.degree() == 3);
    REQUIRE(value == evaluate_at(f, gen));
    REQUIRE_FALSE(commutes(value, L));
  }
  Rng a(9), b(9);
  CHECK(sample_private(gen, L, 4, a).second == sample_private(gen, L, 4, b).second);
  CHECK_THROWS_AS(sample_private(gen, gen * gen, 2, rng), DomainError);
}

TEST_CASE("commuting draws are resampled") {
  // In characteristic 2, d1^2 is central in the Weyl algebra, so f(d1)
  // commutes with x1 exactly when the odd coefficients of f vanish.
  auto ring = OreRing::parse("weyl2-f2");
  auto gen = P(ring, "d1");
  auto L = P(ring, "x1");
  REQUIRE_FALSE(commutes(gen, L));
  CHECK(commutes(evaluate_at(ConstantPolynomial(2, {1, 0, 1}), gen), L));
  CHECK_FALSE(commutes(evaluate_at(ConstantPolynomial(2, {1, 1, 1}), gen), L));
  Rng rng(55);
  for (int i = 0; i < 100; ++i) {
    auto [f, value] = sample_private(gen, L, 2, rng);
    REQUIRE(f.coeffs() == std::vector<std::uint32_t>{1, 1, 1});
    REQUIRE_FALSE(commutes(value, L));
  }
}
