#include <doctest.h>

#include "ore/errors.hpp"
#include "ore/field_tower.hpp"
#include "ore/rng.hpp"

using namespace ore;

namespace {

FieldPtr f125() { return FiniteField::create(FieldSpec{5, 3, {3, 3, 0, 1}}); }

// The coefficient formulas of the two automorphisms of F_5(alpha) used by
// the reference ring, written out by hand.
std::vector<std::uint32_t> sigma1_formula(std::uint32_t a0, std::uint32_t a1, std::uint32_t a2) {
  return {(a0 + a1 + a2) % 5, (3 * a2) % 5, (3 * a1 + 4 * a2) % 5};
}
std::vector<std::uint32_t> sigma2_formula(std::uint32_t a0, std::uint32_t a1, std::uint32_t a2) {
  return {(a0 + 4 * a1 + 3 * a2) % 5, (4 * a1 + 2 * a2) % 5, (2 * a1) % 5};
}

}  // namespace

TEST_CASE("products of powers of alpha reduce modulo x^3 + 3x + 3") {
  auto f = f125();
  auto a = f->generator();
  CHECK((a * a * a).coeffs() == std::vector<std::uint32_t>{2, 2, 0});
  CHECK(((a * a) * (a * a)).coeffs() == std::vector<std::uint32_t>{0, 2, 2});
  for (Coeff c = 0; c < f->order(); ++c) CHECK(f->one() * f->element_at(c) == f->element_at(c));
}

TEST_CASE("inverse") {
  auto f = f125();
  CHECK(f->one().inverse() == f->one());
  CHECK(f->generator().inverse().coeffs() == std::vector<std::uint32_t>{4, 0, 3});
  CHECK_THROWS_AS(f->zero().inverse(), ZeroInverse);
  for (Coeff c = 1; c < f->order(); ++c) CHECK(f->element_at(c) * f->element_at(c).inverse() == f->one());
}

TEST_CASE("Frobenius powers on alpha") {
  auto f = f125();
  CHECK(frobenius_apply({1}, f->generator()).coeffs() == std::vector<std::uint32_t>{4, 4, 2});
  CHECK(frobenius_apply({2}, f->generator()).coeffs() == std::vector<std::uint32_t>{1, 0, 3});
  // against direct powering
  CHECK(frobenius_apply({1}, f->generator()) == f->generator().pow(5));
  CHECK(frobenius_apply({2}, f->generator()) == f->generator().pow(25));
  for (Coeff c = 0; c < f->order(); ++c) CHECK(frobenius_apply({0}, f->element_at(c)) == f->element_at(c));
}

TEST_CASE("hand-written automorphism formulas are Frobenius^2 and Frobenius^1 on all 125 elements") {
  auto f = f125();
  for (std::uint32_t a0 = 0; a0 < 5; ++a0)
    for (std::uint32_t a1 = 0; a1 < 5; ++a1)
      for (std::uint32_t a2 = 0; a2 < 5; ++a2) {
        const auto x = f->element({a0, a1, a2});
        CHECK(frobenius_apply({2}, x).coeffs() == sigma1_formula(a0, a1, a2));
        CHECK(frobenius_apply({1}, x).coeffs() == sigma2_formula(a0, a1, a2));
      }
}

TEST_CASE("field axioms on random triples") {
  Rng rng(11);
  for (auto f : {f125(), FiniteField::create(FieldSpec{2, 2, {1, 1, 1}}), FiniteField::prime(71),
                 FiniteField::create(FieldSpec{3, 4, {2, 0, 0, 1, 1}})}) {
    CAPTURE(format_field_spec(f->spec()));
    for (int i = 0; i < 1000; ++i) {
      auto a = f->element_at(static_cast<Coeff>(rng.below(f->order())));
      auto b = f->element_at(static_cast<Coeff>(rng.below(f->order())));
      auto c = f->element_at(static_cast<Coeff>(rng.below(f->order())));
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + (-a) == f->zero());
      REQUIRE(a - b + b == a);
      if (!a.is_zero()) REQUIRE(a * a.inverse() == f->one());
    }
  }
}

TEST_CASE("Frobenius is a ring homomorphism of order k fixing the prime field") {
  Rng rng(12);
  for (auto f : {f125(), FiniteField::create(FieldSpec{2, 2, {1, 1, 1}}), FiniteField::create(FieldSpec{3, 2, {1, 0, 1}})}) {
    const std::uint32_t k = f->degree();
    for (std::uint32_t j = 0; j < k; ++j) {
      for (int i = 0; i < 200; ++i) {
        auto a = f->element_at(static_cast<Coeff>(rng.below(f->order())));
        auto b = f->element_at(static_cast<Coeff>(rng.below(f->order())));
        REQUIRE(frobenius_apply({j}, a + b) == frobenius_apply({j}, a) + frobenius_apply({j}, b));
        REQUIRE(frobenius_apply({j}, a * b) == frobenius_apply({j}, a) * frobenius_apply({j}, b));
      }
      for (Coeff c = 0; c < f->characteristic(); ++c)
        REQUIRE(frobenius_apply({j}, f->element_at(c)) == f->element_at(c));
    }
    for (Coeff c = 0; c < f->order(); ++c) {
      auto x = f->element_at(c);
      for (std::uint32_t s = 0; s < k; ++s) x = frobenius_apply({1}, x);
      REQUIRE(x == f->element_at(c));
    }
  }
}

TEST_CASE("field construction is validated") {
  CHECK_THROWS_AS(FiniteField::create(FieldSpec{4, 2, {1, 1, 1}}), StructuralError);
  CHECK_THROWS_AS(FiniteField::create(FieldSpec{5, 3, {3, 3, 0, 2}}), StructuralError);  // not monic
  CHECK_THROWS_AS(FiniteField::create(FieldSpec{5, 3, {0, 1, 0, 1}}), StructuralError);  // root 0
  CHECK_THROWS_AS(FiniteField::create(FieldSpec{5, 3, {3, 3, 1}}), StructuralError);     // wrong length
  // (x^2 + 2)(x^2 + 3) = x^4 + 1 over F_5 has no root but is reducible
  CHECK_THROWS_AS(FiniteField::create(FieldSpec{5, 4, {1, 0, 0, 0, 1}}), StructuralError);
  auto f = f125();
  auto g = FiniteField::create(FieldSpec{2, 2, {1, 1, 1}});
  CHECK_THROWS_AS(f->one() * g->one(), StructuralError);
  CHECK_THROWS_AS(f->one() + g->one(), StructuralError);
}

TEST_CASE("text forms round-trip") {
  auto f = f125();
  CHECK(format_field_spec(f->spec()) == "field p=5 k=3 m=[3,3,0,1]");
  CHECK(parse_field_spec("field p=5 k=3 m=[3,3,0,1]") == f->spec());
  for (Coeff c = 0; c < f->order(); ++c) CHECK(f->parse(f->format(c)) == c);
  CHECK(f->format(f->generator().index()) == "[0,1,0]");
  CHECK_THROWS_AS(f->parse("[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_field_spec("field p=5 k=3"), ParseError);
}
