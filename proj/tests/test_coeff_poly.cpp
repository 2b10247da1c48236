#include <doctest.h>

#include "ore/coeff_poly.hpp"
#include "ore/errors.hpp"
#include "ore/rng.hpp"

using namespace ore;

namespace {

CommPolynomial random_comm(std::uint32_t p, std::size_t n, unsigned max_exp, int terms, Rng& rng) {
  CommPolynomial r(p, n);
  for (int t = 0; t < terms; ++t) {
    std::vector<std::uint32_t> e(n);
    for (auto& v : e) v = static_cast<std::uint32_t>(rng.below(max_exp + 1));
    r.add_term(e, static_cast<std::int64_t>(rng.below(p)));
  }
  return r;
}

}  // namespace

TEST_CASE("products") {
  const auto x1 = CommPolynomial::variable(5, 2, 1);
  const auto x2 = CommPolynomial::variable(5, 2, 2);
  const auto one = CommPolynomial::constant(5, 2, 1);
  CHECK((x1 + one) * (x1 + CommPolynomial::constant(5, 2, 4)) == x1 * x1 + CommPolynomial::constant(5, 2, 4));
  CHECK(one * x1 == x1);
  CHECK((x1 * x2).coefficient({1, 1}) == 1);
  CHECK((x1 * x2).terms().size() == 1);
}

TEST_CASE("partial derivatives") {
  const auto x1 = CommPolynomial::variable(5, 2, 1);
  const auto x2 = CommPolynomial::variable(5, 2, 2);
  CHECK((x1 * x1).partial(1) == x1.scaled(2));
  CHECK((x2 * x2 * x2).partial(1).is_zero());
  auto x1_5 = x1 * x1 * x1 * x1 * x1;
  CHECK(x1_5.partial(1).is_zero());
  CHECK_THROWS_AS(x1.partial(0), StructuralError);
  CHECK_THROWS_AS(x1.partial(3), StructuralError);
}

TEST_CASE("ring axioms, linearity and Leibniz rule of the partials") {
  Rng rng(21);
  for (std::uint32_t p : {2u, 5u, 71u}) {
    for (int i = 0; i < 200; ++i) {
      auto a = random_comm(p, 3, 4, 5, rng);
      auto b = random_comm(p, 3, 4, 5, rng);
      auto c = random_comm(p, 3, 4, 5, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a + b) - b == a);
      for (std::size_t v = 1; v <= 3; ++v) {
        REQUIRE((a + b).partial(v) == a.partial(v) + b.partial(v));
        REQUIRE((a * b).partial(v) == a * b.partial(v) + a.partial(v) * b);
      }
    }
  }
}

TEST_CASE("text form") {
  auto h = CommPolynomial::parse(71, 3, "3*x1^2*x3 - x2 + 5");
  CHECK(h.coefficient({2, 0, 1}) == 3);
  CHECK(h.coefficient({0, 1, 0}) == 70);
  CHECK(h.to_string() == "3*x1^2*x2^0*x3^1 + 70*x1^0*x2^1*x3^0 + 5*x1^0*x2^0*x3^0");
  CHECK(CommPolynomial::parse(71, 3, h.to_string()) == h);
  CHECK(CommPolynomial(5, 1).to_string() == "0");
  CHECK_THROWS_AS(CommPolynomial::parse(71, 2, "x3"), ParseError);
  CHECK_THROWS_AS(CommPolynomial(71, 2) * CommPolynomial(5, 2), StructuralError);
}
