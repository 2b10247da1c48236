#pragma once

// Commuting key pools {f(P) : f in F_p[X], f(0) != 0} built from a public
// element P. Any two members commute since they are polynomials in P.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ore/ore_core.hpp"
#include "ore/rng.hpp"

namespace ore {

class ConstantPolynomial {
 public:
  // coeffs[i] is the coefficient of X^i, reduced mod p. Rejects f0 == 0 and
  // degree < 1 (a constant f gives a central key).
  ConstantPolynomial(std::uint32_t p, std::vector<std::int64_t> coeffs);

  std::uint32_t characteristic() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  bool operator==(const ConstantPolynomial&) const = default;

  // "[f0,f1,...,fm]"
  std::string to_string() const;
  static ConstantPolynomial parse(std::uint32_t p, std::string_view text);

  // Uniform f0 and f1..f(m-1) with f0 and fm nonzero.
  static ConstantPolynomial random(std::uint32_t p, std::size_t degree, Rng& rng);

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

// f(P) by Horner's scheme. The coefficients embed through F_p into the ring.
OrePolynomial evaluate_at(const ConstantPolynomial& f, const OrePolynomial& P);

inline constexpr unsigned kMaxResample = 100;

// Draws f of degree nu until f(P) does not commute with L. Throws DomainError
// if P itself commutes with L and ResampleExhausted after kMaxResample draws.
std::pair<ConstantPolynomial, OrePolynomial> sample_private(const OrePolynomial& P, const OrePolynomial& L,
                                                            std::size_t nu, Rng& rng);

}  // namespace ore
