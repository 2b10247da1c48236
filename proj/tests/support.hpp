#pragma once

#include <algorithm>

#include "ore/ore_core.hpp"

namespace support {

// Random element of total degree in [0, max_degree] with up to max_terms
// terms, clamped to the monomials available at that degree.
inline ore::OrePolynomial small_random(const ore::RingPtr& ring, unsigned max_degree, std::size_t max_terms,
                                       ore::Rng& rng) {
  const auto degree = static_cast<unsigned>(rng.below(max_degree + 1));
  const std::size_t available = ore::monomials_up_to(*ring, degree).size();
  const std::size_t terms = std::min<std::size_t>(rng.between(1, max_terms), available);
  return ore::random_polynomial(ring, degree, terms, rng);
}

// As small_random but never constant.
inline ore::OrePolynomial small_nonconstant(const ore::RingPtr& ring, unsigned max_degree, std::size_t max_terms,
                                            ore::Rng& rng) {
  const auto degree = static_cast<unsigned>(rng.between(1, max_degree));
  const std::size_t available = ore::monomials_up_to(*ring, degree).size();
  const std::size_t terms = std::min<std::size_t>(rng.between(1, max_terms), available);
  return ore::random_polynomial(ring, degree, terms, rng);
}

}  // namespace support
