#pragma once

// Graded elements of Weyl algebras: every term c x^e d^w shares the same
// difference w - e. Such keys reduce to commutative factorization and are
// rejected.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ore/ore_core.hpp"

namespace ore {

using GradingVector = std::vector<std::int64_t>;

// nullopt when h is not graded. Throws DomainError for h == 0 or a skew ring.
std::optional<GradingVector> grading_vector(const OrePolynomial& h);

enum class ScreenVerdict { Accept, RejectGraded, RejectCommutes };

// "accept", "reject-graded", "reject-commutes"
std::string to_string(ScreenVerdict v);

// Skew rings only get the commutation check.
ScreenVerdict screen_private_key(const OrePolynomial& h, const OrePolynomial& L);

}  // namespace ore
