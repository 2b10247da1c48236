#pragma once

// Exact one-sided division in rings of type Skew/Weyl. Both routines peel
// leading terms under the graded order; they succeed only when an exact
// cofactor exists and throw NotDivisible otherwise.

#include "ore/ore_core.hpp"

namespace ore {

// q with p * q == h.
OrePolynomial right_cofactor(const OrePolynomial& h, const OrePolynomial& p);

// p with p * q == h.
OrePolynomial left_cofactor(const OrePolynomial& h, const OrePolynomial& q);

}  // namespace ore
