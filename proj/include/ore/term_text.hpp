#pragma once

// Tokenizer shared by the commutative and Ore polynomial text formats.
// A polynomial is a signed sum of terms; a term is a '*'-separated product
// of an optional coefficient (integer or "[a0,...]" list) and variables
// with optional "^exponent".

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ore::text {

struct Factor {
  std::string name;
  std::uint32_t exponent = 1;
};

struct Term {
  bool negative = false;
  std::string coeff;  // empty means 1
  std::vector<Factor> factors;
};

std::vector<Term> parse_terms(std::string_view text);

}  // namespace ore::text
