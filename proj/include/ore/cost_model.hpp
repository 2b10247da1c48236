#pragma once

// Step-count model for the key exchange over F_q[d1;s1][d2;s2] with dense
// operands: one step per field operation or automorphism application, and
// d^4/8 steps for a product of total degree d.

#include <array>
#include <cstdint>
#include <string>

namespace ore::cost {

struct SecurityTuple {
  double d_L = 0;
  double d_PQ = 0;
  double nu = 0;
  std::uint64_t p = 2;
  double omega = 2.373;
};

// Throws DomainError for non-positive entries, p < 2 or omega outside [2, 3].
void validate(const SecurityTuple& t);

// Closed form as printed with the model, including its (nu+1)^5 leading term.
double cost_powers(double nu, double d_PQ);
// The literal recursion c(1) = 0, c(j+1) = c(j) + (j d_PQ)^4 / 8.
double cost_powers_recursive(unsigned nu, double d_PQ);

double cost_secret_param(const SecurityTuple& t);
double cost_initial_message(const SecurityTuple& t);
double cost_shared_secret(const SecurityTuple& t);
// ceil(((d_L + 8 nu d_PQ) / 2)^2 * ceil(log2 p) / 1024)
std::uint64_t key_size_kb(const SecurityTuple& t);

// Maximal message degree 2 nu d_PQ + d_L.
double message_degree(const SecurityTuple& t);
// Model estimate: (p-1) p^nu candidates at (d_m/2)^(2 omega) steps each, plus
// the powers of P and the additions.
double cost_brute_force(const SecurityTuple& t);

struct CostReport {
  double secret_param = 0;
  double initial_message = 0;
  double shared_secret = 0;
  std::uint64_t key_size_kb = 0;
  double brute_force = 0;
};

CostReport evaluate(const SecurityTuple& t);

struct ReferenceRow {
  SecurityTuple tuple;
  CostReport expected;
};

// The published reference table (p = 2), nine rows.
const std::array<ReferenceRow, 9>& reference_table();

inline constexpr double kRelativeTolerance = 5e-7;

struct RowCheck {
  bool secret_param = false;
  bool initial_message = false;
  bool shared_secret = false;
  bool key_size = false;
  bool all() const { return secret_param && initial_message && shared_secret && key_size; }
};

RowCheck check_row(const ReferenceRow& row, const CostReport& computed);

// "%.6E", the notation of the reference table.
std::string format_steps(double v);

}  // namespace ore::cost
