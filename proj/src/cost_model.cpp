#include "ore/cost_model.hpp"

#include <cmath>
#include <cstdio>

#include "ore/errors.hpp"

namespace ore::cost {

namespace {

double pow4(double v) { return v * v * v * v; }

bool close(double computed, double expected) {
  return std::fabs(computed - expected) <= kRelativeTolerance * std::fabs(expected);
}

}  // namespace

void validate(const SecurityTuple& t) {
  if (!(t.d_L > 0 && t.d_PQ > 0 && t.nu > 0)) throw DomainError("security tuple entries must be positive");
  if (t.p < 2) throw DomainError("p must be at least 2");
  if (!(t.omega >= 2.0 && t.omega <= 3.0)) throw DomainError("omega must lie in [2, 3]");
}

double cost_powers(double nu, double d_PQ) {
  const double m = nu + 1;
  const double bracket = 5 * std::pow(m, 5) - 0.5 * pow4(m) + std::pow(m, 3) / 3 - nu / 30 - 1.0 / 30;
  return pow4(d_PQ) / 8 * bracket;
}

double cost_powers_recursive(unsigned nu, double d_PQ) {
  double c = 0;
  for (unsigned j = 1; j < nu; ++j) c += pow4(j * d_PQ) / 8;
  return c;
}

double cost_secret_param(const SecurityTuple& t) {
  const double m = t.nu + 1;
  const double scaling = t.d_PQ * t.d_PQ / 2 * 3 * (m * m * m - 0.5 * m * m + t.nu / 6 + 1.0 / 6);
  const double additions = 2 * (t.nu * t.nu * t.d_PQ * t.d_PQ / 4);
  return 2 * cost_powers(t.nu, t.d_PQ) + scaling + additions;
}

double cost_initial_message(const SecurityTuple& t) {
  const double d = t.d_PQ * t.nu;
  return pow4(d) / 8 + pow4(d + t.d_L / 2) / 8;
}

double cost_shared_secret(const SecurityTuple& t) {
  const double d = t.d_PQ * t.nu;
  return pow4(2 * d + t.d_L / 2) / 8 + pow4(3 * d + t.d_L / 2) / 8;
}

std::uint64_t key_size_kb(const SecurityTuple& t) {
  const double half = (t.d_L + 8 * t.nu * t.d_PQ) / 2;
  const double bits = half * half * std::ceil(std::log2(static_cast<double>(t.p)));
  return static_cast<std::uint64_t>(std::ceil(bits / 1024));
}

double message_degree(const SecurityTuple& t) { return 2 * t.nu * t.d_PQ + t.d_L; }

double cost_brute_force(const SecurityTuple& t) {
  const double p = static_cast<double>(t.p);
  const double candidates = (p - 1) * std::pow(p, t.nu);
  const double per_candidate = std::pow(message_degree(t) / 2, 2 * t.omega);
  const double additions = 2 * (t.nu * t.nu * t.d_PQ * t.d_PQ / 4);
  return candidates * per_candidate + cost_powers(t.nu, t.d_PQ) + additions;
}

CostReport evaluate(const SecurityTuple& t) {
  validate(t);
  return CostReport{cost_secret_param(t), cost_initial_message(t), cost_shared_secret(t), key_size_kb(t),
                    cost_brute_force(t)};
}

const std::array<ReferenceRow, 9>& reference_table() {
  static const std::array<ReferenceRow, 9> rows{{
      {{30, 5, 10}, {1.247955E+08, 3.012579E+06, 1.145127E+08, 46, 2.066009E+16}},
      {{30, 5, 15}, {8.144450E+08, 1.215633E+07, 5.073701E+08, 97, 9.616857E+18}},
      {{30, 5, 20}, {3.176336E+09, 3.436258E+07, 1.497794E+09, 169, 2.237607E+21}},
      {{30, 5, 25}, {9.248193E+09, 7.853758E+07, 3.508245E+09, 260, 3.467317E+23}},
      {{30, 5, 30}, {2.229704E+10, 1.559313E+08, 7.074856E+09, 370, 4.110897E+25}},
      {{50, 5, 35}, {4.711215E+10, 3.172363E+08, 1.391021E+10, 514, 5.144021E+27}},
      {{50, 5, 40}, {9.029806E+10, 5.203613E+08, 2.315166E+10, 665, 4.258507E+29}},
      {{50, 5, 45}, {1.605675E+11, 8.086426E+08, 3.637583E+10, 836, 3.176783E+31}},
      {{50, 5, 50}, {2.690343E+11, 1.203174E+09, 5.458994E+10, 1027, 2.179949E+33}},
  }};
  return rows;
}

RowCheck check_row(const ReferenceRow& row, const CostReport& computed) {
  RowCheck c;
  c.secret_param = close(computed.secret_param, row.expected.secret_param);
  c.initial_message = close(computed.initial_message, row.expected.initial_message);
  c.shared_secret = close(computed.shared_secret, row.expected.shared_secret);
  c.key_size = computed.key_size_kb == row.expected.key_size_kb;
  return c;
}

std::string format_steps(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6E", v);
  return buf;
}

}  // namespace ore::cost
