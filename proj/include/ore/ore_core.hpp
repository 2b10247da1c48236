#pragma once

// Iterated Ore extensions S = R[d1;s1,e1]...[dn;sn,en] with, per variable,
// either s = id or e = 0. Two families are supported:
//
//   Skew: R = F_q, s_i = Frobenius^{j_i}, e_i = 0.   d_i c = s_i(c) d_i
//   Weyl: R = F_p[x1..xn], s_i = id, e_i = d/dx_i.   d_i x_i = x_i d_i + 1
//
// Polynomials are stored as sorted term vectors. A term is an exponent
// vector plus a coefficient index into the ring's coefficient field: for
// skew rings the exponents are (a1..an) of d1..dn; for Weyl rings the
// x-exponents come first, then the d-exponents, and the coefficient is an
// F_p scalar (each term is c * x^e * d^w in normal order).

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ore/coeff_poly.hpp"
#include "ore/field_tower.hpp"
#include "ore/rng.hpp"

namespace ore {

inline constexpr std::size_t kMaxExponents = 8;
using Exponents = std::array<std::uint16_t, kMaxExponents>;

enum class RingKind { Skew, Weyl };

// Action of one Ore variable on the coefficient ring.
struct VariableAction {
  std::uint32_t sigma_power = 0;  // s = Frobenius^sigma_power (0 = identity)
  bool derivation = false;        // e = d/dx_i when set, zero otherwise
  bool operator==(const VariableAction&) const = default;
};

class OreRing {
 public:
  // Rejects n < 2, more than kMaxExponents exponents, and any variable that
  // has both a non-identity s and a nonzero e.
  static std::shared_ptr<const OreRing> create(RingKind kind, FieldPtr field, std::vector<VariableAction> actions);
  static std::shared_ptr<const OreRing> skew(FieldPtr field, const std::vector<Automorphism>& sigmas);
  static std::shared_ptr<const OreRing> weyl(std::uint32_t p, std::size_t n);

  // Accepts the canonical descriptor ("skew p=.. k=.. m=[..] sigma=[..]",
  // "weyl p=.. n=..") and the aliases f125-skew2 and weyl<n>-f<p>.
  static std::shared_ptr<const OreRing> parse(std::string_view text);

  RingKind kind() const { return kind_; }
  bool is_weyl() const { return kind_ == RingKind::Weyl; }
  const FieldPtr& field() const { return field_; }
  std::size_t n() const { return actions_.size(); }
  std::size_t width() const { return is_weyl() ? 2 * n() : n(); }
  const std::vector<VariableAction>& actions() const { return actions_; }

  // Position of d_i / x_i (0-based i) inside an exponent vector.
  std::size_t d_slot(std::size_t i) const { return is_weyl() ? n() + i : i; }
  std::size_t x_slot(std::size_t i) const { return i; }

  // Frobenius power of s^e = s_1^{e_1} ... s_n^{e_n} (skew rings).
  std::uint32_t sigma_power(const Exponents& e) const;

  std::string variable_name(std::size_t slot) const;
  std::string describe() const;

  bool operator==(const OreRing& o) const;

 private:
  OreRing(RingKind kind, FieldPtr field, std::vector<VariableAction> actions);

  RingKind kind_;
  FieldPtr field_;
  std::vector<VariableAction> actions_;
};

using RingPtr = std::shared_ptr<const OreRing>;

struct Term {
  Exponents exps{};
  Coeff coeff = 0;
  bool operator==(const Term&) const = default;
};

struct DegreeProfile {
  bool zero = true;
  std::vector<std::uint32_t> per_variable;  // deg in d_i
  std::uint32_t total = 0;

  DegreeProfile operator+(const DegreeProfile& o) const;
  bool operator==(const DegreeProfile&) const = default;
  std::string to_string() const;
};

class OrePolynomial {
 public:
  explicit OrePolynomial(RingPtr ring);

  // Sums duplicate exponents, drops zeros and sorts.
  static OrePolynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static OrePolynomial constant(RingPtr ring, Coeff c);
  static OrePolynomial monomial(RingPtr ring, const Exponents& e, Coeff c);
  static OrePolynomial d(RingPtr ring, std::size_t i);  // d_i, 1-based
  static OrePolynomial x(RingPtr ring, std::size_t i);  // x_i, 1-based, Weyl only
  static OrePolynomial parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const;
  Coeff coefficient(const Exponents& e) const;

  DegreeProfile degree_profile() const;
  std::uint32_t total_degree() const;
  // Per-slot maximum exponent (all width() slots).
  Exponents max_exponents() const;

  OrePolynomial operator+(const OrePolynomial& o) const;
  OrePolynomial operator-(const OrePolynomial& o) const;
  OrePolynomial operator-() const;
  OrePolynomial operator*(const OrePolynomial& o) const;
  // c * h, c a coefficient-field element multiplied from the left.
  OrePolynomial left_scaled(Coeff c) const;
  OrePolynomial pow(unsigned e) const;

  bool operator==(const OrePolynomial& o) const;

  std::string to_string() const;

 private:
  void check_same_ring(const OrePolynomial& o) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

bool same_ring(const OreRing& a, const OreRing& b);
bool commutes(const OrePolynomial& a, const OrePolynomial& b);

// Random element with total degree exactly total_degree and at most n_terms
// nonzero terms (kDense: every monomial up to that degree). Coefficients are
// uniform over the nonzero elements of the coefficient field.
inline constexpr std::size_t kDense = static_cast<std::size_t>(-1);
OrePolynomial random_polynomial(const RingPtr& ring, unsigned total_degree, std::size_t n_terms, Rng& rng);

// All exponent vectors of the ring with total degree <= max_degree, ascending.
std::vector<Exponents> monomials_up_to(const OreRing& ring, unsigned max_degree);

// Weyl rings: h = sum_w c_w(x) d^w with c_w commutative polynomials.
std::map<std::vector<std::uint32_t>, CommPolynomial> weyl_coefficients(const OrePolynomial& h);
OrePolynomial from_weyl_coefficients(const RingPtr& ring,
                                     const std::map<std::vector<std::uint32_t>, CommPolynomial>& parts);

}  // namespace ore
