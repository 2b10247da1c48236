#pragma once

// Commutative polynomials in x1..xn over F_p: the coefficient ring of the
// polynomial Weyl algebra, with the partial derivatives acting on it.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ore/monomial_order.hpp"

namespace ore {

class CommPolynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, std::uint32_t, GrevlexGreater>;

  CommPolynomial(std::uint32_t p, std::size_t n_vars);

  static CommPolynomial constant(std::uint32_t p, std::size_t n_vars, std::int64_t c);
  // x_var, var counted from 1
  static CommPolynomial variable(std::uint32_t p, std::size_t n_vars, std::size_t var);

  std::uint32_t characteristic() const { return p_; }
  std::size_t n_vars() const { return n_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::uint32_t coefficient(const Exponents& e) const;

  // Adds c * x^e (c taken mod p); zero results are erased.
  void add_term(const Exponents& e, std::int64_t c);

  CommPolynomial operator+(const CommPolynomial& o) const;
  CommPolynomial operator-(const CommPolynomial& o) const;
  CommPolynomial operator*(const CommPolynomial& o) const;
  CommPolynomial scaled(std::uint32_t c) const;
  bool operator==(const CommPolynomial& o) const = default;

  // d/dx_var with var counted from 1.
  CommPolynomial partial(std::size_t var) const;

  // "<coeff>*x1^e1*...*xn^en" terms joined by " + ", descending order; "0" if zero.
  std::string to_string() const;
  static CommPolynomial parse(std::uint32_t p, std::size_t n_vars, std::string_view text);

 private:
  void check_compatible(const CommPolynomial& o) const;

  std::uint32_t p_;
  std::size_t n_;
  TermMap terms_;
};

}  // namespace ore
