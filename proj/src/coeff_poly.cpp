#include "ore/coeff_poly.hpp"

#include "ore/errors.hpp"
#include "ore/field_tower.hpp"
#include "ore/term_text.hpp"

namespace ore {

CommPolynomial::CommPolynomial(std::uint32_t p, std::size_t n_vars) : p_(p), n_(n_vars) {
  if (!is_prime(p)) throw StructuralError("coefficient characteristic must be prime");
}

CommPolynomial CommPolynomial::constant(std::uint32_t p, std::size_t n_vars, std::int64_t c) {
  CommPolynomial r(p, n_vars);
  r.add_term(Exponents(n_vars, 0), c);
  return r;
}

CommPolynomial CommPolynomial::variable(std::uint32_t p, std::size_t n_vars, std::size_t var) {
  if (var < 1 || var > n_vars) throw StructuralError("variable index out of range");
  CommPolynomial r(p, n_vars);
  Exponents e(n_vars, 0);
  e[var - 1] = 1;
  r.add_term(e, 1);
  return r;
}

std::uint32_t CommPolynomial::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void CommPolynomial::add_term(const Exponents& e, std::int64_t c) {
  if (e.size() != n_) throw StructuralError("exponent vector length mismatch");
  const auto p = static_cast<std::int64_t>(p_);
  const auto reduced = static_cast<std::uint32_t>(((c % p) + p) % p);
  if (reduced == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, reduced);
  if (!inserted) {
    it->second = (it->second + reduced) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

void CommPolynomial::check_compatible(const CommPolynomial& o) const {
  if (p_ != o.p_ || n_ != o.n_) throw StructuralError("commutative polynomials from different rings");
}

CommPolynomial CommPolynomial::operator+(const CommPolynomial& o) const {
  check_compatible(o);
  CommPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

CommPolynomial CommPolynomial::operator-(const CommPolynomial& o) const {
  check_compatible(o);
  CommPolynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, static_cast<std::int64_t>(p_) - c);
  return r;
}

CommPolynomial CommPolynomial::operator*(const CommPolynomial& o) const {
  check_compatible(o);
  CommPolynomial r(p_, n_);
  Exponents e(n_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (std::size_t i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, static_cast<std::int64_t>(static_cast<std::uint64_t>(ca) * cb % p_));
    }
  }
  return r;
}

CommPolynomial CommPolynomial::scaled(std::uint32_t c) const {
  CommPolynomial r(p_, n_);
  for (const auto& [e, a] : terms_) r.add_term(e, static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * c % p_));
  return r;
}

CommPolynomial CommPolynomial::partial(std::size_t var) const {
  if (var < 1 || var > n_) throw StructuralError("partial derivative index out of range");
  CommPolynomial r(p_, n_);
  for (const auto& [e, c] : terms_) {
    const std::uint32_t k = e[var - 1];
    if (k == 0) continue;
    Exponents d = e;
    d[var - 1] = k - 1;
    r.add_term(d, static_cast<std::int64_t>(static_cast<std::uint64_t>(c) * (k % p_) % p_));
  }
  return r;
}

std::string CommPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += std::to_string(c);
    for (std::size_t i = 0; i < n_; ++i) s += "*x" + std::to_string(i + 1) + "^" + std::to_string(e[i]);
  }
  return s;
}

CommPolynomial CommPolynomial::parse(std::uint32_t p, std::size_t n_vars, std::string_view source) {
  CommPolynomial r(p, n_vars);
  for (const auto& t : text::parse_terms(source)) {
    std::int64_t c = 1;
    if (!t.coeff.empty()) {
      if (t.coeff.front() == '[') throw ParseError("list coefficient in commutative polynomial");
      c = static_cast<std::int64_t>(std::stoull(t.coeff) % p);
    }
    if (t.negative) c = -c;
    Exponents e(n_vars, 0);
    for (const auto& f : t.factors) {
      if (f.name.size() < 2 || f.name[0] != 'x') throw ParseError("unknown variable '" + f.name + "'");
      const std::size_t var = std::stoul(f.name.substr(1));
      if (var < 1 || var > n_vars) throw ParseError("variable '" + f.name + "' out of range");
      e[var - 1] += f.exponent;
    }
    r.add_term(e, c);
  }
  return r;
}

}  // namespace ore
