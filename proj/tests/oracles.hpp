#pragma once

// Slow reference implementations used to cross-check the library. They only
// use the public term API and the defining commutation rules, one variable
// step at a time.

#include <map>
#include <vector>

#include "ore/coeff_poly.hpp"
#include "ore/field_tower.hpp"
#include "ore/ore_core.hpp"

namespace oracle {

using namespace ore;

// Skew: (c d^a)(c' d^b) by pushing c' left through d_n^{a_n} ... d_1^{a_1}
// with one automorphism application per step.
inline OrePolynomial skew_multiply(const OrePolynomial& a, const OrePolynomial& b) {
  const RingPtr& ring = a.ring();
  const FieldPtr& field = ring->field();
  const std::size_t n = ring->n();
  std::vector<Term> out;
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      FieldElement moved(field, tb.coeff);
      for (std::size_t i = n; i-- > 0;)
        for (unsigned step = 0; step < ta.exps[i]; ++step)
          moved = frobenius_apply(Automorphism{ring->actions()[i].sigma_power}, moved);
      Term t;
      for (std::size_t i = 0; i < n; ++i) t.exps[i] = static_cast<std::uint16_t>(ta.exps[i] + tb.exps[i]);
      t.coeff = (FieldElement(field, ta.coeff) * moved).index();
      out.push_back(t);
    }
  }
  return OrePolynomial::from_terms(ring, std::move(out));
}

// Weyl elements as sum_w f_w(x) d^w.
using WeylMap = std::map<std::vector<std::uint32_t>, CommPolynomial>;

inline WeylMap to_map(const OrePolynomial& h) {
  const std::size_t n = h.ring()->n();
  const std::uint32_t p = h.ring()->field()->characteristic();
  WeylMap m;
  for (const auto& t : h.terms()) {
    std::vector<std::uint32_t> w(n), e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = t.exps[i];
      w[i] = t.exps[n + i];
    }
    auto it = m.try_emplace(w, p, n).first;
    it->second.add_term(e, t.coeff);
  }
  return m;
}

inline OrePolynomial from_map(const RingPtr& ring, const WeylMap& m) {
  const std::size_t n = ring->n();
  std::vector<Term> terms;
  for (const auto& [w, f] : m) {
    for (const auto& [e, c] : f.terms()) {
      Term t;
      for (std::size_t i = 0; i < n; ++i) {
        t.exps[i] = static_cast<std::uint16_t>(e[i]);
        t.exps[n + i] = static_cast<std::uint16_t>(w[i]);
      }
      t.coeff = c;
      terms.push_back(t);
    }
  }
  return OrePolynomial::from_terms(ring, std::move(terms));
}

// d_i * (sum f_w d^w) = sum (f_w d^{w+e_i} + (df_w/dx_i) d^w)
inline WeylMap left_d(const WeylMap& m, std::size_t i, std::uint32_t p, std::size_t n) {
  WeylMap out;
  auto add = [&](const std::vector<std::uint32_t>& w, const CommPolynomial& f) {
    if (f.is_zero()) return;
    auto it = out.try_emplace(w, p, n).first;
    it->second = it->second + f;
  };
  for (const auto& [w, f] : m) {
    auto shifted = w;
    ++shifted[i];
    add(shifted, f);
    add(w, f.partial(i + 1));
  }
  return out;
}

inline OrePolynomial weyl_multiply(const OrePolynomial& a, const OrePolynomial& b) {
  const RingPtr& ring = a.ring();
  const std::size_t n = ring->n();
  const std::uint32_t p = ring->field()->characteristic();
  const WeylMap bm = to_map(b);
  WeylMap total;
  for (const auto& t : a.terms()) {
    WeylMap cur = bm;
    for (std::size_t i = 0; i < n; ++i)
      for (unsigned s = 0; s < t.exps[n + i]; ++s) cur = left_d(cur, i, p, n);
    CommPolynomial x_part(p, n);
    std::vector<std::uint32_t> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = t.exps[i];
    x_part.add_term(e, t.coeff);
    for (auto& [w, f] : cur) {
      auto it = total.try_emplace(w, p, n).first;
      it->second = it->second + x_part * f;
    }
  }
  return from_map(ring, total);
}

inline OrePolynomial multiply(const OrePolynomial& a, const OrePolynomial& b) {
  return a.ring()->is_weyl() ? weyl_multiply(a, b) : skew_multiply(a, b);
}

// Naive f(P) = sum f_i P^i with explicit powers.
inline OrePolynomial evaluate_naive(const std::vector<std::uint32_t>& f, const OrePolynomial& P) {
  OrePolynomial sum(P.ring());
  OrePolynomial power = OrePolynomial::constant(P.ring(), 1);
  for (std::uint32_t c : f) {
    sum = sum + power.left_scaled(c);
    power = power * P;
  }
  return sum;
}

}  // namespace oracle
