#include "ore/exact_division.hpp"

#include <memory>

#include "ore/errors.hpp"
#include "ore_kernel.hpp"

namespace ore {

namespace {

enum class KnownSide { Left, Right };

// Subtracts known * m (side Left) or m * known (side Right) from rem.
template <class Remainder>
struct GenericSubtractor {
  const OreRing& ring;
  const detail::LeibnizTable* leibniz;
  const OrePolynomial& known;
  KnownSide side;

  void operator()(Remainder& rem, const Term& m) const {
    const FiniteField& f = *ring.field();
    const Coeff neg = f.neg(Coeff{1});
    auto subtract = [&](const Exponents& e, Coeff c) {
      if (!rem.contains(e)) throw NotDivisible("cofactor term leaves the degree box of the dividend");
      rem.add(e, f.mul(neg, c));
    };
    for (const auto& t : known.terms()) {
      if (side == KnownSide::Left)
        detail::term_product(ring, leibniz, t, m, subtract);
      else
        detail::term_product(ring, leibniz, m, t, subtract);
    }
  }
};

// Table-driven variant for skew rings on a dense remainder. All product
// monomials lie inside the box because the cofactor respects the bound.
struct SkewDenseSubtractor {
  const OreRing& ring;
  const OrePolynomial& known;
  KnownSide side;
  std::vector<std::size_t> offsets;
  std::vector<std::uint32_t> powers;

  SkewDenseSubtractor(const OreRing& r, const OrePolynomial& k, KnownSide s, const detail::MonomialBox& box)
      : ring(r), known(k), side(s) {
    for (const auto& t : known.terms()) {
      offsets.push_back(box.index(t.exps));
      powers.push_back(ring.sigma_power(t.exps));
    }
  }

  void operator()(detail::DenseRemainder& rem, const Term& m) const {
    const FiniteField& f = *ring.field();
    const std::size_t q = f.order();
    const auto& add = f.add_table();
    const auto& mul = f.mul_table();
    auto& data = rem.data();
    const std::size_t base = rem.box().index(m.exps);
    const Coeff neg_c = f.neg(m.coeff);
    const auto terms = known.terms();
    if (side == KnownSide::Left) {
      // t * m = t.c s^t(c) d^(t+mu)
      for (std::size_t i = 0; i < terms.size(); ++i) {
        const Coeff v = mul[terms[i].coeff * q + f.frobenius_table(powers[i])[neg_c]];
        Coeff& slot = data[base + offsets[i]];
        slot = add[slot * q + v];
      }
    } else {
      // m * t = c s^mu(t.c) d^(mu+t)
      const auto& frob = f.frobenius_table(ring.sigma_power(m.exps));
      const std::uint16_t* mrow = &mul[neg_c * q];
      for (std::size_t i = 0; i < terms.size(); ++i) {
        Coeff& slot = data[base + offsets[i]];
        slot = add[slot * q + mrow[frob[terms[i].coeff]]];
      }
    }
  }
};

template <class Remainder, class Subtractor>
OrePolynomial peel(const OrePolynomial& h, const OrePolynomial& known, KnownSide side, Remainder& rem,
                   const Exponents& bound, const Subtractor& subtract) {
  const OreRing& ring = *h.ring();
  const FiniteField& f = *ring.field();
  const std::size_t w = ring.width();
  for (const auto& t : h.terms()) rem.add(t.exps, t.coeff);
  const Term& lead = known.leading_term();
  const Coeff lead_inv = f.inv(lead.coeff);
  const std::uint32_t k = f.degree();
  const std::uint32_t lead_power = ring.is_weyl() ? 0 : ring.sigma_power(lead.exps);

  std::vector<Term> quotient;
  Term r;
  while (rem.leading(r)) {
    Term m;
    for (std::size_t s = 0; s < w; ++s) {
      if (r.exps[s] < lead.exps[s] || r.exps[s] - lead.exps[s] > bound[s])
        throw NotDivisible("leading monomial of the remainder is not a multiple of the divisor's");
      m.exps[s] = static_cast<std::uint16_t>(r.exps[s] - lead.exps[s]);
    }
    if (ring.is_weyl()) {
      m.coeff = f.mul(r.coeff, lead_inv);
    } else if (side == KnownSide::Left) {
      // lead * m has coefficient lc s^lead(c)
      m.coeff = f.frobenius((k - lead_power) % k, f.mul(lead_inv, r.coeff));
    } else {
      // m * lead has coefficient c s^mu(lc)
      m.coeff = f.mul(r.coeff, f.inv(f.frobenius(ring.sigma_power(m.exps), lead.coeff)));
    }
    subtract(rem, m);
    quotient.push_back(m);
  }
  return OrePolynomial::from_terms(h.ring(), std::move(quotient));
}

OrePolynomial divide(const OrePolynomial& h, const OrePolynomial& known, KnownSide side) {
  if (!same_ring(*h.ring(), *known.ring())) throw StructuralError("polynomials belong to different rings");
  if (known.is_zero()) throw DomainError("division by the zero polynomial");
  if (h.is_zero()) return OrePolynomial(h.ring());
  const OreRing& ring = *h.ring();
  const std::size_t w = ring.width();
  const Exponents mh = h.max_exponents(), mk = known.max_exponents();
  // Per-slot degrees add under multiplication, which bounds every cofactor term.
  Exponents bound{};
  for (std::size_t s = 0; s < w; ++s) {
    if (mk[s] > mh[s]) throw NotDivisible("divisor degree exceeds dividend degree in " + ring.variable_name(s));
    bound[s] = static_cast<std::uint16_t>(mh[s] - mk[s]);
  }
  std::unique_ptr<detail::LeibnizTable> leibniz;
  if (ring.is_weyl()) leibniz = std::make_unique<detail::LeibnizTable>(ring.field()->characteristic(), detail::max_slot(mh, w));

  const auto box = detail::MonomialBox::covering(mh, w, detail::kDenseDivisionLimit);
  if (box.size != 0) {
    detail::DenseRemainder rem(*ring.field(), box);
    if (!ring.is_weyl() && ring.field()->has_tables())
      return peel(h, known, side, rem, bound, SkewDenseSubtractor(ring, known, side, box));
    return peel(h, known, side, rem, bound,
                GenericSubtractor<detail::DenseRemainder>{ring, leibniz.get(), known, side});
  }
  detail::SparseRemainder rem(*ring.field(), box);
  return peel(h, known, side, rem, bound, GenericSubtractor<detail::SparseRemainder>{ring, leibniz.get(), known, side});
}

}  // namespace

OrePolynomial right_cofactor(const OrePolynomial& h, const OrePolynomial& p) { return divide(h, p, KnownSide::Left); }

OrePolynomial left_cofactor(const OrePolynomial& h, const OrePolynomial& q) { return divide(h, q, KnownSide::Right); }

}  // namespace ore
