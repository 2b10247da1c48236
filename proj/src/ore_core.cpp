#include "ore/ore_core.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ore/errors.hpp"
#include "ore/term_text.hpp"
#include "ore_kernel.hpp"

namespace ore {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint32_t parse_u32(std::string_view s, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return static_cast<std::uint32_t>(std::stoul(std::string(s)));
}

}  // namespace

// ---------------------------------------------------------------- OreRing

OreRing::OreRing(RingKind kind, FieldPtr field, std::vector<VariableAction> actions)
    : kind_(kind), field_(std::move(field)), actions_(std::move(actions)) {}

std::shared_ptr<const OreRing> OreRing::create(RingKind kind, FieldPtr field, std::vector<VariableAction> actions) {
  if (!field) throw StructuralError("ring without coefficient field");
  if (actions.size() < 2) throw StructuralError("rings of this family need at least two Ore variables");
  const std::size_t width = kind == RingKind::Weyl ? 2 * actions.size() : actions.size();
  if (width > kMaxExponents) throw StructuralError("too many variables");
  for (const auto& a : actions) {
    if (a.sigma_power != 0 && a.derivation)
      throw StructuralError("each variable needs sigma = id or delta = 0");
    if (a.sigma_power >= field->degree()) throw StructuralError("Frobenius power out of range");
    if (kind == RingKind::Skew && a.derivation) throw StructuralError("skew rings carry no derivations");
    if (kind == RingKind::Weyl && !a.derivation) throw StructuralError("Weyl variables act by partial derivatives");
  }
  if (kind == RingKind::Weyl && field->degree() != 1) throw StructuralError("Weyl rings are built over a prime field");
  return std::shared_ptr<const OreRing>(new OreRing(kind, std::move(field), std::move(actions)));
}

std::shared_ptr<const OreRing> OreRing::skew(FieldPtr field, const std::vector<Automorphism>& sigmas) {
  std::vector<VariableAction> actions;
  for (auto s : sigmas) actions.push_back(VariableAction{s.power, false});
  return create(RingKind::Skew, std::move(field), std::move(actions));
}

std::shared_ptr<const OreRing> OreRing::weyl(std::uint32_t p, std::size_t n) {
  return create(RingKind::Weyl, FiniteField::prime(p), std::vector<VariableAction>(n, VariableAction{0, true}));
}

std::shared_ptr<const OreRing> OreRing::parse(std::string_view text) {
  text = trim(text);
  if (text == "f125-skew2") return skew(FiniteField::create(FieldSpec{5, 3, {3, 3, 0, 1}}), {{2}, {1}});
  if (text.starts_with("weyl") && text.find("-f") != std::string_view::npos && text.find(' ') == std::string_view::npos) {
    const auto dash = text.find("-f");
    return weyl(parse_u32(text.substr(dash + 2), "prime"), parse_u32(text.substr(4, dash - 4), "variable count"));
  }
  std::istringstream is{std::string(text)};
  std::string kind, word;
  is >> kind;
  std::uint32_t p = 0, k = 1, n = 0;
  std::vector<std::uint32_t> modulus, sigma;
  while (is >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError("bad ring token '" + word + "'");
    const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
    if (key == "p") {
      p = parse_u32(value, "prime");
    } else if (key == "k") {
      k = parse_u32(value, "degree");
    } else if (key == "n") {
      n = parse_u32(value, "variable count");
    } else if (key == "m" || key == "sigma") {
      auto& dst = key == "m" ? modulus : sigma;
      for (auto v : parse_int_list(value)) {
        if (v < 0) throw ParseError("negative entry in '" + word + "'");
        dst.push_back(static_cast<std::uint32_t>(v));
      }
    } else {
      throw ParseError("unknown ring key '" + key + "'");
    }
  }
  if (kind == "weyl") {
    if (p == 0 || n == 0) throw ParseError("weyl ring needs p and n");
    return weyl(p, n);
  }
  if (kind == "skew") {
    if (p == 0 || modulus.empty() || sigma.empty()) throw ParseError("skew ring needs p, k, m and sigma");
    std::vector<Automorphism> autos;
    for (auto s : sigma) autos.push_back(Automorphism{s});
    return skew(FiniteField::create(FieldSpec{p, k, modulus}), autos);
  }
  throw ParseError("unknown ring '" + std::string(text) + "'");
}

std::uint32_t OreRing::sigma_power(const Exponents& e) const {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < actions_.size(); ++i) s += std::uint64_t{actions_[i].sigma_power} * e[i];
  return static_cast<std::uint32_t>(s % field_->degree());
}

std::string OreRing::variable_name(std::size_t slot) const {
  if (is_weyl() && slot < n()) return "x" + std::to_string(slot + 1);
  return "d" + std::to_string(slot - (is_weyl() ? n() : 0) + 1);
}

std::string OreRing::describe() const {
  std::ostringstream os;
  const auto& spec = field_->spec();
  if (is_weyl()) {
    os << "weyl p=" << spec.p << " n=" << n();
  } else {
    std::vector<std::uint32_t> sigma;
    for (const auto& a : actions_) sigma.push_back(a.sigma_power);
    os << "skew p=" << spec.p << " k=" << spec.k << " m=" << format_int_list(spec.modulus)
       << " sigma=" << format_int_list(sigma);
  }
  return os.str();
}

bool OreRing::operator==(const OreRing& o) const {
  return kind_ == o.kind_ && field_->spec() == o.field_->spec() && actions_ == o.actions_;
}

bool same_ring(const OreRing& a, const OreRing& b) { return &a == &b || a == b; }

// ---------------------------------------------------------- DegreeProfile

DegreeProfile DegreeProfile::operator+(const DegreeProfile& o) const {
  if (zero || o.zero) return DegreeProfile{};
  DegreeProfile r = *this;
  for (std::size_t i = 0; i < r.per_variable.size(); ++i) r.per_variable[i] += o.per_variable[i];
  r.total += o.total;
  return r;
}

std::string DegreeProfile::to_string() const {
  if (zero) return "zero";
  return format_int_list(per_variable) + " total=" + std::to_string(total);
}

// ---------------------------------------------------------- OrePolynomial

OrePolynomial::OrePolynomial(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw StructuralError("polynomial without ring");
}

OrePolynomial OrePolynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  OrePolynomial r(std::move(ring));
  const FiniteField& f = *r.ring_->field();
  for (auto& t : terms)
    if (t.coeff >= f.order()) throw StructuralError("coefficient index out of range");
  detail::sort_descending(terms);
  std::vector<Term> out;
  for (const auto& t : terms) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(t);
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  r.terms_ = std::move(out);
  return r;
}

OrePolynomial OrePolynomial::constant(RingPtr ring, Coeff c) { return monomial(std::move(ring), Exponents{}, c); }

OrePolynomial OrePolynomial::monomial(RingPtr ring, const Exponents& e, Coeff c) {
  return from_terms(std::move(ring), {Term{e, c}});
}

OrePolynomial OrePolynomial::d(RingPtr ring, std::size_t i) {
  if (i < 1 || i > ring->n()) throw StructuralError("d index out of range");
  Exponents e{};
  e[ring->d_slot(i - 1)] = 1;
  return monomial(std::move(ring), e, 1);
}

OrePolynomial OrePolynomial::x(RingPtr ring, std::size_t i) {
  if (!ring->is_weyl()) throw StructuralError("x variables exist only in Weyl rings");
  if (i < 1 || i > ring->n()) throw StructuralError("x index out of range");
  Exponents e{};
  e[ring->x_slot(i - 1)] = 1;
  return monomial(std::move(ring), e, 1);
}

const Term& OrePolynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("zero polynomial has no leading term");
  return terms_.front();
}

Coeff OrePolynomial::coefficient(const Exponents& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponents& key) { return grevlex_compare(t.exps, key) > 0; });
  return it != terms_.end() && it->exps == e ? it->coeff : 0;
}

DegreeProfile OrePolynomial::degree_profile() const {
  DegreeProfile p;
  if (terms_.empty()) return p;
  p.zero = false;
  p.per_variable.assign(ring_->n(), 0);
  for (const auto& t : terms_) {
    std::uint32_t total = 0;
    for (std::size_t s = 0; s < ring_->width(); ++s) total += t.exps[s];
    p.total = std::max(p.total, total);
    for (std::size_t i = 0; i < ring_->n(); ++i)
      p.per_variable[i] = std::max<std::uint32_t>(p.per_variable[i], t.exps[ring_->d_slot(i)]);
  }
  return p;
}

std::uint32_t OrePolynomial::total_degree() const {
  if (terms_.empty()) return 0;
  // graded order: the leading term has maximal total degree
  std::uint32_t total = 0;
  for (std::size_t s = 0; s < ring_->width(); ++s) total += terms_.front().exps[s];
  return total;
}

Exponents OrePolynomial::max_exponents() const {
  Exponents m{};
  for (const auto& t : terms_)
    for (std::size_t s = 0; s < ring_->width(); ++s) m[s] = std::max(m[s], t.exps[s]);
  return m;
}

void OrePolynomial::check_same_ring(const OrePolynomial& o) const {
  if (!same_ring(*ring_, *o.ring_)) throw StructuralError("polynomials belong to different rings");
}

OrePolynomial OrePolynomial::operator+(const OrePolynomial& o) const {
  check_same_ring(o);
  const FiniteField& f = *ring_->field();
  OrePolynomial r(ring_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    int cmp;
    if (i == terms_.size()) cmp = -1;
    else if (j == o.terms_.size()) cmp = 1;
    else cmp = grevlex_compare(terms_[i].exps, o.terms_[j].exps);
    if (cmp > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (cmp < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      const Coeff c = f.add(terms_[i].coeff, o.terms_[j].coeff);
      if (c != 0) r.terms_.push_back(Term{terms_[i].exps, c});
      ++i;
      ++j;
    }
  }
  return r;
}

OrePolynomial OrePolynomial::operator-() const {
  OrePolynomial r = *this;
  for (auto& t : r.terms_) t.coeff = ring_->field()->neg(t.coeff);
  return r;
}

OrePolynomial OrePolynomial::operator-(const OrePolynomial& o) const { return *this + (-o); }

OrePolynomial OrePolynomial::left_scaled(Coeff c) const {
  const FiniteField& f = *ring_->field();
  if (c >= f.order()) throw StructuralError("coefficient index out of range");
  OrePolynomial r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = f.mul(c, t.coeff);
  return r;
}

OrePolynomial OrePolynomial::operator*(const OrePolynomial& o) const {
  check_same_ring(o);
  OrePolynomial r(ring_);
  if (is_zero() || o.is_zero()) return r;
  const OreRing& ring = *ring_;
  const FiniteField& f = *ring.field();
  const std::size_t w = ring.width();
  const Exponents ma = max_exponents(), mb = o.max_exponents();
  Exponents mx{};
  for (std::size_t s = 0; s < w; ++s) {
    const std::uint32_t sum = std::uint32_t{ma[s]} + mb[s];
    if (sum > UINT16_MAX) throw StructuralError("exponent overflow in product");
    mx[s] = static_cast<std::uint16_t>(sum);
  }
  std::unique_ptr<detail::LeibnizTable> leibniz;
  if (ring.is_weyl())
    leibniz = std::make_unique<detail::LeibnizTable>(f.characteristic(), std::max(detail::max_slot(ma, w), detail::max_slot(mb, w)));

  const auto box = detail::MonomialBox::covering(mx, w, detail::kDenseProductLimit);
  const bool dense = box.size != 0 && box.size <= 64 * terms_.size() * o.terms_.size() + 4096;
  if (!dense) {
    detail::SparseAccumulator acc(f);
    for (const auto& ta : terms_)
      for (const auto& tb : o.terms_)
        detail::term_product(ring, leibniz.get(), ta, tb, [&](const Exponents& e, Coeff c) { acc.add(e, c); });
    r.terms_ = acc.collect();
    return r;
  }

  detail::DenseAccumulator acc(f, box);
  if (ring.is_weyl() || !f.has_tables()) {
    for (const auto& ta : terms_)
      for (const auto& tb : o.terms_)
        detail::term_product(ring, leibniz.get(), ta, tb, [&](const Exponents& e, Coeff c) { acc.add(e, c); });
    r.terms_ = acc.collect();
    return r;
  }

  // Skew ring with table arithmetic: (c d^a)(c' d^b) = c s^a(c') d^(a+b).
  const std::size_t q = f.order();
  const auto& mul = f.mul_table();
  std::vector<std::size_t> right_index(o.terms_.size());
  for (std::size_t j = 0; j < o.terms_.size(); ++j) right_index[j] = box.index(o.terms_[j].exps);

  // Slots hold the base-p digits of the running sum in separate lanes of a
  // word and are reduced once at the end, as long as no lane can overflow.
  const detail::DigitPacking packing(f);
  if (packing.fits(terms_.size())) {
    std::vector<std::uint64_t> data(box.size, 0);
    std::vector<std::uint64_t> row(q);
    for (const auto& ta : terms_) {
      const std::size_t base = box.index(ta.exps);
      const auto& frob = f.frobenius_table(ring.sigma_power(ta.exps));
      const std::uint16_t* mrow = &mul[ta.coeff * q];
      for (std::size_t v = 0; v < q; ++v) row[v] = packing.pack(mrow[frob[v]]);
      std::uint64_t* out = data.data() + base;
      for (std::size_t j = 0; j < o.terms_.size(); ++j) out[right_index[j]] += row[o.terms_[j].coeff];
    }
    auto& reduced = acc.data();
    for (std::size_t i = 0; i < data.size(); ++i)
      if (data[i] != 0) reduced[i] = packing.reduce(data[i]);
    r.terms_ = acc.collect();
    return r;
  }

  const auto& add = f.add_table();
  auto& data = acc.data();
  for (const auto& ta : terms_) {
    const std::size_t base = box.index(ta.exps);
    const auto& frob = f.frobenius_table(ring.sigma_power(ta.exps));
    const std::uint16_t* mrow = &mul[ta.coeff * q];
    for (std::size_t j = 0; j < o.terms_.size(); ++j) {
      Coeff& slot = data[base + right_index[j]];
      slot = add[slot * q + mrow[frob[o.terms_[j].coeff]]];
    }
  }
  r.terms_ = acc.collect();
  return r;
}

OrePolynomial OrePolynomial::pow(unsigned e) const {
  OrePolynomial r = constant(ring_, 1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

bool OrePolynomial::operator==(const OrePolynomial& o) const {
  return same_ring(*ring_, *o.ring_) && terms_ == o.terms_;
}

std::string OrePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  const FiniteField& f = *ring_->field();
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += " + ";
    s += ring_->is_weyl() ? std::to_string(t.coeff) : f.format(t.coeff);
    for (std::size_t slot = 0; slot < ring_->width(); ++slot)
      s += "*" + ring_->variable_name(slot) + "^" + std::to_string(t.exps[slot]);
  }
  return s;
}

OrePolynomial OrePolynomial::parse(RingPtr ring, std::string_view source) {
  const FiniteField& f = *ring->field();
  std::vector<Term> terms;
  for (const auto& t : text::parse_terms(source)) {
    Coeff c = 1;
    if (!t.coeff.empty()) {
      if (t.coeff.front() == '[') {
        c = f.parse(t.coeff);
      } else {
        c = f.from_integer(static_cast<std::int64_t>(std::stoull(t.coeff) % f.characteristic()));
      }
    }
    if (t.negative) c = f.neg(c);
    Term term{Exponents{}, c};
    for (const auto& fac : t.factors) {
      if (fac.name.size() < 2 || (fac.name[0] != 'd' && fac.name[0] != 'x'))
        throw ParseError("unknown variable '" + fac.name + "'");
      const std::uint32_t idx = parse_u32(std::string_view(fac.name).substr(1), "variable index");
      if (idx < 1 || idx > ring->n()) throw ParseError("variable '" + fac.name + "' out of range");
      std::size_t slot;
      if (fac.name[0] == 'd') {
        slot = ring->d_slot(idx - 1);
      } else {
        if (!ring->is_weyl()) throw ParseError("x variables exist only in Weyl rings");
        slot = ring->x_slot(idx - 1);
      }
      const std::uint32_t e = std::uint32_t{term.exps[slot]} + fac.exponent;
      if (e > UINT16_MAX) throw ParseError("exponent too large");
      term.exps[slot] = static_cast<std::uint16_t>(e);
    }
    terms.push_back(term);
  }
  return from_terms(std::move(ring), std::move(terms));
}

// ------------------------------------------------------------------ misc

bool commutes(const OrePolynomial& a, const OrePolynomial& b) { return a * b == b * a; }

std::vector<Exponents> monomials_up_to(const OreRing& ring, unsigned max_degree) {
  std::vector<Exponents> out;
  const std::size_t w = ring.width();
  Exponents e{};
  // odometer over vectors with coordinate sum <= max_degree
  while (true) {
    out.push_back(e);
    std::size_t sum = 0;
    for (std::size_t i = 0; i < w; ++i) sum += e[i];
    std::size_t i = 0;
    while (i < w) {
      if (sum < max_degree) {
        ++e[i];
        break;
      }
      sum -= e[i];
      e[i] = 0;
      ++i;
    }
    if (i == w) break;
  }
  std::sort(out.begin(), out.end(), [](const Exponents& a, const Exponents& b) { return grevlex_compare(a, b) < 0; });
  return out;
}

OrePolynomial random_polynomial(const RingPtr& ring, unsigned total_degree, std::size_t n_terms, Rng& rng) {
  if (n_terms == 0) throw StructuralError("a random polynomial needs at least one term");
  if (total_degree > UINT16_MAX) throw StructuralError("degree too large");
  std::vector<Exponents> pool = monomials_up_to(*ring, total_degree);
  if (n_terms != kDense && n_terms > pool.size())
    throw StructuralError("requested " + std::to_string(n_terms) + " terms but only " + std::to_string(pool.size()) +
                          " monomials have total degree <= " + std::to_string(total_degree));
  const FiniteField& f = *ring->field();
  auto nonzero = [&] { return static_cast<Coeff>(1 + rng.below(f.order() - 1)); };
  auto degree_of = [&](const Exponents& e) {
    unsigned s = 0;
    for (std::size_t i = 0; i < ring->width(); ++i) s += e[i];
    return s;
  };

  std::vector<Term> terms;
  if (n_terms == kDense || n_terms == pool.size()) {
    for (const auto& e : pool) terms.push_back(Term{e, nonzero()});
    return OrePolynomial::from_terms(ring, std::move(terms));
  }
  // pool is ascending, so the top-degree monomials form its tail
  std::size_t first_top = pool.size();
  while (first_top > 0 && degree_of(pool[first_top - 1]) == total_degree) --first_top;
  const std::size_t lead = first_top + rng.below(pool.size() - first_top);
  terms.push_back(Term{pool[lead], nonzero()});
  std::swap(pool[lead], pool.back());
  pool.pop_back();
  for (std::size_t i = 0; i + 1 < n_terms; ++i) {
    const std::size_t pick = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[pick]);
    terms.push_back(Term{pool[i], nonzero()});
  }
  return OrePolynomial::from_terms(ring, std::move(terms));
}

std::map<std::vector<std::uint32_t>, CommPolynomial> weyl_coefficients(const OrePolynomial& h) {
  const OreRing& ring = *h.ring();
  if (!ring.is_weyl()) throw StructuralError("coefficient view needs a Weyl ring");
  const std::size_t n = ring.n();
  const std::uint32_t p = ring.field()->characteristic();
  std::map<std::vector<std::uint32_t>, CommPolynomial> parts;
  for (const auto& t : h.terms()) {
    std::vector<std::uint32_t> w(n), e(n);
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = t.exps[i];
      w[i] = t.exps[n + i];
    }
    auto it = parts.try_emplace(w, p, n).first;
    it->second.add_term(e, t.coeff);
  }
  return parts;
}

OrePolynomial from_weyl_coefficients(const RingPtr& ring,
                                     const std::map<std::vector<std::uint32_t>, CommPolynomial>& parts) {
  if (!ring->is_weyl()) throw StructuralError("coefficient view needs a Weyl ring");
  const std::size_t n = ring->n();
  std::vector<Term> terms;
  for (const auto& [w, c] : parts) {
    if (w.size() != n || c.n_vars() != n || c.characteristic() != ring->field()->characteristic())
      throw StructuralError("coefficient polynomial does not match ring");
    for (const auto& [e, a] : c.terms()) {
      Term t{Exponents{}, a};
      for (std::size_t i = 0; i < n; ++i) {
        t.exps[i] = static_cast<std::uint16_t>(e[i]);
        t.exps[n + i] = static_cast<std::uint16_t>(w[i]);
      }
      terms.push_back(t);
    }
  }
  return OrePolynomial::from_terms(ring, std::move(terms));
}

}  // namespace ore
