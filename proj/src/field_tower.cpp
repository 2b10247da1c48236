#include "ore/field_tower.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "ore/errors.hpp"

namespace ore {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of a (arbitrary length) modulo the monic polynomial m over F_p.
Digits poly_mod(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    const std::uint64_t c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      const std::size_t t = i - dm + j;
      a[t] = static_cast<std::uint32_t>((a[t] + (p - c) * m[j]) % p);
    }
  }
  a.resize(dm);
  return a;
}

bool has_root(const Digits& m, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = m.size(); i-- > 0;) acc = (acc * x + m[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

bool has_quadratic_factor(const Digits& m, std::uint32_t p) {
  for (std::uint32_t c0 = 0; c0 < p; ++c0) {
    for (std::uint32_t c1 = 0; c1 < p; ++c1) {
      const Digits r = poly_mod(m, Digits{c0, c1, 1}, p);
      if (r[0] == 0 && r[1] == 0) return true;
    }
  }
  return false;
}

std::uint32_t checked_order(const FieldSpec& spec) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.k; ++i) {
    q *= spec.p;
    if (q > FiniteField::kMaxOrder) throw StructuralError("field order exceeds supported range");
  }
  return static_cast<std::uint32_t>(q);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::shared_ptr<const FiniteField> FiniteField::create(FieldSpec spec, bool assume_irreducible) {
  if (!is_prime(spec.p)) throw StructuralError("field characteristic " + std::to_string(spec.p) + " is not prime");
  if (spec.k < 1) throw StructuralError("extension degree must be at least 1");
  if (spec.modulus.size() != spec.k + 1) throw StructuralError("modulus must have k+1 coefficients");
  for (auto c : spec.modulus)
    if (c >= spec.p) throw StructuralError("modulus coefficients must be reduced mod p");
  if (spec.modulus.back() != 1) throw StructuralError("modulus must be monic");
  if (spec.k > 1 && !assume_irreducible) {
    if (spec.k > 4) throw StructuralError("irreducibility check supports k <= 4; assert irreducibility explicitly");
    if (has_root(spec.modulus, spec.p)) throw StructuralError("modulus has a root in F_p");
    if (spec.k == 4 && has_quadratic_factor(spec.modulus, spec.p))
      throw StructuralError("modulus has a quadratic factor");
  }
  checked_order(spec);
  return std::shared_ptr<const FiniteField>(new FiniteField(std::move(spec)));
}

std::shared_ptr<const FiniteField> FiniteField::prime(std::uint32_t p) { return create(FieldSpec{p, 1, {0, 1}}); }

FiniteField::FiniteField(FieldSpec spec) : spec_(std::move(spec)), q_(checked_order(spec_)) { build_tables(); }

void FiniteField::build_tables() {
  if (q_ > kTableLimit) return;
  const std::size_t q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);
  for (Coeff a = 0; a < q_; ++a) {
    for (Coeff b = 0; b < q_; ++b) {
      add_[a * q + b] = static_cast<std::uint16_t>(slow_add(a, b));
      mul_[a * q + b] = static_cast<std::uint16_t>(slow_mul(a, b));
    }
  }
  for (Coeff a = 0; a < q_; ++a) {
    for (Coeff b = 0; b < q_; ++b) {
      if (add_[a * q + b] == 0) neg_[a] = static_cast<std::uint16_t>(b);
      if (mul_[a * q + b] == 1) inv_[a] = static_cast<std::uint16_t>(b);
    }
  }
  frob_.assign(spec_.k, std::vector<std::uint16_t>(q));
  for (Coeff a = 0; a < q_; ++a) frob_[0][a] = static_cast<std::uint16_t>(a);
  for (std::uint32_t j = 1; j < spec_.k; ++j) {
    for (Coeff a = 0; a < q_; ++a) {
      // a^(p^j) = (a^(p^(j-1)))^p
      Coeff prev = frob_[j - 1][a];
      Coeff r = 1;
      for (std::uint32_t e = 0; e < spec_.p; ++e) r = slow_mul(r, prev);
      frob_[j][a] = static_cast<std::uint16_t>(r);
    }
  }
}

std::vector<std::uint32_t> FiniteField::digits(Coeff a) const {
  Digits d(spec_.k);
  for (std::uint32_t i = 0; i < spec_.k; ++i) {
    d[i] = a % spec_.p;
    a /= spec_.p;
  }
  return d;
}

Coeff FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  if (d.size() != spec_.k) throw StructuralError("element needs exactly k coefficients");
  Coeff a = 0;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] >= spec_.p) throw StructuralError("element coefficient not reduced mod p");
    a = a * spec_.p + d[i];
  }
  return a;
}

Coeff FiniteField::slow_add(Coeff a, Coeff b) const {
  if (spec_.k == 1) return (a + b) % spec_.p;
  Digits da = digits(a), db = digits(b);
  for (std::uint32_t i = 0; i < spec_.k; ++i) da[i] = (da[i] + db[i]) % spec_.p;
  return from_digits(da);
}

Coeff FiniteField::slow_mul(Coeff a, Coeff b) const {
  if (spec_.k == 1) return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % spec_.p);
  const Digits da = digits(a), db = digits(b);
  Digits prod(2 * spec_.k - 1, 0);
  for (std::uint32_t i = 0; i < spec_.k; ++i)
    for (std::uint32_t j = 0; j < spec_.k; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + static_cast<std::uint64_t>(da[i]) * db[j]) % spec_.p);
  return from_digits(poly_mod(std::move(prod), spec_.modulus, spec_.p));
}

Coeff FiniteField::add(Coeff a, Coeff b) const {
  if (!add_.empty()) return add_[a * q_ + b];
  return slow_add(a, b);
}

Coeff FiniteField::neg(Coeff a) const {
  if (!neg_.empty()) return neg_[a];
  if (spec_.k == 1) return a == 0 ? 0 : spec_.p - a;
  Digits d = digits(a);
  for (auto& x : d) x = x == 0 ? 0 : spec_.p - x;
  return from_digits(d);
}

Coeff FiniteField::mul(Coeff a, Coeff b) const {
  if (!mul_.empty()) return mul_[a * q_ + b];
  return slow_mul(a, b);
}

Coeff FiniteField::pow(Coeff a, std::uint64_t e) const {
  Coeff r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Coeff FiniteField::inv(Coeff a) const {
  if (a == 0) throw ZeroInverse();
  if (!inv_.empty()) return inv_[a];
  return pow(a, q_ - 2);
}

Coeff FiniteField::frobenius(std::uint32_t power, Coeff a) const {
  power %= spec_.k;
  if (!frob_.empty()) return frob_[power][a];
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < power; ++i) e *= spec_.p;
  return pow(a, e);
}

Coeff FiniteField::from_integer(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(spec_.p);
  return static_cast<Coeff>(((v % p) + p) % p);
}

FieldElement FiniteField::element(const std::vector<std::uint32_t>& coeffs) const {
  return FieldElement(shared_from_this(), from_digits(coeffs));
}

FieldElement FiniteField::element_at(Coeff index) const {
  if (index >= q_) throw StructuralError("element index out of range");
  return FieldElement(shared_from_this(), index);
}

FieldElement FiniteField::zero() const { return element_at(0); }
FieldElement FiniteField::one() const { return element_at(1); }

FieldElement FiniteField::generator() const {
  Digits d(spec_.k, 0);
  if (spec_.k == 1) {
    // x mod (x + c) is -c
    d[0] = (spec_.p - spec_.modulus[0]) % spec_.p;
  } else {
    d[1] = 1;
  }
  return element(d);
}

std::string FiniteField::format(Coeff a) const { return format_int_list(digits(a)); }

Coeff FiniteField::parse(std::string_view text) const {
  const auto values = parse_int_list(text);
  if (values.size() != spec_.k) throw ParseError("expected " + std::to_string(spec_.k) + " coefficients in element");
  Digits d;
  for (auto v : values) d.push_back(from_integer(v));
  return from_digits(d);
}

FieldElement::FieldElement(FieldPtr field, Coeff index) : field_(std::move(field)), index_(index) {
  if (!field_) throw StructuralError("element without field");
}

const FieldPtr& FieldElement::same_field(const FieldElement& o) const {
  if (field_ != o.field_ && !(field_->spec() == o.field_->spec()))
    throw StructuralError("field elements belong to different fields");
  return field_;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  return {same_field(o), field_->add(index_, o.index_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  return {same_field(o), field_->sub(index_, o.index_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_->neg(index_)}; }
FieldElement FieldElement::operator*(const FieldElement& o) const {
  return {same_field(o), field_->mul(index_, o.index_)};
}
FieldElement FieldElement::inverse() const { return {field_, field_->inv(index_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(index_, e)}; }

bool FieldElement::operator==(const FieldElement& o) const {
  return index_ == o.index_ && (field_ == o.field_ || field_->spec() == o.field_->spec());
}

FieldElement frobenius_apply(Automorphism j, const FieldElement& a) {
  if (j.power >= a.field()->degree()) throw StructuralError("Frobenius power out of range");
  return {a.field(), a.field()->frobenius(j.power, a.index())};
}

std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos || text[b] != '[' || text[e] != ']') throw ParseError("expected [..] list");
  std::string_view body = text.substr(b + 1, e - b - 1);
  std::vector<std::int64_t> out;
  if (body.find_first_not_of(" \t") == std::string_view::npos) return out;
  while (true) {
    const std::size_t comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    const std::size_t ib = item.find_first_not_of(" \t");
    const std::size_t ie = item.find_last_not_of(" \t");
    if (ib == std::string_view::npos) throw ParseError("empty list entry");
    item = item.substr(ib, ie - ib + 1);
    std::int64_t v = 0;
    const char* first = item.data();
    if (*first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) throw ParseError("bad integer '" + std::string(item) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return out;
}

std::string format_int_list(const std::vector<std::uint32_t>& values) {
  std::string s = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s + "]";
}

std::string format_field_spec(const FieldSpec& spec) {
  std::ostringstream os;
  os << "field p=" << spec.p << " k=" << spec.k << " m=" << format_int_list(spec.modulus);
  return os.str();
}

FieldSpec parse_field_spec(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string word;
  is >> word;
  if (word != "field") throw ParseError("field spec must start with 'field'");
  FieldSpec spec;
  bool have_p = false, have_k = false, have_m = false;
  while (is >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw ParseError("bad field spec token '" + word + "'");
    const std::string key = word.substr(0, eq), value = word.substr(eq + 1);
    if (key == "p") {
      spec.p = static_cast<std::uint32_t>(std::stoul(value));
      have_p = true;
    } else if (key == "k") {
      spec.k = static_cast<std::uint32_t>(std::stoul(value));
      have_k = true;
    } else if (key == "m") {
      spec.modulus.clear();
      for (auto v : parse_int_list(value)) {
        if (v < 0) throw ParseError("negative modulus coefficient");
        spec.modulus.push_back(static_cast<std::uint32_t>(v));
      }
      have_m = true;
    } else {
      throw ParseError("unknown field spec key '" + key + "'");
    }
  }
  if (!have_p || !have_k || !have_m) throw ParseError("field spec needs p, k and m");
  return spec;
}

}  // namespace ore
