#pragma once

// Arithmetic in F_p and F_{p^k} = F_p[x]/<m(x)>.
//
// Elements are addressed two ways. FieldElement is the checked value type
// (carries its field, rejects mixed-field arithmetic). Inside the polynomial
// kernels coefficients are plain indices (Coeff): the element
// a0 + a1*alpha + ... + a(k-1)*alpha^(k-1) has index a0 + a1*p + ... .
// For q <= kTableLimit every operation on indices is a table lookup.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace ore {

using Coeff = std::uint32_t;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t k = 1;
  // Length k+1, least significant first, monic.
  std::vector<std::uint32_t> modulus{0, 1};

  bool operator==(const FieldSpec&) const = default;
};

// a -> a^(p^power); power in [0, k).
struct Automorphism {
  std::uint32_t power = 0;
  bool operator==(const Automorphism&) const = default;
};

class FieldElement;

class FiniteField : public std::enable_shared_from_this<FiniteField> {
 public:
  static constexpr std::uint32_t kTableLimit = 1024;
  static constexpr std::uint32_t kMaxOrder = 1u << 20;

  // Validates primality of p, shape of the modulus and (for k <= 4) its
  // irreducibility. Larger k requires assume_irreducible.
  static std::shared_ptr<const FiniteField> create(FieldSpec spec, bool assume_irreducible = false);
  static std::shared_ptr<const FiniteField> prime(std::uint32_t p);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t characteristic() const { return spec_.p; }
  std::uint32_t degree() const { return spec_.k; }
  std::uint32_t order() const { return q_; }
  bool has_tables() const { return !mul_.empty(); }

  // Index arithmetic.
  Coeff add(Coeff a, Coeff b) const;
  Coeff sub(Coeff a, Coeff b) const { return add(a, neg(b)); }
  Coeff neg(Coeff a) const;
  Coeff mul(Coeff a, Coeff b) const;
  Coeff inv(Coeff a) const;  // throws ZeroInverse
  Coeff pow(Coeff a, std::uint64_t e) const;
  Coeff frobenius(std::uint32_t power, Coeff a) const;
  // Image of an integer under Z -> F_p -> F_q.
  Coeff from_integer(std::int64_t v) const;
  bool in_prime_subfield(Coeff a) const { return a < spec_.p; }

  // Direct table access for hot loops; empty when q > kTableLimit.
  const std::vector<std::uint16_t>& add_table() const { return add_; }
  const std::vector<std::uint16_t>& mul_table() const { return mul_; }
  const std::vector<std::uint16_t>& frobenius_table(std::uint32_t power) const { return frob_[power]; }

  std::vector<std::uint32_t> digits(Coeff a) const;
  Coeff from_digits(const std::vector<std::uint32_t>& digits) const;

  FieldElement element(const std::vector<std::uint32_t>& coeffs) const;
  FieldElement element_at(Coeff index) const;
  FieldElement zero() const;
  FieldElement one() const;
  // The class of x in F_p[x]/<m>.
  FieldElement generator() const;

  // "[a0,...,a(k-1)]"
  std::string format(Coeff a) const;
  Coeff parse(std::string_view text) const;

 private:
  explicit FiniteField(FieldSpec spec);
  void build_tables();
  Coeff slow_mul(Coeff a, Coeff b) const;
  Coeff slow_add(Coeff a, Coeff b) const;

  FieldSpec spec_;
  std::uint32_t q_ = 0;
  std::vector<std::uint16_t> add_, mul_, neg_, inv_;
  std::vector<std::vector<std::uint16_t>> frob_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

class FieldElement {
 public:
  FieldElement(FieldPtr field, Coeff index);

  const FieldPtr& field() const { return field_; }
  Coeff index() const { return index_; }
  std::vector<std::uint32_t> coeffs() const { return field_->digits(index_); }
  bool is_zero() const { return index_ == 0; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const;

  std::string to_string() const { return field_->format(index_); }

 private:
  const FieldPtr& same_field(const FieldElement& o) const;

  FieldPtr field_;
  Coeff index_;
};

FieldElement frobenius_apply(Automorphism j, const FieldElement& a);

bool is_prime(std::uint64_t n);

// "field p=<p> k=<k> m=[c0,...,ck]"
std::string format_field_spec(const FieldSpec& spec);
FieldSpec parse_field_spec(std::string_view text);

// Parses "[a,b,c]" into integers; used by several text formats.
std::vector<std::int64_t> parse_int_list(std::string_view text);
std::string format_int_list(const std::vector<std::uint32_t>& values);

}  // namespace ore
