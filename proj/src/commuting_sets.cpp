#include "ore/commuting_sets.hpp"

#include "ore/errors.hpp"

namespace ore {

ConstantPolynomial::ConstantPolynomial(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p) {
  if (!is_prime(p)) throw StructuralError("constant polynomial needs a prime characteristic");
  const auto mod = static_cast<std::int64_t>(p);
  for (auto c : coeffs) coeffs_.push_back(static_cast<std::uint32_t>(((c % mod) + mod) % mod));
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty() || coeffs_.front() == 0) throw DomainError("constant term f0 must be nonzero");
  if (coeffs_.size() < 2) throw DomainError("degree must be at least 1");
}

std::string ConstantPolynomial::to_string() const { return format_int_list(coeffs_); }

ConstantPolynomial ConstantPolynomial::parse(std::uint32_t p, std::string_view text) {
  return ConstantPolynomial(p, parse_int_list(text));
}

ConstantPolynomial ConstantPolynomial::random(std::uint32_t p, std::size_t degree, Rng& rng) {
  if (degree < 1) throw DomainError("degree must be at least 1");
  std::vector<std::int64_t> c(degree + 1);
  c[0] = static_cast<std::int64_t>(rng.between(1, p - 1));
  for (std::size_t i = 1; i < degree; ++i) c[i] = static_cast<std::int64_t>(rng.below(p));
  c[degree] = static_cast<std::int64_t>(rng.between(1, p - 1));
  return ConstantPolynomial(p, std::move(c));
}

OrePolynomial evaluate_at(const ConstantPolynomial& f, const OrePolynomial& P) {
  const RingPtr& ring = P.ring();
  if (ring->field()->characteristic() != f.characteristic())
    throw StructuralError("constant polynomial and ring have different characteristics");
  const auto& c = f.coeffs();
  OrePolynomial acc = OrePolynomial::constant(ring, c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * P + OrePolynomial::constant(ring, c[i]);
  return acc;
}

std::pair<ConstantPolynomial, OrePolynomial> sample_private(const OrePolynomial& P, const OrePolynomial& L,
                                                            std::size_t nu, Rng& rng) {
  if (commutes(P, L)) throw DomainError("generator commutes with L");
  const std::uint32_t p = P.ring()->field()->characteristic();
  for (unsigned attempt = 0; attempt < kMaxResample; ++attempt) {
    ConstantPolynomial f = ConstantPolynomial::random(p, nu, rng);
    OrePolynomial value = evaluate_at(f, P);
    if (!commutes(value, L)) return {std::move(f), std::move(value)};
  }
  throw ResampleExhausted("no non-commuting key after " + std::to_string(kMaxResample) + " draws");
}

}  // namespace ore
