#include "ore/weak_keys.hpp"

#include "ore/errors.hpp"

namespace ore {

std::optional<GradingVector> grading_vector(const OrePolynomial& h) {
  const OreRing& ring = *h.ring();
  if (!ring.is_weyl()) throw DomainError("grading is defined for Weyl algebras only");
  if (h.is_zero()) throw DomainError("the zero polynomial has no grading");
  const std::size_t n = ring.n();
  auto diff = [&](const Term& t) {
    GradingVector z(n);
    for (std::size_t i = 0; i < n; ++i)
      z[i] = static_cast<std::int64_t>(t.exps[ring.d_slot(i)]) - static_cast<std::int64_t>(t.exps[ring.x_slot(i)]);
    return z;
  };
  const GradingVector z = diff(h.leading_term());
  for (const auto& t : h.terms())
    if (diff(t) != z) return std::nullopt;
  return z;
}

std::string to_string(ScreenVerdict v) {
  switch (v) {
    case ScreenVerdict::Accept: return "accept";
    case ScreenVerdict::RejectGraded: return "reject-graded";
    case ScreenVerdict::RejectCommutes: return "reject-commutes";
  }
  return "?";
}

ScreenVerdict screen_private_key(const OrePolynomial& h, const OrePolynomial& L) {
  if (h.ring()->is_weyl() && !h.is_zero() && grading_vector(h)) return ScreenVerdict::RejectGraded;
  if (commutes(h, L)) return ScreenVerdict::RejectCommutes;
  return ScreenVerdict::Accept;
}

}  // namespace ore
