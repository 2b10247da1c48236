#include "ore/message_codec.hpp"

#include <zlib.h>

#include <algorithm>

#include "ore/errors.hpp"

namespace ore {

namespace {

constexpr std::size_t kFrameOverhead = 8;
constexpr std::size_t kMaxMonomials = std::size_t{1} << 22;

std::uint32_t checksum(const Bytes& b) {
  return static_cast<std::uint32_t>(crc32(0L, b.data(), static_cast<uInt>(b.size())));
}

void put_u32(Bytes& out, std::uint32_t v) {
  for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(v >> s));
}

std::uint32_t get_u32(const Bytes& in, std::size_t at) {
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < 4; ++i) v = (v << 8) | in[at + i];
  return v;
}

std::size_t monomial_count(const OreRing& ring, unsigned degree) {
  // C(degree + width, width)
  std::size_t c = 1;
  for (std::size_t i = 1; i <= ring.width(); ++i) {
    c = c * (degree + i) / i;
    if (c > kMaxMonomials) return SIZE_MAX;  // saturate before overflow
  }
  return c;
}

}  // namespace

MessageCodec::MessageCodec(RingPtr ring) : ring_(std::move(ring)), width_(0) {
  std::uint64_t span = 1;
  while (span < 256) {
    span *= ring_->field()->order();
    ++width_;
  }
}

unsigned MessageCodec::degree_for(std::size_t n_bytes) const {
  const std::size_t digits = (n_bytes + kFrameOverhead) * width_ + 1;
  unsigned d = 0;
  while (monomial_count(*ring_, d) < digits) ++d;
  return d;
}

OrePolynomial MessageCodec::encode(const Bytes& payload) const {
  if (payload.size() > UINT32_MAX) throw DomainError("message too long");
  Bytes frame;
  put_u32(frame, static_cast<std::uint32_t>(payload.size()));
  frame.insert(frame.end(), payload.begin(), payload.end());
  put_u32(frame, checksum(payload));

  const std::uint32_t q = ring_->field()->order();
  std::vector<Coeff> digits;
  for (std::uint8_t byte : frame) {
    std::uint32_t v = byte;
    for (std::size_t i = 0; i < width_; ++i) {
      digits.push_back(v % q);
      v /= q;
    }
  }
  digits.push_back(1);

  const auto monomials = monomials_up_to(*ring_, degree_for(payload.size()));
  std::vector<Term> terms;
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] != 0) terms.push_back(Term{monomials[i], digits[i]});
  return OrePolynomial::from_terms(ring_, std::move(terms));
}

Bytes MessageCodec::decode(const OrePolynomial& m) const {
  if (!same_ring(*m.ring(), *ring_)) throw StructuralError("message from a different ring");
  if (m.is_zero()) throw ParseError("empty message polynomial");
  if (monomial_count(*ring_, m.total_degree()) > kMaxMonomials) throw ParseError("message polynomial degree too large");
  const auto monomials = monomials_up_to(*ring_, m.total_degree());
  std::vector<Coeff> digits;
  digits.reserve(monomials.size());
  for (const auto& e : monomials) digits.push_back(m.coefficient(e));

  const std::uint32_t q = ring_->field()->order();
  auto read_bytes = [&](std::size_t first_byte, std::size_t count) {
    if ((first_byte + count) * width_ > digits.size()) throw ParseError("message frame truncated");
    Bytes out;
    for (std::size_t b = first_byte; b < first_byte + count; ++b) {
      std::uint64_t v = 0;
      for (std::size_t i = width_; i-- > 0;) v = v * q + digits[b * width_ + i];
      if (v > 255) throw ParseError("digit group out of byte range");
      out.push_back(static_cast<std::uint8_t>(v));
    }
    return out;
  };

  const std::uint32_t length = get_u32(read_bytes(0, 4), 0);
  if ((std::size_t{length} + kFrameOverhead) * width_ + 1 > digits.size()) throw ParseError("message length field out of range");
  Bytes payload = read_bytes(4, length);
  if (get_u32(read_bytes(4 + length, 4), 0) != checksum(payload)) throw ParseError("message checksum mismatch");
  const std::size_t marker = (std::size_t{length} + kFrameOverhead) * width_;
  if (digits[marker] != 1) throw ParseError("message end marker missing");
  // Nothing may follow the marker.
  if (m.size() != static_cast<std::size_t>(std::count_if(digits.begin(), digits.begin() + marker + 1,
                                                         [](Coeff c) { return c != 0; })))
    throw ParseError("stray terms after the message end marker");
  return payload;
}

Bytes to_bytes(const std::string& s) { return Bytes(s.begin(), s.end()); }

std::string to_string(const Bytes& b) { return std::string(b.begin(), b.end()); }

}  // namespace ore
