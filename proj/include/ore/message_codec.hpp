#pragma once

// Byte strings as ring elements. The frame
//
//   length (4 bytes, big-endian) | payload | CRC-32 of payload (4 bytes)
//
// is written as fixed-width base-q digits, q the size of the coefficient
// field, onto the monomials of the ring in ascending graded order, followed
// by a single marker digit 1. The ascending enumeration is a prefix of the
// enumeration for any larger degree bound, so decoding needs no parameters.

#include <cstdint>
#include <string>
#include <vector>

#include "ore/ore_core.hpp"

namespace ore {

using Bytes = std::vector<std::uint8_t>;

class MessageCodec {
 public:
  explicit MessageCodec(RingPtr ring);

  // Digits per byte: the least w with q^w >= 256.
  std::size_t digits_per_byte() const { return width_; }
  // Smallest total degree whose monomials hold the frame of n payload bytes.
  unsigned degree_for(std::size_t n_bytes) const;

  OrePolynomial encode(const Bytes& payload) const;
  // Throws ParseError when the frame, checksum or marker do not match.
  Bytes decode(const OrePolynomial& m) const;

 private:
  RingPtr ring_;
  std::size_t width_;
};

Bytes to_bytes(const std::string& s);
std::string to_string(const Bytes& b);

}  // namespace ore
