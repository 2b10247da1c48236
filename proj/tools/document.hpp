#pragma once

// Text files exchanged by the ore-kex tool:
//
//   # ore-kex v1
//   ring: skew p=5 k=3 m=[3,3,0,1] sigma=[2,1]
//   seed: 7 mt19937_64
//   type: params
//   L: 3*d1^2 + ...
//
// One "key: value" pair per line, keys unique, order preserved.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ore/ore_core.hpp"

namespace cli {

inline constexpr const char* kMagic = "# ore-kex v1";

class Document {
 public:
  Document() = default;
  // Writes the ring and seed header lines.
  Document(const ore::RingPtr& ring, std::optional<std::uint64_t> seed, const std::string& type);

  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const ore::OrePolynomial& h) { set(key, h.to_string()); }

  bool has(const std::string& key) const;
  const std::string& get(const std::string& key) const;  // ParseError when missing
  std::uint64_t get_u64(const std::string& key) const;
  ore::OrePolynomial get_poly(const ore::RingPtr& ring, const std::string& key) const;

  ore::RingPtr ring() const;
  std::optional<std::uint64_t> seed() const;
  // Throws ParseError unless the type line equals `type`.
  void expect_type(const std::string& type) const;

  std::string render() const;
  static Document parse(const std::string& text);

  static Document load(const std::string& path);
  void save(const std::string& path) const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace cli
