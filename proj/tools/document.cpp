#include "document.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "ore/errors.hpp"
#include "ore/rng.hpp"

namespace cli {

using ore::ParseError;

Document::Document(const ore::RingPtr& ring, std::optional<std::uint64_t> seed, const std::string& type) {
  set("ring", ring->describe());
  set("seed", seed ? std::to_string(*seed) + " " + std::string(ore::Rng::kName) : std::string("none"));
  set("type", type);
}

void Document::set(const std::string& key, const std::string& value) {
  if (key.empty() || key.find_first_of(": \n") != std::string::npos) throw ParseError("bad key '" + key + "'");
  if (value.find('\n') != std::string::npos) throw ParseError("value of '" + key + "' spans lines");
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = value;
      return;
    }
  }
  entries_.emplace_back(key, value);
}

bool Document::has(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.first == key) return true;
  return false;
}

const std::string& Document::get(const std::string& key) const {
  for (const auto& e : entries_)
    if (e.first == key) return e.second;
  throw ParseError("missing '" + key + "'");
}

std::uint64_t Document::get_u64(const std::string& key) const {
  const auto& v = get(key);
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) throw ParseError("'" + key + "' is not an integer");
  return out;
}

ore::OrePolynomial Document::get_poly(const ore::RingPtr& ring, const std::string& key) const {
  return ore::OrePolynomial::parse(ring, get(key));
}

ore::RingPtr Document::ring() const { return ore::OreRing::parse(get("ring")); }

std::optional<std::uint64_t> Document::seed() const {
  const auto& v = get("seed");
  if (v == "none") return std::nullopt;
  const auto space = v.find(' ');
  if (space == std::string::npos || v.substr(space + 1) != ore::Rng::kName)
    throw ParseError("seed line must name " + std::string(ore::Rng::kName));
  std::uint64_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + space, out);
  if (ec != std::errc() || ptr != v.data() + space) throw ParseError("bad seed");
  return out;
}

void Document::expect_type(const std::string& type) const {
  if (get("type") != type) throw ParseError("expected a '" + type + "' file, got '" + get("type") + "'");
}

std::string Document::render() const {
  std::string out = std::string(kMagic) + "\n";
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

Document Document::parse(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line) || line != kMagic) throw ParseError("not an ore-kex v1 file");
  Document doc;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(": ");
    if (colon == std::string::npos) throw ParseError("malformed line '" + line.substr(0, 40) + "'");
    const std::string key = line.substr(0, colon);
    if (doc.has(key)) throw ParseError("duplicate '" + key + "'");
    doc.set(key, line.substr(colon + 2));
  }
  return doc;
}

Document Document::load(const std::string& path) { return parse(read_file(path)); }

void Document::save(const std::string& path) const { write_file(path, render()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << content)) throw ore::Error("cannot write " + path);
}

}  // namespace cli
