#include "ore/term_text.hpp"

#include <cctype>
#include <charconv>

#include "ore/errors.hpp"

namespace ore::text {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

bool is_number(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Term parse_term(std::string_view body, bool negative) {
  Term term;
  term.negative = negative;
  std::size_t pos = 0;
  bool first = true;
  while (pos <= body.size()) {
    // split on '*' outside brackets
    std::size_t end = pos;
    int depth = 0;
    while (end < body.size() && !(body[end] == '*' && depth == 0)) {
      if (body[end] == '[') ++depth;
      if (body[end] == ']') --depth;
      ++end;
    }
    const std::string_view factor = trim(body.substr(pos, end - pos));
    if (factor.empty()) throw ParseError("empty factor in term '" + std::string(body) + "'");
    if (factor.front() == '[' || is_number(factor)) {
      if (!first || !term.coeff.empty()) throw ParseError("coefficient must lead the term '" + std::string(body) + "'");
      term.coeff = std::string(factor);
    } else {
      Factor f;
      const auto caret = factor.find('^');
      f.name = std::string(trim(factor.substr(0, caret)));
      if (f.name.empty()) throw ParseError("missing variable name");
      for (char c : f.name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
          throw ParseError("bad variable name '" + f.name + "'");
      if (caret != std::string_view::npos) {
        const std::string_view e = trim(factor.substr(caret + 1));
        auto [ptr, ec] = std::from_chars(e.data(), e.data() + e.size(), f.exponent);
        if (ec != std::errc() || ptr != e.data() + e.size()) throw ParseError("bad exponent '" + std::string(e) + "'");
      }
      term.factors.push_back(std::move(f));
    }
    first = false;
    if (end == body.size()) break;
    pos = end + 1;
  }
  return term;
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty polynomial text");
  std::vector<Term> terms;
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  int depth = 0;
  std::size_t start = pos;
  for (std::size_t i = pos; i <= text.size(); ++i) {
    const char c = i < text.size() ? text[i] : '\0';
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (i == text.size() || (depth == 0 && (c == '+' || c == '-'))) {
      const std::string_view body = trim(text.substr(start, i - start));
      if (body.empty()) throw ParseError("dangling sign in '" + std::string(text) + "'");
      terms.push_back(parse_term(body, negative));
      if (i < text.size()) {
        negative = c == '-';
        start = i + 1;
      }
    }
  }
  if (depth != 0) throw ParseError("unbalanced brackets");
  return terms;
}

}  // namespace ore::text
