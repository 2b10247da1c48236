#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>

namespace ore {

// Graded reverse-lexicographic order: higher total degree wins; on ties the
// monomial with the smaller exponent in the last differing position is
// larger. Works on any pair of equally sized random-access ranges.
template <class A, class B>
int grevlex_compare(const A& a, const B& b) {
  const std::size_t n = a.size();
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = 0; i < n; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct GrevlexGreater {
  template <class A, class B>
  bool operator()(const A& a, const B& b) const {
    return grevlex_compare(a, b) > 0;
  }
};

}  // namespace ore
