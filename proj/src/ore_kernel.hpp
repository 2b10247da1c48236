#pragma once

// Internal term-level machinery shared by multiplication and exact division.

#include <algorithm>
#include <map>
#include <unordered_map>
#include <vector>

#include "ore/errors.hpp"
#include "ore/monomial_order.hpp"
#include "ore/ore_core.hpp"

namespace ore::detail {

// Largest boxes handled with flat arrays; bigger ones use the map-backed accumulators.
inline constexpr std::size_t kDenseProductLimit = std::size_t{1} << 22;
inline constexpr std::size_t kDenseDivisionLimit = std::size_t{1} << 20;

// Mixed-radix addressing of all exponent vectors below per-slot extents.
struct MonomialBox {
  std::size_t width = 0;
  std::array<std::size_t, kMaxExponents> extent{};
  std::array<std::size_t, kMaxExponents> stride{};
  std::size_t size = 0;  // 0 when the box exceeds the limit; strides are then unusable

  static MonomialBox covering(const Exponents& max, std::size_t width, std::size_t limit) {
    MonomialBox b;
    b.width = width;
    std::size_t s = 1;
    bool fits = true;
    for (std::size_t i = 0; i < width; ++i) {
      b.extent[i] = std::size_t{max[i]} + 1;
      b.stride[i] = s;
      if (fits && s > limit / b.extent[i]) fits = false;
      if (fits) s *= b.extent[i];
    }
    b.size = fits ? s : 0;
    return b;
  }

  std::size_t index(const Exponents& e) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < width; ++i) idx += e[i] * stride[i];
    return idx;
  }

  Exponents decode(std::size_t idx) const {
    Exponents e{};
    for (std::size_t i = 0; i < width; ++i) {
      e[i] = static_cast<std::uint16_t>(idx % extent[i]);
      idx /= extent[i];
    }
    return e;
  }

  bool contains(const Exponents& e) const {
    for (std::size_t i = 0; i < width; ++i)
      if (e[i] >= extent[i]) return false;
    return true;
  }

  // Every index of the box, in descending graded reverse-lexicographic order.
  std::vector<std::uint32_t> descending_order() const {
    std::vector<std::uint32_t> out;
    out.reserve(size);
    std::size_t max_degree = 0;
    for (std::size_t i = 0; i < width; ++i) max_degree += extent[i] - 1;
    for (std::size_t d = max_degree + 1; d-- > 0;) emit(width - 1, d, 0, out);
    return out;
  }

 private:
  void emit(std::size_t pos, std::size_t remaining, std::size_t base, std::vector<std::uint32_t>& out) const {
    if (pos == 0) {
      if (remaining < extent[0]) out.push_back(static_cast<std::uint32_t>(base + remaining * stride[0]));
      return;
    }
    const std::size_t top = std::min(extent[pos] - 1, remaining);
    for (std::size_t v = 0; v <= top; ++v) emit(pos - 1, remaining - v, base + v * stride[pos], out);
  }
};

// Field elements as base-p digit vectors packed into the lanes of a 64-bit
// word, so that sums of many elements need no reduction until read back.
class DigitPacking {
 public:
  explicit DigitPacking(const FiniteField& f) : p_(f.characteristic()), k_(f.degree()) {
    lane_bits_ = 64 / k_;
    const std::uint64_t lane_max = lane_bits_ >= 64 ? UINT64_MAX : (std::uint64_t{1} << lane_bits_) - 1;
    max_terms_ = lane_max / (p_ - 1);
    packed_.resize(f.order());
    for (Coeff c = 0; c < f.order(); ++c) {
      std::uint64_t v = 0, rest = c;
      for (std::uint32_t i = 0; i < k_; ++i, rest /= p_) v |= (rest % p_) << (i * lane_bits_);
      packed_[c] = v;
    }
  }

  // Whether summing `terms` packed elements stays within every lane.
  bool fits(std::size_t terms) const { return k_ <= 8 && terms <= max_terms_; }
  std::uint64_t pack(Coeff c) const { return packed_[c]; }

  Coeff reduce(std::uint64_t v) const {
    const std::uint64_t mask = lane_bits_ >= 64 ? UINT64_MAX : (std::uint64_t{1} << lane_bits_) - 1;
    Coeff c = 0, scale = 1;
    for (std::uint32_t i = 0; i < k_; ++i, scale *= p_) c += static_cast<Coeff>(((v >> (i * lane_bits_)) & mask) % p_) * scale;
    return c;
  }

 private:
  std::uint32_t p_, k_, lane_bits_;
  std::uint64_t max_terms_;
  std::vector<std::uint64_t> packed_;
};

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : e) h = (h ^ v) * 1099511628211ull;
    return h;
  }
};

inline void sort_descending(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex_compare(a.exps, b.exps) > 0; });
}

// C(b,k) * C(g,k) * k! mod p, the coefficient of x^(g-k) d^(b-k) in d^b x^g.
class LeibnizTable {
 public:
  LeibnizTable(std::uint32_t p, std::size_t max_n) : p_(p), n_(max_n + 1), binom_(n_ * n_, 0), fact_(n_, 1) {
    for (std::size_t i = 0; i < n_; ++i) {
      binom_[i * n_] = 1 % p;
      for (std::size_t j = 1; j <= i; ++j)
        binom_[i * n_ + j] = (binom_[(i - 1) * n_ + j - 1] + (j <= i - 1 ? binom_[(i - 1) * n_ + j] : 0)) % p;
    }
    for (std::size_t k = 1; k < n_; ++k) fact_[k] = static_cast<std::uint32_t>(std::uint64_t{fact_[k - 1]} * (k % p) % p);
  }

  std::uint32_t factor(std::size_t b, std::size_t g, std::size_t k) const {
    const std::uint64_t v = std::uint64_t{binom_[b * n_ + k]} * binom_[g * n_ + k] % p_;
    return static_cast<std::uint32_t>(v * fact_[k] % p_);
  }

 private:
  std::uint32_t p_;
  std::size_t n_;
  std::vector<std::uint32_t> binom_;
  std::vector<std::uint32_t> fact_;
};

inline std::size_t max_slot(const Exponents& a, std::size_t width) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < width; ++i) m = std::max<std::size_t>(m, a[i]);
  return m;
}

// Calls sink(exponents, coefficient) for every term of a * b (two terms).
template <class Sink>
void term_product(const OreRing& ring, const LeibnizTable* leibniz, const Term& a, const Term& b, Sink&& sink) {
  const FiniteField& f = *ring.field();
  const std::size_t w = ring.width();
  if (!ring.is_weyl()) {
    Exponents e{};
    for (std::size_t i = 0; i < w; ++i) e[i] = static_cast<std::uint16_t>(a.exps[i] + b.exps[i]);
    sink(e, f.mul(a.coeff, f.frobenius(ring.sigma_power(a.exps), b.coeff)));
    return;
  }
  // (c x^al d^be) (c' x^ga d^de) = c c' x^al (d^be x^ga) d^de; variables with
  // different indices commute, so the reordering factorizes per index.
  const std::size_t n = ring.n();
  const Coeff base = f.mul(a.coeff, b.coeff);
  std::array<std::uint16_t, kMaxExponents> kmax{};
  for (std::size_t i = 0; i < n; ++i) kmax[i] = std::min(a.exps[n + i], b.exps[i]);
  std::array<std::uint16_t, kMaxExponents> k{};
  while (true) {
    Coeff c = base;
    for (std::size_t i = 0; i < n && c != 0; ++i)
      if (k[i] != 0) c = f.mul(c, leibniz->factor(a.exps[n + i], b.exps[i], k[i]));
    if (c != 0) {
      Exponents e{};
      for (std::size_t i = 0; i < n; ++i) {
        e[i] = static_cast<std::uint16_t>(a.exps[i] + b.exps[i] - k[i]);
        e[n + i] = static_cast<std::uint16_t>(a.exps[n + i] + b.exps[n + i] - k[i]);
      }
      sink(e, c);
    }
    std::size_t i = 0;
    while (i < n && k[i] == kmax[i]) k[i++] = 0;
    if (i == n) break;
    ++k[i];
  }
}

class DenseAccumulator {
 public:
  DenseAccumulator(const FiniteField& f, const MonomialBox& box) : f_(f), box_(box), data_(box.size, 0) {}

  void add(const Exponents& e, Coeff c) { add_at(box_.index(e), c); }
  void add_at(std::size_t idx, Coeff c) { data_[idx] = f_.add(data_[idx], c); }
  std::vector<Coeff>& data() { return data_; }
  const MonomialBox& box() const { return box_; }

  std::vector<Term> collect() const {
    std::vector<Term> out;
    for (std::size_t idx = 0; idx < data_.size(); ++idx)
      if (data_[idx] != 0) out.push_back(Term{box_.decode(idx), data_[idx]});
    sort_descending(out);
    return out;
  }

 private:
  const FiniteField& f_;
  MonomialBox box_;
  std::vector<Coeff> data_;
};

class SparseAccumulator {
 public:
  explicit SparseAccumulator(const FiniteField& f) : f_(f) {}

  void add(const Exponents& e, Coeff c) {
    auto [it, inserted] = data_.try_emplace(e, c);
    if (!inserted) it->second = f_.add(it->second, c);
  }

  std::vector<Term> collect() const {
    std::vector<Term> out;
    for (const auto& [e, c] : data_)
      if (c != 0) out.push_back(Term{e, c});
    sort_descending(out);
    return out;
  }

 private:
  const FiniteField& f_;
  std::unordered_map<Exponents, Coeff, ExponentsHash> data_;
};

// Remainders for exact division: support subtraction and extraction of the
// current leading term, whose monomial only ever decreases.
class DenseRemainder {
 public:
  DenseRemainder(const FiniteField& f, const MonomialBox& box) : f_(f), box_(box), data_(box.size, 0), order_(box.descending_order()) {}

  bool contains(const Exponents& e) const { return box_.contains(e); }
  const MonomialBox& box() const { return box_; }
  std::vector<Coeff>& data() { return data_; }
  void add(const Exponents& e, Coeff c) {
    const std::size_t idx = box_.index(e);
    data_[idx] = f_.add(data_[idx], c);
  }

  // Leading term, or false when the remainder is zero.
  bool leading(Term& out) {
    while (cursor_ < order_.size() && data_[order_[cursor_]] == 0) ++cursor_;
    if (cursor_ == order_.size()) return false;
    out = Term{box_.decode(order_[cursor_]), data_[order_[cursor_]]};
    return true;
  }

 private:
  const FiniteField& f_;
  MonomialBox box_;
  std::vector<Coeff> data_;
  std::vector<std::uint32_t> order_;
  std::size_t cursor_ = 0;
};

class SparseRemainder {
 public:
  SparseRemainder(const FiniteField& f, const MonomialBox& box) : f_(f), box_(box) {}

  bool contains(const Exponents& e) const { return box_.contains(e); }
  void add(const Exponents& e, Coeff c) {
    auto [it, inserted] = data_.try_emplace(e, c);
    if (!inserted) {
      it->second = f_.add(it->second, c);
      if (it->second == 0) data_.erase(it);
    } else if (c == 0) {
      data_.erase(it);
    }
  }

  bool leading(Term& out) {
    if (data_.empty()) return false;
    out = Term{data_.begin()->first, data_.begin()->second};
    return true;
  }

 private:
  const FiniteField& f_;
  MonomialBox box_;
  std::map<Exponents, Coeff, GrevlexGreater> data_;
};

}  // namespace ore::detail
