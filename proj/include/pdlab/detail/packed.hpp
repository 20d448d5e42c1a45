#pragma once

// Packed monomials for the Groebner and syzygy kernels.
//
// A monomial occupies W 64-bit words split into 8-bit lanes. Lane 0 (the most
// significant byte of word 0) holds the total degree; the remaining lanes hold
// exponents in an order chosen so that the configured monomial order becomes
// word-wise integer comparison. Every lane stays below 128, so products are
// plain word additions and divisibility is a borrow test on each word.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <type_traits>
#include <vector>

#include "pdlab/error.hpp"
#include "pdlab/poly/monomial.hpp"

namespace pdlab::detail {

inline constexpr std::uint64_t kHigh = 0x8080808080808080ULL;
inline constexpr std::uint64_t kLow7 = 0x7f7f7f7f7f7f7f7fULL;
inline constexpr std::uint64_t kOnes = 0x0101010101010101ULL;
inline constexpr std::uint64_t kDegreeMask = 0xff00000000000000ULL;
inline constexpr int kMaxPackedDegree = 127;

template <std::size_t W>
struct Packed {
  std::array<std::uint64_t, W> w{};
  friend bool operator==(const Packed&, const Packed&) = default;
};

template <std::size_t W>
inline int degree(const Packed<W>& a) {
  return static_cast<int>(a.w[0] >> 56);
}

template <std::size_t W>
inline Packed<W> mul(const Packed<W>& a, const Packed<W>& b) {
  Packed<W> r;
  for (std::size_t i = 0; i < W; ++i) r.w[i] = a.w[i] + b.w[i];
  return r;
}

/// b / a, caller guarantees a | b.
template <std::size_t W>
inline Packed<W> quotient(const Packed<W>& b, const Packed<W>& a) {
  Packed<W> r;
  for (std::size_t i = 0; i < W; ++i) r.w[i] = b.w[i] - a.w[i];
  return r;
}

/// a | b
template <std::size_t W>
inline bool divides(const Packed<W>& a, const Packed<W>& b) {
  for (std::size_t i = 0; i < W; ++i)
    if ((((b.w[i] | kHigh) - a.w[i]) & kHigh) != kHigh) return false;
  return true;
}

inline std::uint64_t byte_sum(std::uint64_t x) { return (x * kOnes) >> 56; }

inline std::uint64_t nonzero_lanes(std::uint64_t x) {
  return (((x & kLow7) + kLow7) | x) & kHigh;
}

/// One bit per exponent lane (folded modulo 64): a divides b only if
/// support_mask(a) is a subset of support_mask(b).
template <std::size_t W>
inline std::uint64_t support_mask(const Packed<W>& a) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < W; ++i) {
    std::uint64_t x = i == 0 ? a.w[i] & ~kDegreeMask : a.w[i];
    std::uint64_t bits = ((nonzero_lanes(x) >> 7) * 0x0102040810204080ULL) >> 56;
    s |= bits << (8 * (i % 8));
  }
  return s;
}

template <std::size_t W>
inline Packed<W> lcm(const Packed<W>& a, const Packed<W>& b) {
  Packed<W> r;
  std::uint64_t deg = 0;
  for (std::size_t i = 0; i < W; ++i) {
    std::uint64_t ge = ((a.w[i] | kHigh) - b.w[i]) & kHigh;  // lanes where a >= b
    std::uint64_t mask = (ge >> 7) * 0xff;
    std::uint64_t m = (a.w[i] & mask) | (b.w[i] & ~mask);
    if (i == 0) m &= ~kDegreeMask;
    r.w[i] = m;
    deg += byte_sum(m);
  }
  r.w[0] |= deg << 56;
  return r;
}

template <std::size_t W>
inline bool coprime(const Packed<W>& a, const Packed<W>& b) {
  for (std::size_t i = 0; i < W; ++i) {
    std::uint64_t x = a.w[i], y = b.w[i];
    if (i == 0) {
      x &= ~kDegreeMask;
      y &= ~kDegreeMask;
    }
    if (nonzero_lanes(x) & nonzero_lanes(y)) return false;
  }
  return true;
}

template <std::size_t W>
inline bool is_one(const Packed<W>& a) {
  return degree(a) == 0;
}

/// Total order modes realised on packed words.
enum class PackedOrder { kGrevlex, kGradedLex, kLex };

/// Where each variable lives, and how words compare.
class PackLayout {
 public:
  PackLayout() = default;
  PackLayout(const MonomialOrder& order, std::size_t num_vars);

  PackedOrder mode() const { return mode_; }
  std::size_t num_vars() const { return slot_.size(); }
  std::size_t slot(std::size_t var) const { return slot_[var]; }
  /// Number of 64-bit words needed for num_vars + 1 lanes.
  std::size_t words() const { return (slot_.size() + 1 + 7) / 8; }

  template <std::size_t W>
  Packed<W> pack(const Monomial& m) const {
    if (m.degree() > kMaxPackedDegree)
      throw ResourceLimitError("monomial degree " + std::to_string(m.degree()) +
                               " exceeds the kernel lane limit of " +
                               std::to_string(kMaxPackedDegree));
    Packed<W> r;
    set_lane(r, 0, static_cast<std::uint64_t>(m.degree()));
    for (std::size_t v = 0; v < slot_.size(); ++v)
      set_lane(r, slot_[v], static_cast<std::uint64_t>(m[v]));
    return r;
  }

  template <std::size_t W>
  Monomial unpack(const Packed<W>& a) const {
    std::vector<Exponent> e(slot_.size());
    for (std::size_t v = 0; v < slot_.size(); ++v) e[v] = static_cast<Exponent>(lane(a, slot_[v]));
    return Monomial(std::move(e));
  }

  template <std::size_t W>
  static std::uint64_t lane(const Packed<W>& a, std::size_t s) {
    return (a.w[s / 8] >> (8 * (7 - s % 8))) & 0xff;
  }

  /// Exponent of a variable in a packed monomial.
  template <std::size_t W>
  int exponent(const Packed<W>& a, std::size_t var) const {
    return static_cast<int>(lane(a, slot_[var]));
  }

  template <std::size_t W>
  int compare(const Packed<W>& a, const Packed<W>& b) const {
    switch (mode_) {
      case PackedOrder::kGrevlex: {
        int da = degree(a), db = degree(b);
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = 0; i < W; ++i)
          if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? 1 : -1;
        return 0;
      }
      case PackedOrder::kGradedLex:
        for (std::size_t i = 0; i < W; ++i)
          if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
        return 0;
      case PackedOrder::kLex: {
        std::uint64_t x = a.w[0] & ~kDegreeMask, y = b.w[0] & ~kDegreeMask;
        if (x != y) return x < y ? -1 : 1;
        for (std::size_t i = 1; i < W; ++i)
          if (a.w[i] != b.w[i]) return a.w[i] < b.w[i] ? -1 : 1;
        return 0;
      }
    }
    return 0;
  }

 private:
  template <std::size_t W>
  static void set_lane(Packed<W>& a, std::size_t s, std::uint64_t v) {
    a.w[s / 8] |= (v & 0xff) << (8 * (7 - s % 8));
  }

  PackedOrder mode_ = PackedOrder::kGrevlex;
  std::vector<std::size_t> slot_;
};

inline PackLayout::PackLayout(const MonomialOrder& order, std::size_t num_vars) : slot_(num_vars) {
  switch (order.kind()) {
    case MonomialOrder::Kind::kGrevlex: mode_ = PackedOrder::kGrevlex; break;
    case MonomialOrder::Kind::kGradedLex: mode_ = PackedOrder::kGradedLex; break;
    case MonomialOrder::Kind::kLex: mode_ = PackedOrder::kLex; break;
  }
  for (std::size_t i = 0; i < num_vars; ++i) {
    std::size_t v = order.variable_at(i);
    // Grevlex puts the least significant variable in the highest lane and
    // compares inverted; the lexicographic modes use significance order.
    slot_[v] = mode_ == PackedOrder::kGrevlex ? num_vars - i : i + 1;
  }
}

/// Calls fn(std::integral_constant<size_t, W>{}) for the smallest supported
/// word count that holds the layout.
template <class Fn>
decltype(auto) dispatch_width(std::size_t words, Fn&& fn) {
  switch (words) {
    case 0:
    case 1: return fn(std::integral_constant<std::size_t, 1>{});
    case 2: return fn(std::integral_constant<std::size_t, 2>{});
    case 3: return fn(std::integral_constant<std::size_t, 3>{});
    case 4: return fn(std::integral_constant<std::size_t, 4>{});
    case 5:
    case 6:
    case 7:
    case 8: return fn(std::integral_constant<std::size_t, 8>{});
    default:
      throw ResourceLimitError("rings with more than 63 variables exceed the kernel limit");
  }
}

}  // namespace pdlab::detail
