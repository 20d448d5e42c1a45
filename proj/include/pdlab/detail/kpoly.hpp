#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "pdlab/detail/field_ops.hpp"
#include "pdlab/detail/packed.hpp"

namespace pdlab::detail {

/// Kernel polynomial or free-module vector: parallel arrays of coefficient,
/// packed monomial and component, strictly descending in the module order.
template <class F, std::size_t W>
struct KPoly {
  using Elem = typename F::Elem;
  std::vector<Elem> coefs;
  std::vector<Packed<W>> monos;
  std::vector<std::uint32_t> comps;

  std::size_t size() const { return coefs.size(); }
  bool empty() const { return coefs.empty(); }
  void push(Elem c, const Packed<W>& m, std::uint32_t comp) {
    coefs.push_back(std::move(c));
    monos.push_back(m);
    comps.push_back(comp);
  }
  void clear() {
    coefs.clear();
    monos.clear();
    comps.clear();
  }
};

/// Order on module terms (monomial, component). Term-over-position breaks
/// monomial ties by component (larger index is larger); position-over-term
/// compares components first (smaller index is larger).
struct ModuleOrdering {
  PackLayout layout;
  bool position_over_term = false;

  template <std::size_t W>
  int compare(const Packed<W>& a, std::uint32_t ca, const Packed<W>& b, std::uint32_t cb) const {
    if (position_over_term) {
      if (ca != cb) return ca < cb ? 1 : -1;
      return layout.compare(a, b);
    }
    int c = layout.compare(a, b);
    if (c != 0) return c;
    if (ca != cb) return ca < cb ? -1 : 1;
    return 0;
  }
};

/// Lazily merged sum of scaled, shifted kernel polynomials. Terms come out in
/// descending order with equal terms combined (a Monagan-Pearce style heap).
/// The summands must outlive the accumulator.
template <class F, std::size_t W>
class Accumulator {
 public:
  using Elem = typename F::Elem;
  using Poly = KPoly<F, W>;

  Accumulator(const F& field, const ModuleOrdering& ordering) : f_(field), ord_(ordering) {}

  /// Adds mult * shift * p, skipping the first `start` terms of p.
  void add(const Elem& mult, const Packed<W>& shift, const Poly& p, std::size_t start = 0) {
    if (start >= p.size()) return;
    const auto id = static_cast<std::uint32_t>(streams_.size());
    streams_.push_back(Stream{mult, shift, &p, static_cast<std::uint32_t>(start)});
    heap_.push_back(Entry{mul(shift, p.monos[start]), p.comps[start], id});
    std::push_heap(heap_.begin(), heap_.end(), less_);
  }

  bool empty() const { return heap_.empty(); }

  /// Next nonzero term of the sum; false when the sum is exhausted.
  bool pop(Elem& coef, Packed<W>& mono, std::uint32_t& comp) {
    while (!heap_.empty()) {
      const Packed<W> top = heap_.front().mono;
      const std::uint32_t top_comp = heap_.front().comp;
      Elem sum = f_.zero();
      do {
        std::pop_heap(heap_.begin(), heap_.end(), less_);
        Entry e = heap_.back();
        heap_.pop_back();
        Stream& s = streams_[e.stream];
        f_.fma(sum, s.mult, s.poly->coefs[s.pos]);
        if (++s.pos < s.poly->size()) {
          e.mono = mul(s.shift, s.poly->monos[s.pos]);
          e.comp = s.poly->comps[s.pos];
          heap_.push_back(e);
          std::push_heap(heap_.begin(), heap_.end(), less_);
        }
      } while (!heap_.empty() && heap_.front().comp == top_comp && heap_.front().mono == top);
      if (!f_.is_zero(sum)) {
        coef = std::move(sum);
        mono = top;
        comp = top_comp;
        return true;
      }
    }
    return false;
  }

  void clear() {
    streams_.clear();
    heap_.clear();
  }

 private:
  struct Stream {
    Elem mult;
    Packed<W> shift;
    const Poly* poly;
    std::uint32_t pos;
  };
  struct Entry {
    Packed<W> mono;
    std::uint32_t comp;
    std::uint32_t stream;
  };
  struct Less {
    const ModuleOrdering* ord;
    bool operator()(const Entry& a, const Entry& b) const {
      return ord->compare(a.mono, a.comp, b.mono, b.comp) < 0;
    }
  };

  F f_;
  const ModuleOrdering& ord_;
  Less less_{&ord_};
  std::vector<Stream> streams_;
  std::vector<Entry> heap_;
};

}  // namespace pdlab::detail
