#pragma once

// Degree-by-degree Buchberger algorithm for homogeneous ideals and
// submodules of graded free modules, on packed monomials.

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pdlab/detail/kpoly.hpp"
#include "pdlab/error.hpp"

namespace pdlab::detail {

enum class PairOrder { kAscending, kDescending };

template <class F, std::size_t W>
class BuchbergerKernel {
 public:
  using Elem = typename F::Elem;
  using Poly = KPoly<F, W>;

  struct Config {
    F field;
    ModuleOrdering ordering;
    std::size_t rank = 1;     // number of components
    std::vector<int> twists = {};  // degree shift per component; empty means all zero
    std::optional<int> degree_limit = std::nullopt;
    std::size_t max_pairs = 5'000'000;
    PairOrder pair_order = PairOrder::kAscending;
  };

  struct Stats {
    std::size_t pairs_reduced = 0;
    std::size_t zero_reductions = 0;
    std::size_t pairs_discarded = 0;
  };

  explicit BuchbergerKernel(Config config) : cfg_(std::move(config)) {}

  /// Runs on homogeneous generators. minimal_generator()[i] tells whether
  /// generator i is needed given the generators before it and everything of
  /// lower degree.
  void run(const std::vector<Poly>& generators) {
    minimal_.assign(generators.size(), false);
    std::vector<std::size_t> by_degree;
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (!generators[i].empty()) by_degree.push_back(i);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](std::size_t a, std::size_t b) {
      return poly_degree(generators[a]) < poly_degree(generators[b]);
    });

    std::size_t next_gen = 0;
    complete_ = true;
    for (;;) {
      int deg = std::numeric_limits<int>::max();
      for (const auto& p : pairs_) deg = std::min(deg, p.degree);
      if (next_gen < by_degree.size())
        deg = std::min(deg, poly_degree(generators[by_degree[next_gen]]));
      if (deg == std::numeric_limits<int>::max()) break;
      if (cfg_.degree_limit && deg > *cfg_.degree_limit) {
        complete_ = false;
        break;
      }

      std::vector<Pair> current;
      std::vector<Pair> later;
      for (auto& p : pairs_) (p.degree == deg ? current : later).push_back(p);
      pairs_ = std::move(later);
      std::sort(current.begin(), current.end(), [&](const Pair& a, const Pair& b) {
        int c = cfg_.ordering.compare(a.lcm, a.comp, b.lcm, b.comp);
        if (c != 0) return cfg_.pair_order == PairOrder::kAscending ? c < 0 : c > 0;
        return a.j != b.j ? a.j < b.j : a.i < b.i;
      });
      for (const auto& p : current) {
        Accumulator<F, W> acc(cfg_.field, cfg_.ordering);
        const Poly& gi = basis_[p.i];
        const Poly& gj = basis_[p.j];
        acc.add(cfg_.field.one(), quotient(p.lcm, gi.monos[0]), gi, 1);
        acc.add(cfg_.field.neg(cfg_.field.one()), quotient(p.lcm, gj.monos[0]), gj, 1);
        Poly h = reduce(acc);
        ++stats_.pairs_reduced;
        if (h.empty())
          ++stats_.zero_reductions;
        else
          insert(std::move(h));
      }
      while (next_gen < by_degree.size() &&
             poly_degree(generators[by_degree[next_gen]]) == deg) {
        const std::size_t gi = by_degree[next_gen++];
        Accumulator<F, W> acc(cfg_.field, cfg_.ordering);
        acc.add(cfg_.field.one(), Packed<W>{}, generators[gi], 0);
        Poly h = reduce(acc);
        if (!h.empty()) {
          minimal_[gi] = true;
          insert(std::move(h));
        }
      }
    }
  }

  /// Reduces every tail against the basis and sorts by ascending lead term,
  /// producing the reduced basis.
  void inter_reduce() {
    for (auto& g : basis_) {
      Accumulator<F, W> acc(cfg_.field, cfg_.ordering);
      acc.add(cfg_.field.one(), Packed<W>{}, g, 1);
      Poly tail = reduce(acc, false);
      Poly r;
      r.push(g.coefs[0], g.monos[0], g.comps[0]);
      for (std::size_t t = 0; t < tail.size(); ++t) r.push(tail.coefs[t], tail.monos[t], tail.comps[t]);
      g = std::move(r);
    }
    std::sort(basis_.begin(), basis_.end(), [&](const Poly& a, const Poly& b) {
      return cfg_.ordering.compare(a.monos[0], a.comps[0], b.monos[0], b.comps[0]) < 0;
    });
    rebuild_leads();
  }

  /// Full normal form with respect to the current basis (not normalized).
  Poly normal_form(const Poly& p) const {
    Accumulator<F, W> acc(cfg_.field, cfg_.ordering);
    acc.add(cfg_.field.one(), Packed<W>{}, p, 0);
    return reduce(acc, false);
  }

  const std::deque<Poly>& basis() const { return basis_; }
  const std::vector<bool>& minimal_generator() const { return minimal_; }
  bool complete() const { return complete_; }
  const Stats& stats() const { return stats_; }
  const Config& config() const { return cfg_; }

 private:
  struct Pair {
    std::uint32_t i, j;
    Packed<W> lcm;
    std::uint32_t comp;
    int degree;
  };
  struct Lead {
    Packed<W> mono;
    std::uint32_t comp;
    std::uint64_t mask;
  };

  int twist(std::uint32_t comp) const { return cfg_.twists.empty() ? 0 : cfg_.twists[comp]; }
  int poly_degree(const Poly& p) const { return degree(p.monos[0]) + twist(p.comps[0]); }

  const Lead* find_divisor(const Packed<W>& m, std::uint32_t comp, std::size_t& index) const {
    const std::uint64_t not_m = ~support_mask(m);
    for (std::size_t k = 0; k < leads_.size(); ++k) {
      const Lead& l = leads_[k];
      if (!(l.mask & not_m) && l.comp == comp && divides(l.mono, m)) {
        index = k;
        return &l;
      }
    }
    return nullptr;
  }

  Poly reduce(Accumulator<F, W>& acc, bool monic = true) const {
    Poly rem;
    Elem c;
    Packed<W> m;
    std::uint32_t comp;
    while (acc.pop(c, m, comp)) {
      std::size_t k;
      if (const Lead* l = find_divisor(m, comp, k)) {
        acc.add(cfg_.field.neg(c), quotient(m, l->mono), basis_[k], 1);
      } else {
        rem.push(std::move(c), m, comp);
      }
    }
    if (monic && !rem.empty() && !cfg_.field.is_one(rem.coefs[0])) {
      Elem inv = cfg_.field.inv(rem.coefs[0]);
      for (auto& x : rem.coefs) x = cfg_.field.mul(x, inv);
    }
    return rem;
  }

  bool is_ideal() const { return cfg_.rank == 1; }

  // Gebauer-Moeller update for a new basis element.
  void insert(Poly h) {
    const auto t = static_cast<std::uint32_t>(basis_.size());
    const Packed<W> lh = h.monos[0];
    const std::uint32_t ch = h.comps[0];
    basis_.push_back(std::move(h));
    leads_.push_back(Lead{lh, ch, support_mask(lh)});

    // Chain criterion on existing pairs.
    std::vector<Pair> kept;
    kept.reserve(pairs_.size());
    for (const auto& p : pairs_) {
      if (p.comp == ch && divides(lh, p.lcm) && !(lcm(leads_[p.i].mono, lh) == p.lcm) &&
          !(lcm(leads_[p.j].mono, lh) == p.lcm)) {
        ++stats_.pairs_discarded;
        continue;
      }
      kept.push_back(p);
    }
    pairs_ = std::move(kept);

    struct Candidate {
      std::uint32_t i;
      Packed<W> lcm;
      bool coprime;
    };
    std::vector<Candidate> cand;
    for (std::uint32_t i = 0; i < t; ++i) {
      if (leads_[i].comp != ch) continue;
      Packed<W> l = lcm(leads_[i].mono, lh);
      // Pairs above a degree limit are never reduced, so only reject the
      // ones that would be.
      if (degree(l) > kMaxPackedDegree && (!cfg_.degree_limit || *cfg_.degree_limit > kMaxPackedDegree))
        throw ResourceLimitError("S-pair degree exceeds the kernel lane limit of " +
                                 std::to_string(kMaxPackedDegree));
      cand.push_back(Candidate{i, l, is_ideal() && coprime(leads_[i].mono, lh)});
    }
    std::vector<Candidate> accepted;
    for (std::size_t a = 0; a < cand.size(); ++a) {
      bool keep = cand[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < cand.size() && keep; ++b)
          if (divides(cand[b].lcm, cand[a].lcm)) keep = false;
        for (std::size_t b = 0; b < accepted.size() && keep; ++b)
          if (divides(accepted[b].lcm, cand[a].lcm)) keep = false;
      }
      if (keep)
        accepted.push_back(cand[a]);
      else
        ++stats_.pairs_discarded;
    }
    for (const auto& c : accepted) {
      if (c.coprime) {
        ++stats_.pairs_discarded;
        continue;
      }
      pairs_.push_back(Pair{c.i, t, c.lcm, ch, degree(c.lcm) + twist(ch)});
    }
    if (pairs_.size() > cfg_.max_pairs)
      throw ResourceLimitError("pair queue exceeded " + std::to_string(cfg_.max_pairs) + " pairs");
  }

  void rebuild_leads() {
    leads_.clear();
    for (const auto& g : basis_) leads_.push_back(Lead{g.monos[0], g.comps[0], support_mask(g.monos[0])});
  }

  Config cfg_;
  std::deque<Poly> basis_;
  std::vector<Lead> leads_;
  std::vector<Pair> pairs_;
  std::vector<bool> minimal_;
  bool complete_ = true;
  Stats stats_;
};

}  // namespace pdlab::detail
