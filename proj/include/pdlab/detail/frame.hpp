#pragma once

// Nonminimal Schreyer resolution of R/I built from a Groebner basis of I
// (the La Scala-Stillman frame), Betti numbers from the ranks of its constant
// parts, and explicit minimalization for cross-checks.
//
// Level k holds the basis of F_k. Every element has a lead term m * e_b with
// b an element of level k-1; its "total" is m times the total of b, so the
// induced order on F_k compares totals with grevlex and breaks ties by index.
// Elements are grouped by b (ascending), which keeps the index tie-break
// consistent with the induced order, and sorted by decreasing lex order of m
// inside a group, which keeps the frame short.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "pdlab/detail/kpoly.hpp"
#include "pdlab/error.hpp"

namespace pdlab::detail {

template <class F, std::size_t W>
class SchreyerFrame {
 public:
  using Elem = typename F::Elem;
  using Poly = KPoly<F, W>;

  struct Config {
    F field;
    PackLayout layout;
    std::optional<int> degree_limit;
    std::size_t max_elements = 20'000'000;
  };

  struct Level {
    std::vector<Packed<W>> total;
    std::vector<std::uint32_t> comp;     // lead component in the previous level
    std::vector<std::uint32_t> partner;  // earlier element of the same group defining the S-pair
    std::vector<Poly> d;                 // terms over the previous level; monos are totals
    std::vector<std::uint32_t> group_begin;  // per previous-level element, plus one sentinel

    std::size_t size() const { return total.size(); }
    int degree(std::size_t i) const { return detail::degree(total[i]); }
  };

  explicit SchreyerFrame(Config cfg) : cfg_(std::move(cfg)), ord_{cfg_.layout, false} {}

  /// basis: a Groebner basis of I (monic, component 0).
  void build(const std::vector<Poly>& basis) {
    levels_.clear();
    truncated_ = false;
    count_ = 0;

    Level zero;
    zero.total.push_back(Packed<W>{});
    zero.comp.push_back(0);
    zero.partner.push_back(0);
    zero.d.emplace_back();
    zero.group_begin = {0, 1};
    levels_.push_back(std::move(zero));

    std::vector<const Poly*> gens;
    for (const auto& g : basis) {
      if (g.empty()) continue;
      if (exceeds_limit(degree(g.monos[0]))) {
        truncated_ = true;
        continue;
      }
      gens.push_back(&g);
    }
    std::stable_sort(gens.begin(), gens.end(),
                     [&](const Poly* a, const Poly* b) { return lex_greater(a->monos[0], b->monos[0]); });
    Level one;
    one.group_begin = {0, static_cast<std::uint32_t>(gens.size())};
    for (const Poly* g : gens) {
      one.total.push_back(g->monos[0]);
      one.comp.push_back(0);
      one.partner.push_back(0);
      one.d.push_back(*g);
    }
    count_ += one.size() + 1;
    levels_.push_back(std::move(one));

    for (std::size_t k = 1;; ++k) {
      Level next = frame_of(levels_[k]);
      if (next.size() == 0) break;
      count_ += next.size();
      if (count_ > cfg_.max_elements)
        throw ResourceLimitError("resolution frame exceeded " + std::to_string(cfg_.max_elements) +
                                 " basis elements at homological degree " + std::to_string(k + 1));
      for (std::size_t i = 0; i < next.size(); ++i) next.d[i] = syzygy(levels_[k], next, i);
      levels_.push_back(std::move(next));
    }
  }

  const std::vector<Level>& levels() const { return levels_; }
  /// True when elements above the degree limit were skipped.
  bool truncated() const { return truncated_; }
  std::size_t element_count() const { return count_; }
  std::size_t term_count() const {
    std::size_t n = 0;
    for (const auto& l : levels_)
      for (const auto& p : l.d) n += p.size();
    return n;
  }

  /// Whether a term of d(e) (comp in level k-1, total T) has degree zero.
  bool is_constant(std::size_t k, std::uint32_t comp, const Packed<W>& t) const {
    return levels_[k - 1].total[comp] == t;
  }

  /// (level, degree) -> rank of the basis in that degree.
  std::map<std::pair<int, int>, std::int64_t> frame_ranks() const {
    std::map<std::pair<int, int>, std::int64_t> r;
    for (std::size_t k = 0; k < levels_.size(); ++k)
      for (std::size_t i = 0; i < levels_[k].size(); ++i) ++r[{static_cast<int>(k), levels_[k].degree(i)}];
    return r;
  }

  /// Minimal Betti numbers: beta_{k,j} = r_{k,j} - rank A_{k,j} - rank A_{k+1,j}
  /// where A_{k,j} is the scalar matrix of degree-zero entries of d_k in degree j.
  std::map<std::pair<int, int>, std::int64_t> betti_numbers() const {
    std::map<std::pair<int, int>, std::int64_t> ranks;  // (k, j) -> rank A_{k,j}
    for (std::size_t k = 1; k < levels_.size(); ++k) {
      const Level& L = levels_[k];
      const Level& P = levels_[k - 1];
      std::map<int, std::vector<std::uint32_t>> by_degree;
      for (std::uint32_t i = 0; i < L.size(); ++i) by_degree[L.degree(i)].push_back(i);
      for (const auto& [j, rows] : by_degree) {
        std::unordered_map<std::uint32_t, std::uint32_t> col;
        std::vector<std::vector<std::pair<std::uint32_t, Elem>>> mat;
        for (auto i : rows) {
          std::vector<std::pair<std::uint32_t, Elem>> row;
          const Poly& p = L.d[i];
          for (std::size_t t = 0; t < p.size(); ++t) {
            if (!(P.total[p.comps[t]] == p.monos[t])) continue;
            auto [it, fresh] = col.emplace(p.comps[t], static_cast<std::uint32_t>(col.size()));
            (void)fresh;
            row.emplace_back(it->second, p.coefs[t]);
          }
          if (!row.empty()) mat.push_back(std::move(row));
        }
        ranks[{static_cast<int>(k), j}] = static_cast<std::int64_t>(rank(mat, col.size()));
      }
    }
    std::map<std::pair<int, int>, std::int64_t> betti;
    for (const auto& [key, r] : frame_ranks()) {
      auto [k, j] = key;
      std::int64_t b = r;
      if (auto it = ranks.find({k, j}); it != ranks.end()) b -= it->second;
      if (auto it = ranks.find({k + 1, j}); it != ranks.end()) b -= it->second;
      if (b < 0) throw std::logic_error("negative Betti number from constant ranks");
      if (b > 0) betti[{k, j}] = b;
    }
    return betti;
  }

  /// Rank of a sparse matrix (rows of (column, value), columns < ncols).
  std::size_t rank(std::vector<std::vector<std::pair<std::uint32_t, Elem>>>& rows, std::size_t ncols) const {
    const F& f = cfg_.field;
    std::vector<std::vector<std::pair<std::uint32_t, Elem>>> pivot(ncols);
    std::vector<bool> has(ncols, false);
    std::vector<Elem> dense(ncols, f.zero());
    std::size_t rk = 0;
    for (auto& row : rows) {
      std::uint32_t lo = static_cast<std::uint32_t>(ncols);
      for (auto& [c, v] : row) {
        dense[c] = v;
        lo = std::min(lo, c);
      }
      bool placed = false;
      for (std::uint32_t c = lo; c < ncols; ++c) {
        if (f.is_zero(dense[c])) continue;
        if (has[c]) {
          Elem m = f.neg(dense[c]);
          for (const auto& [pc, pv] : pivot[c]) f.fma(dense[pc], m, pv);
          continue;
        }
        if (!placed) {
          Elem inv = f.inv(dense[c]);
          std::vector<std::pair<std::uint32_t, Elem>> pr;
          for (std::uint32_t e = c; e < ncols; ++e)
            if (!f.is_zero(dense[e])) pr.emplace_back(e, f.mul(dense[e], inv));
          pivot[c] = std::move(pr);
          has[c] = true;
          ++rk;
          placed = true;
        }
        break;
      }
      std::fill(dense.begin(), dense.end(), f.zero());
    }
    return rk;
  }

  const Config& config() const { return cfg_; }
  const ModuleOrdering& ordering() const { return ord_; }

 private:
  bool exceeds_limit(int deg) const { return cfg_.degree_limit && deg > *cfg_.degree_limit; }

  bool lex_greater(const Packed<W>& a, const Packed<W>& b) const {
    for (std::size_t v = 0; v < cfg_.layout.num_vars(); ++v) {
      int x = cfg_.layout.exponent(a, v), y = cfg_.layout.exponent(b, v);
      if (x != y) return x > y;
    }
    return false;
  }

  // Lead terms of the next level: for each element a, the minimal generators
  // of the monomial ideal (m_c : m_a) over earlier elements c of its group.
  Level frame_of(const Level& L) {
    Level N;
    N.group_begin.assign(L.size() + 1, 0);
    struct Cand {
      Packed<W> q;
      std::uint32_t partner;
    };
    std::vector<Cand> cand, kept;
    for (std::size_t b = 0; b + 1 < L.group_begin.size(); ++b) {
      const std::uint32_t lo = L.group_begin[b], hi = L.group_begin[b + 1];
      for (std::uint32_t a = lo; a < hi; ++a) {
        N.group_begin[a] = static_cast<std::uint32_t>(N.size());
        cand.clear();
        for (std::uint32_t c = lo; c < a; ++c)
          cand.push_back(Cand{quotient(lcm(L.total[c], L.total[a]), L.total[a]), c});
        std::stable_sort(cand.begin(), cand.end(),
                         [](const Cand& x, const Cand& y) { return degree(x.q) < degree(y.q); });
        kept.clear();
        for (const auto& c : cand) {
          bool redundant = false;
          for (const auto& k : kept)
            if (divides(k.q, c.q)) {
              redundant = true;
              break;
            }
          if (!redundant) kept.push_back(c);
        }
        std::stable_sort(kept.begin(), kept.end(),
                         [&](const Cand& x, const Cand& y) { return lex_greater(x.q, y.q); });
        for (const auto& c : kept) {
          const int deg = degree(c.q) + L.degree(a);
          if (exceeds_limit(deg)) {
            truncated_ = true;
            continue;
          }
          if (deg > kMaxPackedDegree)
            throw ResourceLimitError("resolution degree exceeds the kernel lane limit of " +
                                     std::to_string(kMaxPackedDegree));
          N.total.push_back(mul(c.q, L.total[a]));
          N.comp.push_back(a);
          N.partner.push_back(c.partner);
        }
      }
    }
    N.group_begin[L.size()] = static_cast<std::uint32_t>(N.size());
    N.d.resize(N.size());
    return N;
  }

  // d(e_i) for element i of level N (over level L): start from m * d(e_a) and
  // cancel its terms with the differentials of L, partner first; the
  // recorded multipliers are the syzygy.
  Poly syzygy(const Level& L, const Level& N, std::size_t i) const {
    const F& f = cfg_.field;
    const std::uint32_t a = N.comp[i];
    Poly out;
    out.push(f.one(), N.total[i], a);
    Accumulator<F, W> acc(f, ord_);
    acc.add(f.one(), quotient(N.total[i], L.total[a]), L.d[a], 0);
    Elem c;
    Packed<W> t;
    std::uint32_t b;
    bool first = true;
    while (acc.pop(c, t, b)) {
      std::uint32_t r = 0;
      bool found = false;
      if (first) {
        r = N.partner[i];
        found = L.comp[r] == b && divides(L.total[r], t);
        first = false;
      } else {
        for (std::uint32_t s = L.group_begin[b], e = L.group_begin[b + 1]; s < e; ++s)
          if (divides(L.total[s], t)) {
            r = s;
            found = true;
            break;
          }
      }
      if (!found) throw std::logic_error("Schreyer frame reduction found no divisor");
      Elem nc = f.neg(c);
      acc.add(nc, quotient(t, L.total[r]), L.d[r], 1);
      out.push(nc, t, r);
    }
    return out;
  }

  Config cfg_;
  ModuleOrdering ord_;
  std::vector<Level> levels_;
  bool truncated_ = false;
  std::size_t count_ = 0;
};


/// Free complex F_n -> ... -> F_0 with explicit differentials: column i of
/// level k is d_k(e_i) with components indexing level k-1 and genuine
/// monomial coefficients, sorted position-over-term.
template <class F, std::size_t W>
class ChainComplex {
 public:
  using Elem = typename F::Elem;
  using Poly = KPoly<F, W>;

  ChainComplex(F field, PackLayout layout) : f_(std::move(field)), ord_{std::move(layout), true} {}

  static ChainComplex from_frame(const SchreyerFrame<F, W>& frame) {
    ChainComplex c(frame.config().field, frame.config().layout);
    const auto& levels = frame.levels();
    for (std::size_t k = 0; k < levels.size(); ++k) {
      const auto& L = levels[k];
      std::vector<int> deg(L.size());
      std::vector<Poly> cols(L.size());
      for (std::size_t i = 0; i < L.size(); ++i) {
        deg[i] = L.degree(i);
        if (k == 0) continue;
        const Poly& d = L.d[i];
        std::vector<std::size_t> idx(d.size());
        for (std::size_t t = 0; t < d.size(); ++t) idx[t] = t;
        std::vector<Packed<W>> mono(d.size());
        for (std::size_t t = 0; t < d.size(); ++t) mono[t] = quotient(d.monos[t], levels[k - 1].total[d.comps[t]]);
        std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
          return c.ord_.compare(mono[x], d.comps[x], mono[y], d.comps[y]) > 0;
        });
        for (auto t : idx) cols[i].push(d.coefs[t], mono[t], d.comps[t]);
      }
      c.degrees_.push_back(std::move(deg));
      c.columns_.push_back(std::move(cols));
    }
    return c;
  }

  std::size_t length() const { return degrees_.size(); }
  const std::vector<std::vector<int>>& degrees() const { return degrees_; }
  const std::vector<std::vector<Poly>>& columns() const { return columns_; }
  const ModuleOrdering& ordering() const { return ord_; }

  /// d_{k-1} o d_k = 0 for every k.
  bool is_complex() const {
    for (std::size_t k = 2; k < columns_.size(); ++k)
      for (const auto& col : columns_[k]) {
        Accumulator<F, W> acc(f_, ord_);
        for (std::size_t t = 0; t < col.size(); ++t) acc.add(col.coefs[t], col.monos[t], columns_[k - 1][col.comps[t]]);
        Elem c;
        Packed<W> m;
        std::uint32_t comp;
        if (acc.pop(c, m, comp)) return false;
      }
    return true;
  }

  /// No differential has a nonzero constant entry.
  bool is_minimal() const {
    for (std::size_t k = 1; k < columns_.size(); ++k)
      for (const auto& col : columns_[k])
        for (const auto& m : col.monos)
          if (is_one(m)) return false;
    return true;
  }

  std::map<std::pair<int, int>, std::int64_t> ranks() const {
    std::map<std::pair<int, int>, std::int64_t> r;
    for (std::size_t k = 0; k < degrees_.size(); ++k)
      for (int d : degrees_[k]) ++r[{static_cast<int>(k), d}];
    return r;
  }

  /// Splits off trivial summands R(-j) -> R(-j) until every constant entry
  /// is gone. Pivots are taken level by level, degree by degree, in index
  /// order.
  void minimize() {
    const std::size_t n = columns_.size();
    std::vector<std::vector<bool>> alive(n);
    for (std::size_t k = 0; k < n; ++k) alive[k].assign(degrees_[k].size(), true);

    for (std::size_t k = 1; k < n; ++k) {
      auto& cols = columns_[k];
      const auto& prev_alive = alive[k - 1];
      for (auto& col : cols) strip(col, prev_alive);

      std::vector<std::vector<std::uint32_t>> row_cols(degrees_[k - 1].size());
      for (std::uint32_t e = 0; e < cols.size(); ++e) note_rows(row_cols, cols[e], e);

      std::vector<std::uint32_t> order(cols.size());
      for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
      std::stable_sort(order.begin(), order.end(),
                       [&](std::uint32_t a, std::uint32_t b) { return degrees_[k][a] < degrees_[k][b]; });

      for (std::uint32_t c : order) {
        const Poly& pc = cols[c];
        std::size_t t = 0;
        while (t < pc.size() && !is_one(pc.monos[t])) ++t;
        if (t == pc.size()) continue;
        const std::uint32_t r = pc.comps[t];
        const Elem inv_u = f_.inv(pc.coefs[t]);
        const std::vector<std::uint32_t> targets = row_cols[r];
        for (std::uint32_t e : targets) {
          if (e == c || !alive[k][e]) continue;
          Poly& pe = cols[e];
          Poly beta;
          for (std::size_t s = 0; s < pe.size(); ++s)
            if (pe.comps[s] == r) beta.push(pe.coefs[s], pe.monos[s], r);
          if (beta.empty()) continue;
          Accumulator<F, W> acc(f_, ord_);
          acc.add(f_.one(), Packed<W>{}, pe);
          for (std::size_t s = 0; s < beta.size(); ++s)
            acc.add(f_.neg(f_.mul(beta.coefs[s], inv_u)), beta.monos[s], pc);
          Poly updated;
          Elem co;
          Packed<W> m;
          std::uint32_t comp;
          while (acc.pop(co, m, comp)) updated.push(co, m, comp);
          pe = std::move(updated);
          note_rows(row_cols, pc, e);
        }
        alive[k][c] = false;
        alive[k - 1][r] = false;
      }
    }
    compact(alive);
  }

 private:
  static void strip(Poly& p, const std::vector<bool>& alive_rows) {
    Poly q;
    for (std::size_t t = 0; t < p.size(); ++t)
      if (alive_rows[p.comps[t]]) q.push(p.coefs[t], p.monos[t], p.comps[t]);
    p = std::move(q);
  }

  static void note_rows(std::vector<std::vector<std::uint32_t>>& row_cols, const Poly& p, std::uint32_t e) {
    for (std::size_t t = 0; t < p.size(); ++t) {
      auto& list = row_cols[p.comps[t]];
      if (list.empty() || list.back() != e) list.push_back(e);
    }
  }

  void compact(const std::vector<std::vector<bool>>& alive) {
    const std::size_t n = columns_.size();
    std::vector<std::vector<std::uint32_t>> index(n);
    for (std::size_t k = 0; k < n; ++k) {
      index[k].assign(alive[k].size(), UINT32_MAX);
      std::uint32_t next = 0;
      for (std::size_t i = 0; i < alive[k].size(); ++i)
        if (alive[k][i]) index[k][i] = next++;
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<int> deg;
      std::vector<Poly> cols;
      for (std::size_t i = 0; i < alive[k].size(); ++i) {
        if (!alive[k][i]) continue;
        deg.push_back(degrees_[k][i]);
        if (k == 0) {
          cols.emplace_back();
          continue;
        }
        Poly q;
        const Poly& p = columns_[k][i];
        for (std::size_t t = 0; t < p.size(); ++t) {
          const std::uint32_t r = index[k - 1][p.comps[t]];
          if (r == UINT32_MAX) continue;  // row of a summand split off at the next level
          q.push(p.coefs[t], p.monos[t], r);
        }
        cols.push_back(std::move(q));
      }
      degrees_[k] = std::move(deg);
      columns_[k] = std::move(cols);
    }
    while (!degrees_.empty() && degrees_.back().empty()) {
      degrees_.pop_back();
      columns_.pop_back();
    }
  }

  F f_;
  ModuleOrdering ord_;
  std::vector<std::vector<int>> degrees_;
  std::vector<std::vector<Poly>> columns_;
};

}  // namespace pdlab::detail
