#include "pdlab/resolution/module.hpp"

#include "pdlab/detail/buchberger.hpp"
#include "pdlab/detail/convert.hpp"
#include "pdlab/detail/dispatch.hpp"
#include "pdlab/error.hpp"

namespace pdlab {

PresentationMatrix::PresentationMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source,
                                       std::vector<std::vector<Polynomial>> columns)
    : ring_(std::move(ring)), target_(std::move(target)), source_(std::move(source)), columns_(std::move(columns)) {
  if (columns_.size() != source_.rank()) throw DomainError("column count does not match the source rank");
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (columns_[c].size() != target_.rank()) throw DomainError("column length does not match the target rank");
    for (std::size_t r = 0; r < columns_[c].size(); ++r) {
      const Polynomial& p = columns_[c][r];
      if (!(*p.ring() == *ring_)) throw DomainError("matrix entry belongs to a different ring");
      if (p.is_zero()) continue;
      auto h = is_homogeneous(p);
      if (h.kind != Homogeneity::Kind::kDegree || h.degree != source_.twists[c] - target_.twists[r])
        throw DomainError("matrix entry (" + std::to_string(r) + ", " + std::to_string(c) +
                          ") is not homogeneous of degree " +
                          std::to_string(source_.twists[c] - target_.twists[r]));
    }
  }
}

PresentationMatrix PresentationMatrix::of_ideal(const IdealPresentation& ideal) {
  GradedFreeModule source;
  std::vector<std::vector<Polynomial>> cols;
  for (const auto& g : ideal.generators()) {
    source.twists.push_back(static_cast<int>(g.total_degree()));
    cols.push_back({g});
  }
  return PresentationMatrix(ideal.ring(), GradedFreeModule{{0}}, std::move(source), std::move(cols));
}

bool PresentationMatrix::is_zero() const {
  for (const auto& col : columns_)
    for (const auto& p : col)
      if (!p.is_zero()) return false;
  return true;
}

bool PresentationMatrix::has_unit_entry() const {
  for (const auto& col : columns_)
    for (const auto& p : col)
      for (const auto& t : p.terms())
        if (t.mono.is_one()) return true;
  return false;
}

PresentationMatrix compose(const PresentationMatrix& a, const PresentationMatrix& b) {
  if (!(a.source() == b.target())) throw DomainError("matrices are not composable");
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<Polynomial> col(a.rows(), Polynomial(a.ring()));
    for (std::size_t k = 0; k < b.rows(); ++k) {
      const Polynomial& f = b.entry(k, c);
      if (f.is_zero()) continue;
      for (std::size_t r = 0; r < a.rows(); ++r) col[r] = col[r] + f * a.entry(r, k);
    }
    cols.push_back(std::move(col));
  }
  return PresentationMatrix(a.ring(), a.target(), b.source(), std::move(cols));
}

namespace {

// Runs Buchberger on column vectors of a free module with the given twists
// (position over term) and hands the kernel to fn.
template <class F, std::size_t W, class Fn>
void module_basis(const F& field, const detail::PackLayout& layout, const std::vector<int>& twists,
                  const std::vector<detail::KPoly<F, W>>& gens, std::size_t max_pairs, Fn&& fn) {
  typename detail::BuchbergerKernel<F, W>::Config cfg{field, detail::ModuleOrdering{layout, true}};
  cfg.rank = twists.size();
  cfg.twists = twists;
  cfg.max_pairs = max_pairs;
  detail::BuchbergerKernel<F, W> kernel(cfg);
  kernel.run(gens);
  fn(kernel);
}

}  // namespace

PresentationMatrix minimal_columns(const PresentationMatrix& m, const SyzygyOptions& options) {
  std::vector<bool> keep;
  detail::dispatch_ring(*m.ring(), [&](auto field, auto width, const detail::PackLayout& layout) {
    using F = decltype(field);
    constexpr std::size_t W = decltype(width)::value;
    detail::ModuleOrdering ord{layout, true};
    std::vector<detail::KPoly<F, W>> gens;
    for (std::size_t c = 0; c < m.cols(); ++c) gens.push_back(detail::vector_to_kernel<F, W>(m.column(c), field, ord));
    module_basis<F, W>(field, layout, m.target().twists, gens, options.max_pairs,
                       [&](const auto& kernel) { keep = kernel.minimal_generator(); });
  });
  GradedFreeModule source;
  std::vector<std::vector<Polynomial>> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!keep[c]) continue;
    source.twists.push_back(m.source().twists[c]);
    cols.push_back(m.column(c));
  }
  return PresentationMatrix(m.ring(), m.target(), std::move(source), std::move(cols));
}

PresentationMatrix syzygies(const PresentationMatrix& m, const SyzygyOptions& options) {
  const std::size_t t = m.rows(), s = m.cols();
  std::vector<std::vector<Polynomial>> kernel_cols;
  GradedFreeModule source;
  detail::dispatch_ring(*m.ring(), [&](auto field, auto width, const detail::PackLayout& layout) {
    using F = decltype(field);
    constexpr std::size_t W = decltype(width)::value;
    detail::ModuleOrdering ord{layout, true};
    std::vector<int> twists = m.target().twists;
    twists.insert(twists.end(), m.source().twists.begin(), m.source().twists.end());

    // Graph of m: (m(e_c), e_c) in target + source.
    std::vector<detail::KPoly<F, W>> graph;
    for (std::size_t c = 0; c < s; ++c) {
      std::vector<Polynomial> entries = m.column(c);
      for (std::size_t k = 0; k < s; ++k)
        entries.push_back(k == c ? Polynomial::constant(m.ring(), 1) : Polynomial(m.ring()));
      graph.push_back(detail::vector_to_kernel<F, W>(entries, field, ord));
    }
    std::vector<detail::KPoly<F, W>> kern;
    module_basis<F, W>(field, layout, twists, graph, options.max_pairs, [&](const auto& kernel) {
      for (const auto& g : kernel.basis()) {
        if (g.comps[0] < t) continue;
        // Position over term: a lead in the source block means no target part.
        detail::KPoly<F, W> v;
        for (std::size_t i = 0; i < g.size(); ++i) v.push(g.coefs[i], g.monos[i], g.comps[i] - static_cast<std::uint32_t>(t));
        kern.push_back(std::move(v));
      }
    });
    std::vector<bool> keep;
    module_basis<F, W>(field, layout, m.source().twists, kern, options.max_pairs,
                       [&](const auto& kernel) { keep = kernel.minimal_generator(); });
    for (std::size_t i = 0; i < kern.size(); ++i) {
      if (!keep[i]) continue;
      const auto& v = kern[i];
      source.twists.push_back(detail::degree(v.monos[0]) + m.source().twists[v.comps[0]]);
      kernel_cols.push_back(detail::vector_from_kernel<F, W>(v, s, field, layout, m.ring()));
    }
  });
  return PresentationMatrix(m.ring(), m.source(), std::move(source), std::move(kernel_cols));
}

}  // namespace pdlab
