#include "pdlab/resolution/resolution.hpp"

#include "pdlab/detail/buchberger.hpp"
#include "pdlab/detail/convert.hpp"
#include "pdlab/detail/dispatch.hpp"
#include "pdlab/detail/frame.hpp"
#include "pdlab/error.hpp"

namespace pdlab {

namespace {

template <class F, std::size_t W>
std::vector<PresentationMatrix> to_matrices(const detail::ChainComplex<F, W>& cc, const F& field,
                                            const RingPtr& ring) {
  std::vector<PresentationMatrix> out;
  const auto& deg = cc.degrees();
  for (std::size_t k = 1; k < cc.length(); ++k) {
    GradedFreeModule target{deg[k - 1]}, source{deg[k]};
    std::vector<std::vector<Polynomial>> cols;
    for (const auto& col : cc.columns()[k])
      cols.push_back(detail::vector_from_kernel<F, W>(col, target.rank(), field, cc.ordering().layout, ring));
    out.emplace_back(ring, std::move(target), std::move(source), std::move(cols));
  }
  return out;
}

}  // namespace

Resolution resolve(const IdealPresentation& ideal, const ResolveOptions& options) {
  Resolution res;
  const RingPtr& ring = ideal.ring();
  detail::dispatch_ring(*ring, [&](auto field, auto width, const detail::PackLayout& layout) {
    using F = decltype(field);
    constexpr std::size_t W = decltype(width)::value;

    typename detail::BuchbergerKernel<F, W>::Config gcfg{field, detail::ModuleOrdering{layout, false}};
    gcfg.degree_limit = options.degree_limit;
    gcfg.max_pairs = options.max_pairs;
    detail::BuchbergerKernel<F, W> gb(gcfg);
    std::vector<detail::KPoly<F, W>> gens;
    for (const auto& g : ideal.generators()) gens.push_back(detail::to_kernel<F, W>(g, field, layout));
    gb.run(gens);
    gb.inter_reduce();
    std::vector<detail::KPoly<F, W>> basis(gb.basis().begin(), gb.basis().end());

    typename detail::SchreyerFrame<F, W>::Config fcfg{field, layout};
    fcfg.degree_limit = options.degree_limit;
    fcfg.max_elements = options.max_frame_elements;
    detail::SchreyerFrame<F, W> frame(fcfg);
    frame.build(basis);

    res.betti_ = BettiTable(frame.betti_numbers());
    if (options.degree_limit && (!gb.complete() || frame.truncated())) res.betti_.mark_truncated(*options.degree_limit);
    res.stats_.basis_size = basis.size();
    for (const auto& l : frame.levels()) res.stats_.frame_ranks.push_back(l.size());
    res.stats_.frame_terms = frame.term_count();

    if (options.minimize || options.keep_differentials) {
      auto cc = detail::ChainComplex<F, W>::from_frame(frame);
      res.checks_.performed = true;
      res.checks_.frame_is_complex = cc.is_complex();
      cc.minimize();
      res.checks_.minimal_is_complex = cc.is_complex();
      res.checks_.minimal = cc.is_minimal();
      res.checks_.ranks_agree = BettiTable(cc.ranks()) == res.betti_;
      if (options.keep_differentials) res.differentials_ = to_matrices<F, W>(cc, field, ring);
    }
  });
  return res;
}

BettiTable betti_table(const IdealPresentation& ideal, std::optional<int> degree_limit) {
  ResolveOptions o;
  o.degree_limit = degree_limit;
  o.minimize = false;
  return resolve(ideal, o).betti();
}

std::vector<PresentationMatrix> resolve_by_syzygies(const IdealPresentation& ideal, const SyzygyOptions& options) {
  std::vector<PresentationMatrix> ds;
  PresentationMatrix m = minimal_columns(PresentationMatrix::of_ideal(ideal), options);
  if (m.cols() == 0) return ds;
  ds.push_back(m);
  for (std::size_t step = 0; step <= ideal.ring()->num_vars() + 1; ++step) {
    PresentationMatrix s = syzygies(ds.back(), options);
    if (s.cols() == 0) return ds;
    ds.push_back(std::move(s));
  }
  throw std::logic_error("syzygy chain longer than the number of variables");
}

BettiTable betti_of(const std::vector<PresentationMatrix>& ds) {
  BettiTable t;
  if (ds.empty()) {
    t.set(0, 0, 1);
    return t;
  }
  std::map<std::pair<int, int>, std::int64_t> e;
  for (int tw : ds.front().target().twists) ++e[{0, tw}];
  for (std::size_t i = 0; i < ds.size(); ++i)
    for (int tw : ds[i].source().twists) ++e[{static_cast<int>(i + 1), tw}];
  return BettiTable(e);
}

bool is_complex(const std::vector<PresentationMatrix>& ds) {
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (!compose(ds[i - 1], ds[i]).is_zero()) return false;
  return true;
}

bool is_minimal(const std::vector<PresentationMatrix>& ds) {
  for (const auto& d : ds)
    if (d.has_unit_entry()) return false;
  return true;
}

}  // namespace pdlab
