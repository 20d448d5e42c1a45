#include "pdlab/groebner/groebner.hpp"

#include "pdlab/detail/buchberger.hpp"
#include "pdlab/detail/convert.hpp"
#include "pdlab/error.hpp"

namespace pdlab {

namespace detail {

class BasisEngine {
 public:
  virtual ~BasisEngine() = default;
  virtual Polynomial normal_form(const Polynomial& p) const = 0;
};

namespace {

template <class F, std::size_t W>
class BasisEngineImpl final : public BasisEngine {
 public:
  BasisEngineImpl(typename BuchbergerKernel<F, W>::Config config, PackLayout layout, RingPtr ring)
      : kernel_(std::move(config)), layout_(std::move(layout)), ring_(std::move(ring)) {}

  BuchbergerKernel<F, W>& kernel() { return kernel_; }
  const PackLayout& layout() const { return layout_; }

  Polynomial normal_form(const Polynomial& p) const override {
    const F& f = kernel_.config().field;
    auto k = to_kernel<F, W>(p, f, layout_);
    auto r = kernel_.normal_form(k);
    return from_kernel<F, W>(r, f, layout_, ring_);
  }

 private:
  BuchbergerKernel<F, W> kernel_;
  PackLayout layout_;
  RingPtr ring_;
};

}  // namespace
}  // namespace detail

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : elements_) out.push_back(g.leading_monomial());
  return out;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const GroebnerOptions& options) {
  const RingPtr& ring = ideal.ring();
  detail::PackLayout layout(ring->order(), ring->num_vars());
  GroebnerBasis out;
  out.ring_ = ring;
  detail::dispatch_field(ring->field(), [&](auto field) {
    using F = decltype(field);
    detail::dispatch_width(layout.words(), [&](auto width) {
      constexpr std::size_t W = decltype(width)::value;
      typename detail::BuchbergerKernel<F, W>::Config cfg{field, detail::ModuleOrdering{layout, false}};
      cfg.degree_limit = options.degree_limit;
      cfg.max_pairs = options.max_pairs;
      cfg.pair_order = options.strategy == PairStrategy::kNormal ? detail::PairOrder::kAscending
                                                                 : detail::PairOrder::kDescending;
      auto engine = std::make_shared<detail::BasisEngineImpl<F, W>>(cfg, layout, ring);
      std::vector<detail::KPoly<F, W>> gens;
      for (const auto& g : ideal.generators()) gens.push_back(detail::to_kernel<F, W>(g, field, layout));
      auto& kernel = engine->kernel();
      kernel.run(gens);
      kernel.inter_reduce();
      for (const auto& g : kernel.basis())
        out.elements_.push_back(detail::from_kernel<F, W>(g, field, layout, ring));
      out.complete_ = kernel.complete();
      out.minimal_ = kernel.minimal_generator();
      out.stats_ = GroebnerStats{kernel.stats().pairs_reduced, kernel.stats().zero_reductions,
                                 kernel.stats().pairs_discarded};
      out.engine_ = std::move(engine);
    });
  });
  if (!out.complete_) out.degree_limit_ = options.degree_limit;
  return out;
}

GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GroebnerOptions& options) {
  if (order == ideal.ring()->order()) return buchberger(ideal, options);
  return buchberger(ideal.with_order(order), options);
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis) {
  if (!(*p.ring() == *basis.ring())) throw DomainError("polynomial and basis live in different rings");
  if (!basis.exact_in_degree(p.total_degree()))
    throw DomainError("basis is truncated at degree " + std::to_string(*basis.degree_limit()) +
                      "; normal form of a degree " + std::to_string(p.total_degree()) +
                      " polynomial is not determined");
  return basis.engine_->normal_form(p);
}

bool is_member(const Polynomial& p, const GroebnerBasis& basis) {
  return normal_form(p, basis).is_zero();
}

}  // namespace pdlab
