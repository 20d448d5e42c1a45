#pragma once

#include <algorithm>
#include <numeric>

#include "pdlab/detail/kpoly.hpp"
#include "pdlab/poly/polynomial.hpp"

namespace pdlab::detail {

/// Polynomial -> kernel polynomial on one component. The layout must come
/// from the polynomial's ring order, so term order is preserved.
template <class F, std::size_t W>
KPoly<F, W> to_kernel(const Polynomial& p, const F& field, const PackLayout& layout,
                      std::uint32_t comp = 0) {
  KPoly<F, W> k;
  k.coefs.reserve(p.size());
  for (const auto& t : p.terms()) k.push(field.from(t.coef), layout.pack<W>(t.mono), comp);
  return k;
}

template <class F, std::size_t W>
Polynomial from_kernel(const KPoly<F, W>& k, const F& field, const PackLayout& layout,
                       const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(k.size());
  for (std::size_t i = 0; i < k.size(); ++i)
    terms.push_back(Term{field.to(k.coefs[i]), layout.unpack(k.monos[i])});
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Module vector (one polynomial per component) -> kernel vector, sorted in
/// the given module order.
template <class F, std::size_t W>
KPoly<F, W> vector_to_kernel(const std::vector<Polynomial>& entries, const F& field,
                             const ModuleOrdering& ord) {
  struct T {
    typename F::Elem c;
    Packed<W> m;
    std::uint32_t comp;
  };
  std::vector<T> ts;
  for (std::size_t r = 0; r < entries.size(); ++r)
    for (const auto& t : entries[r].terms())
      ts.push_back(T{field.from(t.coef), ord.layout.pack<W>(t.mono), static_cast<std::uint32_t>(r)});
  std::sort(ts.begin(), ts.end(),
            [&](const T& a, const T& b) { return ord.compare(a.m, a.comp, b.m, b.comp) > 0; });
  KPoly<F, W> k;
  for (auto& t : ts) k.push(std::move(t.c), t.m, t.comp);
  return k;
}

template <class F, std::size_t W>
std::vector<Polynomial> vector_from_kernel(const KPoly<F, W>& k, std::size_t rank, const F& field,
                                           const PackLayout& layout, const RingPtr& ring) {
  std::vector<std::vector<Term>> rows(rank);
  for (std::size_t i = 0; i < k.size(); ++i)
    rows.at(k.comps[i]).push_back(Term{field.to(k.coefs[i]), layout.unpack(k.monos[i])});
  std::vector<Polynomial> out;
  out.reserve(rank);
  for (auto& r : rows) out.push_back(Polynomial::from_terms(ring, std::move(r)));
  return out;
}

}  // namespace pdlab::detail
