#pragma once

#include "pdlab/detail/field_ops.hpp"
#include "pdlab/detail/packed.hpp"
#include "pdlab/poly/polynomial.hpp"

namespace pdlab::detail {

/// Calls fn(field_ops, std::integral_constant<size_t, W>, layout) for the
/// ring's coefficient field and packed width.
template <class Fn>
void dispatch_ring(const PolyRing& ring, Fn&& fn) {
  const PackLayout layout(ring.order(), ring.num_vars());
  dispatch_field(ring.field(), [&](auto field) {
    dispatch_width(layout.words(), [&](auto width) { fn(field, width, layout); });
  });
}

}  // namespace pdlab::detail
