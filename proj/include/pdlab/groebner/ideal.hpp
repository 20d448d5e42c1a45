#pragma once

#include <vector>

#include "pdlab/poly/polynomial.hpp"

namespace pdlab {

/// Homogeneous ideal given by generators over a fixed ring.
class IdealPresentation {
 public:
  /// Throws DomainError for zero, non-homogeneous, or foreign generators.
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t size() const { return generators_.size(); }
  std::vector<std::int64_t> generator_degrees() const;

  /// Same generators over another field or monomial order.
  IdealPresentation with_field(const Field& field) const;
  IdealPresentation with_order(const MonomialOrder& order) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> generators_;
};

}  // namespace pdlab
