#include "pdlab/groebner/ideal.hpp"

#include "pdlab/error.hpp"
#include "pdlab/poly/text.hpp"

namespace pdlab {

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (!(*g.ring() == *ring_)) throw DomainError("generator belongs to a different ring");
    if (g.is_zero()) throw DomainError("zero generator in ideal presentation");
    if (is_homogeneous(g).kind != Homogeneity::Kind::kDegree)
      throw DomainError("generator is not homogeneous: " + to_string(g));
  }
}

std::vector<std::int64_t> IdealPresentation::generator_degrees() const {
  std::vector<std::int64_t> d;
  for (const auto& g : generators_) d.push_back(g.total_degree());
  return d;
}

IdealPresentation IdealPresentation::with_field(const Field& field) const {
  RingPtr target = pdlab::with_field(ring_, field);
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(change_field(g, target));
  return IdealPresentation(target, std::move(gens));
}

IdealPresentation IdealPresentation::with_order(const MonomialOrder& order) const {
  RingPtr target = pdlab::with_order(ring_, order);
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(Polynomial::from_terms(target, g.terms()));
  return IdealPresentation(target, std::move(gens));
}

}  // namespace pdlab
