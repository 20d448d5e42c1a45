#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "pdlab/groebner/ideal.hpp"

namespace pdlab {

namespace detail {
class BasisEngine;
}

/// Order in which S-pairs of one degree are reduced. Both give the same
/// reduced basis; the alternative exists to check exactly that.
enum class PairStrategy { kNormal, kReverse };

struct GroebnerOptions {
  /// Stop after this degree; the basis is then exact for elements of degree
  /// up to the limit.
  std::optional<int> degree_limit;
  std::size_t max_pairs = 5'000'000;
  PairStrategy strategy = PairStrategy::kNormal;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_discarded = 0;
};

/// Reduced Groebner basis (possibly truncated at a degree).
class GroebnerBasis {
 public:
  const RingPtr& ring() const { return ring_; }
  /// Monic, sorted by ascending leading monomial.
  const std::vector<Polynomial>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return true; }
  /// False when a degree limit cut off remaining pairs.
  bool complete() const { return complete_; }
  std::optional<int> degree_limit() const { return degree_limit_; }
  /// True for each source generator not implied by lower-degree data and the
  /// generators processed before it.
  const std::vector<bool>& minimal_generators() const { return minimal_; }
  const GroebnerStats& stats() const { return stats_; }
  std::vector<Monomial> leading_monomials() const;

  /// Whether membership/normal forms are exact for polynomials of this degree.
  bool exact_in_degree(std::int64_t degree) const {
    return complete_ || !degree_limit_ || degree <= *degree_limit_;
  }

 private:
  friend GroebnerBasis buchberger(const IdealPresentation&, const GroebnerOptions&);
  friend Polynomial normal_form(const Polynomial&, const GroebnerBasis&);

  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool complete_ = true;
  std::optional<int> degree_limit_;
  std::vector<bool> minimal_;
  GroebnerStats stats_;
  std::shared_ptr<const detail::BasisEngine> engine_;
};

/// Buchberger's algorithm (normal selection strategy, Gebauer-Moeller
/// criteria, degree by degree) followed by inter-reduction.
GroebnerBasis buchberger(const IdealPresentation& ideal, const GroebnerOptions& options = {});
GroebnerBasis buchberger(const IdealPresentation& ideal, const MonomialOrder& order,
                         const GroebnerOptions& options = {});

/// Remainder of multivariate division by the basis; divisors are tried in
/// basis order and the leading term is rewritten first. DomainError when the
/// basis is truncated below the degree of p.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& basis);
bool is_member(const Polynomial& p, const GroebnerBasis& basis);

}  // namespace pdlab
