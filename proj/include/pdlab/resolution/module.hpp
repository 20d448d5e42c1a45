#pragma once

#include <optional>
#include <vector>

#include "pdlab/groebner/ideal.hpp"

namespace pdlab {

/// F = sum_i R(-twists[i]).
struct GradedFreeModule {
  std::vector<int> twists;

  std::size_t rank() const { return twists.size(); }
  friend bool operator==(const GradedFreeModule&, const GradedFreeModule&) = default;
};

/// Graded map source -> target, stored by columns: column c is the image of
/// the c-th source generator, one entry per target generator. Entry (r, c) is
/// zero or homogeneous of degree source[c] - target[r].
class PresentationMatrix {
 public:
  PresentationMatrix(RingPtr ring, GradedFreeModule target, GradedFreeModule source,
                     std::vector<std::vector<Polynomial>> columns);

  /// 1 x n matrix of the ideal's generators, R^n -> R.
  static PresentationMatrix of_ideal(const IdealPresentation& ideal);

  const RingPtr& ring() const { return ring_; }
  const GradedFreeModule& target() const { return target_; }
  const GradedFreeModule& source() const { return source_; }
  std::size_t rows() const { return target_.rank(); }
  std::size_t cols() const { return source_.rank(); }
  const Polynomial& entry(std::size_t r, std::size_t c) const { return columns_[c][r]; }
  const std::vector<Polynomial>& column(std::size_t c) const { return columns_[c]; }
  bool is_zero() const;
  /// Whether some entry has a nonzero constant term.
  bool has_unit_entry() const;

 private:
  RingPtr ring_;
  GradedFreeModule target_;
  GradedFreeModule source_;
  std::vector<std::vector<Polynomial>> columns_;
};

/// a o b (b: U -> V, a: V -> W).
PresentationMatrix compose(const PresentationMatrix& a, const PresentationMatrix& b);

struct SyzygyOptions {
  std::size_t max_pairs = 5'000'000;
};

/// Minimal homogeneous generators of ker(m), as a matrix whose target is the
/// source of m. The kernel comes from a position-over-term Groebner basis of
/// the graph [m; identity].
PresentationMatrix syzygies(const PresentationMatrix& m, const SyzygyOptions& options = {});

/// Columns of m that form a minimal generating set of its image.
PresentationMatrix minimal_columns(const PresentationMatrix& m, const SyzygyOptions& options = {});

}  // namespace pdlab
