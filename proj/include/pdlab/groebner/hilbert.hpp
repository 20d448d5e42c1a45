#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdlab/groebner/groebner.hpp"

namespace pdlab {

/// K-polynomial N(t) with Hilb_{R/I}(t) = N(t) / (1 - t)^num_vars.
struct HilbertNumerator {
  std::vector<std::int64_t> coefficients;  // coefficients[i] multiplies t^i
  std::size_t num_vars = 0;

  /// dim_K (R/I)_degree
  std::int64_t hilbert_function(int degree) const;
  std::string to_string() const;

  friend bool operator==(const HilbertNumerator&, const HilbertNumerator&) = default;
};

/// Numerator of the monomial ideal generated by the given monomials, by the
/// pivot splitting recursion.
HilbertNumerator hilbert_numerator(const std::vector<Monomial>& generators, std::size_t num_vars);
/// Numerator of R/I from the leading terms of a complete Groebner basis.
HilbertNumerator hilbert_numerator(const GroebnerBasis& basis);

}  // namespace pdlab
