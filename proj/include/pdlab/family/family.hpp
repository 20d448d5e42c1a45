#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "pdlab/groebner/groebner.hpp"

namespace pdlab {

/// Parameters (g; m_1, ..., m_n) of the ideal I_{g,(m_1,...,m_n)}.
struct FamilyParams {
  int g = 2;
  std::vector<int> m;

  int n() const { return static_cast<int>(m.size()); }
  /// Throws ValidationError naming the first violated constraint:
  /// g >= 2, n >= 1, m_n >= 0, m_{n-1} >= 1, m_i >= 2 for i <= n-2.
  void validate() const;
  /// "g:(m1,...,mn)", e.g. "2:(2,2,2)". ParseError on bad syntax;
  /// the result is validated.
  static FamilyParams parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

struct DerivedConstants {
  std::vector<int> M;  // M_k: column bound (m_k - 1 for k < n, m_n for k = n)
  std::vector<int> d;  // d_k = m_k + ... + m_n + 1
  int degree() const { return d.front(); }
};

DerivedConstants derived_constants(const FamilyParams& params);

/// The set A_k (k = 0..n) of g x n matrices: for k' <= k column k' has
/// entries in [0, M_k'] summing to m_k', later columns are zero. Returned in
/// the ring's y-variable order (descending lex on row-major entries).
std::vector<ExponentMatrix> enumerate_A(const FamilyParams& params, int k);

/// x_{j,k} sorted by (k, j), then y_B for B in A_n.
VariableTable family_variables(const FamilyParams& params);
RingPtr family_ring(const FamilyParams& params, const Field& field = Field::prime());

/// (x_{1,1}^d, ..., x_{g,1}^d, f) with
/// f = sum_{k<n} sum_{A in A_{k-1}} sum_j X^A x_{j,k}^{m_k} x_{j,k+1}^{d_{k+1}}
///     + sum_{B in A_n} X^B y_B.
IdealPresentation build_ideal(const FamilyParams& params, const Field& field = Field::prime());

/// X^T with t_{j,k} = d_k - 1, over family_ring(params).
Monomial socle_witness(const FamilyParams& params);

/// X^{E_k} x_{j,k+1}^{d_{k+1}} for k = 0..n-1 and j = 1..g (in that order),
/// where e_{j',k'} = d_{k'} - 1 for k' <= k and 0 otherwise.
std::vector<Monomial> lemma_targets(const FamilyParams& params);
std::vector<Monomial> lemma_targets(const FamilyParams& params, int k);

/// prod_{i<n} (C(m_i+g-1, g-1) - g) * C(m_n+g-1, g-1) + g*n.
/// OverflowError if the value leaves int64.
std::int64_t pd_formula(const FamilyParams& params);
/// |A_k| by counting bounded column compositions, without enumerating.
/// OverflowError if the value leaves int64.
std::int64_t count_A(const FamilyParams& params, int k);
/// g*n + |A_n|.
std::int64_t variable_count(const FamilyParams& params);

/// Smallest degree limit for which a truncated basis decides every
/// membership question asked by verify_socle and verify_lemma.
int verification_degree(const FamilyParams& params);

/// Depth-zero certificate: S is not in I, and every variable multiplies S
/// into I. By Auslander-Buchsbaum this forces pd(R/I) = #variables.
struct SocleReport {
  std::string label;
  Monomial witness;
  std::string witness_text;
  bool not_in_ideal = false;
  std::vector<std::pair<std::string, bool>> killed_by;
  bool depth_zero = false;
  std::int64_t implied_pd = 0;
};

SocleReport verify_socle(const Monomial& witness, const GroebnerBasis& basis, std::string label = {});
SocleReport verify_socle(const FamilyParams& params, const GroebnerBasis& basis);

struct LemmaReport {
  bool holds = false;
  std::vector<Monomial> targets;
  std::vector<Monomial> counterexamples;
};

LemmaReport verify_membership(const std::vector<Monomial>& targets, const GroebnerBasis& basis);
LemmaReport verify_lemma(const FamilyParams& params, const GroebnerBasis& basis);

/// Parameters realising the three-generator bound in degree p^2:
/// g = 2, m = (p+1 repeated p-1 times, 0). Requires p >= 2.
FamilyParams three_generator_preset(int p);
/// Parameters realising 2p+1 generators in degree 2p+1: g = 2p, m = (p, p).
FamilyParams odd_generator_preset(int p);

}  // namespace pdlab
