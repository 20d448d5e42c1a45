#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdlab/family/family.hpp"

namespace pdlab {

/// (x_1^d, ..., x_m^d, sum_j Z_j y_{j,1}, ..., sum_j Z_j y_{j,n}) where Z_1..Z_p
/// are the degree d-1 monomials in x_1..x_m in descending lex order. Variables
/// are x1..xm followed by y_{j,k} (k-major); with n = 1 they are named y1..yp.
IdealPresentation mccullough_ideal(int m, int n, int d, const Field& field = Field::prime());
/// p = C(m+d-2, m-1).
std::int64_t mccullough_p(int m, int d);
/// m + n p.
std::int64_t mccullough_pd(int m, int n, int d);
/// prod x_i^{d-1}; a socle element when n = 1.
Monomial mccullough_socle_witness(int m, int n, int d);
/// x_i^d.
std::vector<Monomial> mccullough_lemma_targets(int m, int n, int d);

/// (x^d, y^d, x w^{d-1} - y z^{d-1}) over K[w, x, y, z].
IdealPresentation caviglia_ideal(int d, const Field& field = Field::prime());
/// Image of the family witness and lemma targets under the
/// identification C_d = I_{2,(1,d-2)}.
Monomial caviglia_socle_witness(int d);
std::vector<Monomial> caviglia_lemma_targets(int d);

struct SubfamilyMatch {
  std::string name;  // "Caviglia C_3", "McCullough I_{3,1,3}"
  IdealPresentation target;
  /// Image of each family variable (signed variable of the target ring).
  std::vector<SignedVariable> substitution;
  std::string substitution_text;
  /// Reduced Groebner bases coincide after the substitution.
  bool verified = false;
};

/// Caviglia: g = 2, m = (1, d-2). McCullough: n = 1, m_1 = d-1 >= 1.
std::optional<SubfamilyMatch> identify_subfamily(const FamilyParams& params, const Field& field = Field::prime());

}  // namespace pdlab
