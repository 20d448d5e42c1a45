#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "pdlab/poly/coefficient.hpp"
#include "pdlab/poly/monomial.hpp"
#include "pdlab/poly/variables.hpp"

namespace pdlab {

/// Polynomial ring K[vars] with a fixed monomial order.
class PolyRing {
 public:
  PolyRing(VariableTable vars, Field field, MonomialOrder order = MonomialOrder::grevlex());

  static std::shared_ptr<const PolyRing> make(VariableTable vars, Field field = Field::prime(),
                                              MonomialOrder order = MonomialOrder::grevlex()) {
    return std::make_shared<const PolyRing>(std::move(vars), field, std::move(order));
  }

  const VariableTable& vars() const { return vars_; }
  std::size_t num_vars() const { return vars_.size(); }
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.field_ == b.field_ && a.order_ == b.order_ && a.vars_ == b.vars_;
  }

 private:
  VariableTable vars_;
  Field field_;
  MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

/// Copies of the ring with another field or order (same variables).
RingPtr with_field(const RingPtr& ring, Field field);
RingPtr with_order(const RingPtr& ring, MonomialOrder order);

struct Term {
  Coefficient coef;
  Monomial mono;
};

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients, no repeated monomials. The zero polynomial has no terms.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Sorts, merges equal monomials and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  static Polynomial constant(RingPtr ring, long long value);
  static Polynomial variable(RingPtr ring, std::size_t index);
  static Polynomial monomial(RingPtr ring, Monomial mono, long long coef = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().mono; }
  const Coefficient& leading_coefficient() const { return leading_term().coef; }
  /// Largest total degree of a term; -1 for zero.
  std::int64_t total_degree() const;
  /// Divides by the leading coefficient; zero stays zero.
  Polynomial monic() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial operator-() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

void require_same_ring(const Polynomial& p, const Polynomial& q);

Polynomial poly_add(const Polynomial& p, const Polynomial& q);
Polynomial poly_sub(const Polynomial& p, const Polynomial& q);
Polynomial poly_mul(const Polynomial& p, const Polynomial& q);
Polynomial poly_scale(const Coefficient& c, const Polynomial& p);
/// c * m * p
Polynomial poly_mul_term(const Polynomial& p, const Coefficient& c, const Monomial& m);
Polynomial poly_pow(const Polynomial& p, unsigned power);

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return poly_add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return poly_sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return poly_mul(p, q); }

/// Replaces each variable v by signs[v] * v. Every variable in the support
/// must have a sign of +1 or -1 (DomainError otherwise).
Polynomial substitute_signs(const Polynomial& p, const std::map<std::size_t, int>& signs);

/// Result of a homogeneity test: not homogeneous, homogeneous of a single
/// degree, or the zero polynomial (homogeneous of every degree).
struct Homogeneity {
  enum class Kind { kNot, kDegree, kAny };
  Kind kind = Kind::kNot;
  std::int64_t degree = 0;

  explicit operator bool() const { return kind != Kind::kNot; }
};

Homogeneity is_homogeneous(const Polynomial& p);

/// Image of a variable under a ring map that sends variables to signed
/// variables of the target ring.
struct SignedVariable {
  std::size_t index;
  int sign = 1;
};

Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                         const std::vector<SignedVariable>& images);

/// Reinterprets the coefficients in another field (integers/rationals are
/// reduced modulo p, residues are lifted to symmetric representatives).
Polynomial change_field(const Polynomial& p, const RingPtr& target);

}  // namespace pdlab
