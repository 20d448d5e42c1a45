#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pdlab {

using Exponent = std::int32_t;

/// Dense exponent vector over a fixed variable table, with cached degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);
  Monomial(std::initializer_list<Exponent> exps) : Monomial(std::vector<Exponent>(exps)) {}

  static Monomial variable(std::size_t num_vars, std::size_t index, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  std::int64_t degree() const { return degree_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
  std::int64_t degree_ = 0;
};

/// Exponentwise sum. OverflowError when an exponent leaves the int32 range,
/// DomainError when the lengths differ.
Monomial mono_mul(const Monomial& a, const Monomial& b);
/// a | b, i.e. a <= b exponentwise.
bool mono_divides(const Monomial& a, const Monomial& b);
/// b / a; DomainError unless a | b.
Monomial mono_quotient(const Monomial& b, const Monomial& a);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
Monomial mono_gcd(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);
/// Raises every exponent to the given power; OverflowError on overflow.
Monomial mono_pow(const Monomial& a, Exponent power);

/// Multiplicative total order on monomials. The optional permutation lists
/// variable indices from most to least significant; identity when empty.
class MonomialOrder {
 public:
  enum class Kind { kGrevlex, kLex, kGradedLex };

  MonomialOrder() = default;
  explicit MonomialOrder(Kind kind, std::vector<std::size_t> permutation = {});

  static MonomialOrder grevlex() { return MonomialOrder(Kind::kGrevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::kLex); }
  static MonomialOrder graded_lex() { return MonomialOrder(Kind::kGradedLex); }

  Kind kind() const { return kind_; }
  const std::vector<std::size_t>& permutation() const { return permutation_; }
  /// Variable index at significance position i (0 = most significant).
  std::size_t variable_at(std::size_t i) const {
    return permutation_.empty() ? i : permutation_[i];
  }
  std::string name() const;

  /// Negative, zero or positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  Kind kind_ = Kind::kGrevlex;
  std::vector<std::size_t> permutation_;
};

}  // namespace pdlab
