#include "pdlab/poly/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "pdlab/error.hpp"

namespace pdlab {

namespace {

void require_same_size(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size())
    throw DomainError("monomials over different variable tables (" + std::to_string(a.size()) +
                      " vs " + std::to_string(b.size()) + " variables)");
}

}  // namespace

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) {
    if (e < 0) throw DomainError("negative exponent in monomial");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t num_vars, std::size_t index, Exponent power) {
  std::vector<Exponent> e(num_vars, 0);
  e.at(index) = power;
  return Monomial(std::move(e));
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    if (__builtin_add_overflow(a[i], b[i], &e[i]))
      throw OverflowError("exponent overflow in monomial product");
  return Monomial(std::move(e));
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  if (a.degree() > b.degree()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial mono_quotient(const Monomial& b, const Monomial& a) {
  if (!mono_divides(a, b)) throw DomainError("monomial quotient of non-divisible monomials");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = b[i] - a[i];
  return Monomial(std::move(e));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
  return Monomial(std::move(e));
}

Monomial mono_gcd(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
  return Monomial(std::move(e));
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  require_same_size(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

Monomial mono_pow(const Monomial& a, Exponent power) {
  if (power < 0) throw DomainError("negative power of a monomial");
  std::vector<Exponent> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i)
    if (__builtin_mul_overflow(a[i], power, &e[i]))
      throw OverflowError("exponent overflow in monomial power");
  return Monomial(std::move(e));
}

MonomialOrder::MonomialOrder(Kind kind, std::vector<std::size_t> permutation)
    : kind_(kind), permutation_(std::move(permutation)) {
  if (permutation_.empty()) return;
  std::vector<std::size_t> sorted = permutation_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw ValidationError("monomial order permutation is not a permutation");
  // The identity permutation is stored as empty so equal orders compare equal.
  if (std::is_sorted(permutation_.begin(), permutation_.end())) permutation_.clear();
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::kGrevlex: return "grevlex";
    case Kind::kLex: return "lex";
    case Kind::kGradedLex: return "glex";
  }
  return "?";
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  require_same_size(a, b);
  if (!permutation_.empty() && permutation_.size() != a.size())
    throw DomainError("monomial order permutation does not match the variable count");
  const std::size_t n = a.size();
  if (kind_ != Kind::kLex && a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  if (kind_ == Kind::kGrevlex) {
    for (std::size_t i = n; i-- > 0;) {
      std::size_t v = variable_at(i);
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = variable_at(i);
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

}  // namespace pdlab
