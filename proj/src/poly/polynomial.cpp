#include "pdlab/poly/polynomial.hpp"

#include <algorithm>

#include "pdlab/error.hpp"

namespace pdlab {

PolyRing::PolyRing(VariableTable vars, Field field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(std::move(order)) {
  if (!order_.permutation().empty() && order_.permutation().size() != vars_.size())
    throw DomainError("monomial order permutation does not match the variable count");
}

RingPtr with_field(const RingPtr& ring, Field field) {
  return PolyRing::make(ring->vars(), field, ring->order());
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return PolyRing::make(ring->vars(), ring->field(), std::move(order));
}

void require_same_ring(const Polynomial& p, const Polynomial& q) {
  if (p.ring() == q.ring()) return;
  if (p.ring()->field() != q.ring()->field())
    throw DomainError("mixed coefficient domains: " + p.ring()->field().name() + " and " +
                      q.ring()->field().name());
  if (!(*p.ring() == *q.ring())) throw DomainError("polynomials belong to different rings");
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order();
  for (const auto& t : terms) {
    if (t.mono.size() != ring->num_vars())
      throw DomainError("monomial length does not match the variable table");
    if (t.coef.field() != ring->field())
      throw DomainError("coefficient domain " + t.coef.field().name() + " does not match ring " +
                        ring->field().name());
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef = p.terms_.back().coef + t.coef;
      if (p.terms_.back().coef.is_zero()) p.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, long long value) {
  Monomial one(ring->num_vars());
  Coefficient c(ring->field(), value);
  return from_terms(std::move(ring), {Term{c, one}});
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->num_vars()) throw DomainError("variable index out of range");
  return monomial(ring, Monomial::variable(ring->num_vars(), index));
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial mono, long long coef) {
  Coefficient c(ring->field(), coef);
  return from_terms(std::move(ring), {Term{c, std::move(mono)}});
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of the zero polynomial");
  return terms_.front();
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return poly_scale(leading_coefficient().inverse(), *this);
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(*a.ring_ == *b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coef == b.terms_[i].coef))
      return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{-t.coef, t.mono});
  return r;
}

Polynomial poly_add(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  std::vector<Term> terms = p.terms();
  terms.insert(terms.end(), q.terms().begin(), q.terms().end());
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial poly_sub(const Polynomial& p, const Polynomial& q) { return poly_add(p, -q); }

Polynomial poly_mul(const Polynomial& p, const Polynomial& q) {
  require_same_ring(p, q);
  std::vector<Term> terms;
  terms.reserve(p.size() * q.size());
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) terms.push_back(Term{a.coef * b.coef, mono_mul(a.mono, b.mono)});
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial poly_scale(const Coefficient& c, const Polynomial& p) {
  if (c.field() != p.ring()->field())
    throw DomainError("mixed coefficient domains: " + c.field().name() + " and " +
                      p.ring()->field().name());
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back(Term{c * t.coef, t.mono});
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial poly_mul_term(const Polynomial& p, const Coefficient& c, const Monomial& m) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back(Term{c * t.coef, mono_mul(t.mono, m)});
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Polynomial poly_pow(const Polynomial& p, unsigned power) {
  Polynomial result = Polynomial::constant(p.ring(), 1);
  Polynomial base = p;
  while (power) {
    if (power & 1u) result = poly_mul(result, base);
    power >>= 1;
    if (power) base = poly_mul(base, base);
  }
  return result;
}

Polynomial substitute_signs(const Polynomial& p, const std::map<std::size_t, int>& signs) {
  for (const auto& [v, s] : signs) {
    if (v >= p.ring()->num_vars()) throw DomainError("sign map names a variable outside the ring");
    if (s != 1 && s != -1) throw DomainError("sign map values must be +1 or -1");
  }
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    int sign = 1;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      auto it = signs.find(v);
      if (it == signs.end())
        throw DomainError("sign map has no entry for variable " + p.ring()->vars().name(v));
      if (it->second < 0 && (t.mono[v] & 1)) sign = -sign;
    }
    terms.push_back(Term{sign > 0 ? t.coef : -t.coef, t.mono});
  }
  return Polynomial::from_terms(p.ring(), std::move(terms));
}

Homogeneity is_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return {Homogeneity::Kind::kAny, 0};
  const std::int64_t d = p.terms().front().mono.degree();
  for (const auto& t : p.terms())
    if (t.mono.degree() != d) return {Homogeneity::Kind::kNot, 0};
  return {Homogeneity::Kind::kDegree, d};
}

Polynomial map_variables(const Polynomial& p, const RingPtr& target,
                         const std::vector<SignedVariable>& images) {
  if (images.size() != p.ring()->num_vars())
    throw DomainError("variable map must give an image for every source variable");
  if (p.ring()->field() != target->field())
    throw DomainError("variable map between rings over different fields");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    std::vector<Exponent> e(target->num_vars(), 0);
    int sign = 1;
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      const auto& img = images[v];
      if (img.index >= target->num_vars()) throw DomainError("variable map image out of range");
      e[img.index] += t.mono[v];
      if (img.sign < 0 && (t.mono[v] & 1)) sign = -sign;
    }
    terms.push_back(Term{sign > 0 ? t.coef : -t.coef, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial change_field(const Polynomial& p, const RingPtr& target) {
  if (!(p.ring()->vars() == target->vars()))
    throw DomainError("change_field requires identical variable tables");
  std::vector<Term> terms;
  for (const auto& t : p.terms()) terms.push_back(Term{Coefficient(target->field(), t.coef.lift()), t.mono});
  return Polynomial::from_terms(target, std::move(terms));
}

}  // namespace pdlab
