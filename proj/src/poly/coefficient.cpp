#include "pdlab/poly/coefficient.hpp"

#include "pdlab/error.hpp"

namespace pdlab {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint32_t p) {
  if (p == 2 || p >= (1u << 31) || !is_prime_number(p))
    throw ValidationError("field characteristic must be an odd prime below 2^31, got " +
                          std::to_string(p));
  return Field(p);
}

std::string Field::name() const {
  return is_prime() ? "F_" + std::to_string(modulus_) : std::string("QQ");
}

namespace modp {

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DomainError("inverse of zero");
  long long t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t reduce(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace modp

Coefficient::Coefficient(const Field& field, long long value) {
  if (field.is_prime())
    value_ = Residue{modp::reduce(value, field.characteristic()), field.characteristic()};
  else
    value_ = mpq_class(static_cast<long>(value));
}

Coefficient::Coefficient(const Field& field, const mpq_class& value) {
  if (field.is_rational()) {
    mpq_class q = value;
    q.canonicalize();
    value_ = std::move(q);
    return;
  }
  const std::uint32_t p = field.characteristic();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (num < 0) num += p;
  if (den == 0) throw DomainError("denominator vanishes modulo " + std::to_string(p));
  value_ = Residue{modp::mul(static_cast<std::uint32_t>(num.get_ui()),
                             modp::inv(static_cast<std::uint32_t>(den.get_ui()), p), p),
                   p};
}

Field Coefficient::field() const {
  if (auto* r = std::get_if<Residue>(&value_)) return Field(r->modulus);
  return Field::rationals();
}

bool Coefficient::is_zero() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Coefficient::is_one() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Coefficient::residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw DomainError("residue requested for a rational coefficient");
}

const mpq_class& Coefficient::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw DomainError("rational value requested for a prime-field coefficient");
}

mpq_class Coefficient::lift() const {
  if (auto* r = std::get_if<Residue>(&value_)) {
    long long v = r->value;
    if (v > static_cast<long long>(r->modulus / 2)) v -= r->modulus;
    return mpq_class(static_cast<long>(v));
  }
  return std::get<mpq_class>(value_);
}

namespace {

void require_same(const Coefficient& a, const Coefficient& b) {
  if (a.field() != b.field())
    throw DomainError("mixed coefficient domains: " + a.field().name() + " and " +
                      b.field().name());
}

}  // namespace

Coefficient Coefficient::operator-() const {
  if (auto* r = std::get_if<Residue>(&value_))
    return Coefficient(Residue{modp::neg(r->value, r->modulus), r->modulus});
  return Coefficient(mpq_class(-std::get<mpq_class>(value_)));
}

Coefficient Coefficient::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (auto* r = std::get_if<Residue>(&value_))
    return Coefficient(Residue{modp::inv(r->value, r->modulus), r->modulus});
  return Coefficient(mpq_class(1 / std::get<mpq_class>(value_)));
}

Coefficient operator+(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  if (auto* r = std::get_if<Coefficient::Residue>(&a.value_)) {
    auto s = std::get<Coefficient::Residue>(b.value_);
    return Coefficient(Coefficient::Residue{modp::add(r->value, s.value, r->modulus), r->modulus});
  }
  return Coefficient(mpq_class(std::get<mpq_class>(a.value_) + std::get<mpq_class>(b.value_)));
}

Coefficient operator-(const Coefficient& a, const Coefficient& b) { return a + (-b); }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  if (auto* r = std::get_if<Coefficient::Residue>(&a.value_)) {
    auto s = std::get<Coefficient::Residue>(b.value_);
    return Coefficient(Coefficient::Residue{modp::mul(r->value, s.value, r->modulus), r->modulus});
  }
  return Coefficient(mpq_class(std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_)));
}

Coefficient operator/(const Coefficient& a, const Coefficient& b) {
  require_same(a, b);
  return a * b.inverse();
}

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (!(a.field() == b.field())) return false;
  if (auto* r = std::get_if<Coefficient::Residue>(&a.value_))
    return r->value == std::get<Coefficient::Residue>(b.value_).value;
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Coefficient::to_string() const { return lift().get_str(); }

}  // namespace pdlab
