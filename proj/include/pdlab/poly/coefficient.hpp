#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace pdlab {

/// Coefficient domain: a prime field F_p (p odd, below 2^31) or QQ.
class Field {
 public:
  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws ValidationError unless p is an odd prime below 2^31.
  static Field prime(std::uint32_t p = kDefaultPrime);
  static Field rationals() { return Field(0); }

  bool is_prime() const { return modulus_ != 0; }
  bool is_rational() const { return modulus_ == 0; }
  /// p for F_p, 0 for QQ.
  std::uint32_t characteristic() const { return modulus_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Coefficient;
  explicit Field(std::uint32_t modulus) : modulus_(modulus) {}
  std::uint32_t modulus_;
};

bool is_prime_number(std::uint64_t n);

/// A field element tagged with its domain. Prime-field values are kept in
/// [0, p); rationals are canonical (lowest terms, positive denominator).
class Coefficient {
 public:
  Coefficient(const Field& field, long long value);
  Coefficient(const Field& field, const mpq_class& value);
  static Coefficient zero(const Field& field) { return Coefficient(field, 0LL); }
  static Coefficient one(const Field& field) { return Coefficient(field, 1LL); }

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Prime-field residue; DomainError over QQ.
  std::uint32_t residue() const;
  /// Exact rational value; DomainError over F_p.
  const mpq_class& rational() const;
  /// Representative in (-p/2, p/2] for F_p, exact value for QQ.
  mpq_class lift() const;

  Coefficient operator-() const;
  Coefficient inverse() const;

  friend Coefficient operator+(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator-(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend Coefficient operator/(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b);

  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  explicit Coefficient(Residue r) : value_(r) {}
  explicit Coefficient(mpq_class q) : value_(std::move(q)) {}

  std::variant<Residue, mpq_class> value_;
};

namespace modp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
std::uint32_t reduce(long long v, std::uint32_t p);

}  // namespace modp

}  // namespace pdlab
