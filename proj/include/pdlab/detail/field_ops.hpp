#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "pdlab/poly/coefficient.hpp"

namespace pdlab::detail {

struct PrimeOps {
  using Elem = std::uint32_t;
  std::uint32_t p;
  Field f;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const { return modp::add(a, b, p); }
  Elem sub(Elem a, Elem b) const { return modp::sub(a, b, p); }
  Elem neg(Elem a) const { return modp::neg(a, p); }
  Elem mul(Elem a, Elem b) const { return modp::mul(a, b, p); }
  Elem inv(Elem a) const { return modp::inv(a, p); }
  /// a += b * c
  void fma(Elem& a, Elem b, Elem c) const {
    a = static_cast<Elem>((a + static_cast<std::uint64_t>(b) * c) % p);
  }

  Elem from(const Coefficient& c) const { return c.residue(); }
  Coefficient to(Elem a) const { return Coefficient(f, static_cast<long long>(a)); }
  Field field() const { return f; }
};

struct RationalOps {
  using Elem = mpq_class;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return 1 / a; }
  void fma(Elem& a, const Elem& b, const Elem& c) const { a += b * c; }

  Elem from(const Coefficient& c) const { return c.rational(); }
  Coefficient to(const Elem& a) const { return Coefficient(Field::rationals(), a); }
  Field field() const { return Field::rationals(); }
};

/// Calls fn(PrimeOps{p}) or fn(RationalOps{}) according to the field.
template <class Fn>
decltype(auto) dispatch_field(const Field& field, Fn&& fn) {
  if (field.is_prime()) return fn(PrimeOps{field.characteristic(), field});
  return fn(RationalOps{});
}

}  // namespace pdlab::detail
