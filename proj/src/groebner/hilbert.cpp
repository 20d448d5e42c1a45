#include "pdlab/groebner/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "pdlab/error.hpp"

namespace pdlab {

namespace {

using Exps = std::vector<Exponent>;
using Series = std::vector<std::int64_t>;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("Hilbert numerator coefficient overflow");
  return r;
}

// a += sign * t^shift * b
void add_shifted(Series& a, const Series& b, std::size_t shift, int sign) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = checked_add(a[i + shift], sign * b[i]);
}

bool divides(const Exps& a, const Exps& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

std::int64_t deg(const Exps& a) {
  std::int64_t d = 0;
  for (auto e : a) d += e;
  return d;
}

// Keeps the minimal generators, sorted by degree.
void minimize(std::vector<Exps>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Exps& a, const Exps& b) { return deg(a) < deg(b); });
  std::vector<Exps> out;
  for (auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(std::move(g));
  }
  gens = std::move(out);
}

Series numerator(std::vector<Exps> gens, std::size_t n) {
  minimize(gens);
  if (gens.empty()) return {1};
  if (gens.size() == 1 && deg(gens[0]) == 0) return {0};

  // Occurrence count per variable.
  std::vector<std::size_t> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v)
      if (g[v] > 0) ++count[v];
  const auto best = static_cast<std::size_t>(std::max_element(count.begin(), count.end()) - count.begin());

  if (count[best] <= 1) {
    // Pairwise coprime generators: product of (1 - t^deg).
    Series s{1};
    for (const auto& g : gens) {
      Series next = s;
      add_shifted(next, s, static_cast<std::size_t>(deg(g)), -1);
      s = std::move(next);
    }
    return s;
  }

  std::vector<Exponent> exps;
  Exponent pure = 0;
  for (const auto& g : gens) {
    if (g[best] == 0) continue;
    exps.push_back(g[best]);
    if (deg(g) == g[best]) pure = g[best];
  }
  std::nth_element(exps.begin(), exps.begin() + exps.size() / 2, exps.end());
  Exponent e = exps[exps.size() / 2];
  if (pure > 0) e = std::min(e, pure - 1);
  e = std::max<Exponent>(e, 1);

  // N(I) = N(I + p) + t^e N(I : p) for the pivot p = x_best^e.
  std::vector<Exps> sum = gens;
  Exps pivot(n, 0);
  pivot[best] = e;
  sum.push_back(pivot);
  std::vector<Exps> colon = gens;
  for (auto& g : colon) g[best] = std::max<Exponent>(g[best] - e, 0);

  Series s = numerator(std::move(sum), n);
  add_shifted(s, numerator(std::move(colon), n), static_cast<std::size_t>(e), 1);
  return s;
}

// C(a, b) for 0 <= b, as 128-bit; 0 when a < b.
__int128 binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  __int128 r = 1;
  for (std::int64_t i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

std::int64_t HilbertNumerator::hilbert_function(int degree) const {
  if (degree < 0) return 0;
  const auto n = static_cast<std::int64_t>(num_vars);
  __int128 total = 0;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    const std::int64_t d = degree - static_cast<std::int64_t>(i);
    if (d < 0) break;
    const __int128 b = n == 0 ? (d == 0 ? 1 : 0) : binomial(d + n - 1, n - 1);
    total += b * coefficients[i];
  }
  if (total > INT64_MAX || total < INT64_MIN) throw OverflowError("Hilbert function value overflow");
  return static_cast<std::int64_t>(total);
}

std::string HilbertNumerator::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    std::int64_t c = coefficients[i];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const std::int64_t a = c < 0 ? -c : c;
    if (i == 0 || a != 1) out << a;
    if (i > 0) out << (a != 1 ? "*" : "") << "t" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : out.str();
}

HilbertNumerator hilbert_numerator(const std::vector<Monomial>& generators, std::size_t num_vars) {
  std::vector<Exps> gens;
  for (const auto& m : generators) {
    if (m.size() != num_vars) throw DomainError("monomial length does not match the number of variables");
    gens.emplace_back(m.exponents().begin(), m.exponents().end());
  }
  HilbertNumerator h{numerator(std::move(gens), num_vars), num_vars};
  while (!h.coefficients.empty() && h.coefficients.back() == 0) h.coefficients.pop_back();
  return h;
}

HilbertNumerator hilbert_numerator(const GroebnerBasis& basis) {
  if (!basis.complete())
    throw DomainError("Hilbert series needs a complete Groebner basis");
  return hilbert_numerator(basis.leading_monomials(), basis.ring()->num_vars());
}

}  // namespace pdlab
