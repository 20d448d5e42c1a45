#include "pdlab/family/family.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <limits>
#include <numeric>

#include "pdlab/error.hpp"
#include "pdlab/poly/text.hpp"

namespace pdlab {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("pd formula overflows int64");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("pd formula overflows int64");
  return r;
}

// C(n, k) with overflow checks; multiplicative form keeps partial results integral.
std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    std::int64_t g = std::gcd(r, i);
    r = checked_mul(r / g, (n - k + i) / (i / g));
  }
  return r;
}

// All vectors of length g with entries in [0, bound] summing to total,
// in descending lex order.
std::vector<std::vector<int>> columns(int g, int total, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(g, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == g - 1) {
      if (left <= bound) {
        v[pos] = left;
        out.push_back(v);
      }
      return;
    }
    for (int a = std::min(left, bound); a >= 0; --a) {
      v[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  if (total >= 0 && bound >= 0) rec(rec, 0, total);
  return out;
}

Monomial family_monomial(const VariableTable& vars, const ExponentMatrix& a) {
  std::vector<Exponent> e(vars.size(), 0);
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (std::size_t j = 0; j < a.rows(); ++j)
      e[*vars.index_of_x(static_cast<int>(j + 1), static_cast<int>(k + 1))] = static_cast<Exponent>(a.at(j, k));
  return Monomial(std::move(e));
}

}  // namespace

void FamilyParams::validate() const {
  if (g < 2) throw ValidationError("g >= 2 required (got g = " + std::to_string(g) + ")");
  const int n = this->n();
  if (n < 1) throw ValidationError("n >= 1 required (empty m)");
  if (m[n - 1] < 0) throw ValidationError("m_n >= 0 required");
  if (n >= 2 && m[n - 2] < 1) throw ValidationError("m_{n-1} >= 1 required");
  for (int i = 0; i + 2 < n; ++i)
    if (m[i] < 2) throw ValidationError("m_" + std::to_string(i + 1) + " >= 2 required");
  // Exponents must fit the monomial representation.
  std::int64_t d = 1;
  for (int v : m) d += v;
  if (d > 10'000) throw ValidationError("generator degree too large");
}

FamilyParams FamilyParams::parse(std::string_view text) {
  auto fail = [&](const std::string& why) -> FamilyParams {
    throw ParseError("bad parameters '" + std::string(text) + "': " + why + " (expected g:(m1,...,mn))");
  };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto number = [&](std::string_view s) {
    s = trim(s);
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size()) fail("'" + std::string(s) + "' is not an integer");
    return v;
  };
  auto colon = text.find(':');
  if (colon == std::string_view::npos) return fail("missing ':'");
  FamilyParams out;
  out.g = number(text.substr(0, colon));
  auto rest = trim(text.substr(colon + 1));
  if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') return fail("m must be parenthesised");
  rest = rest.substr(1, rest.size() - 2);
  if (trim(rest).empty()) return fail("m is empty");
  for (std::size_t pos = 0;;) {
    auto comma = rest.find(',', pos);
    out.m.push_back(number(rest.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  out.validate();
  return out;
}

std::string FamilyParams::to_string() const {
  std::string s = std::to_string(g) + ":(";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}

DerivedConstants derived_constants(const FamilyParams& params) {
  params.validate();
  const int n = params.n();
  DerivedConstants c;
  c.M.resize(n);
  c.d.resize(n);
  int tail = 1;
  for (int k = n - 1; k >= 0; --k) {
    c.M[k] = k == n - 1 ? params.m[k] : params.m[k] - 1;
    tail += params.m[k];
    c.d[k] = tail;
  }
  return c;
}

std::vector<ExponentMatrix> enumerate_A(const FamilyParams& params, int k) {
  const auto c = derived_constants(params);
  const int g = params.g, n = params.n();
  if (k < 0 || k > n) throw DomainError("enumerate_A: k must lie in 0..n");
  std::vector<std::vector<std::vector<int>>> cols;
  for (int kk = 0; kk < k; ++kk) cols.push_back(columns(g, params.m[kk], c.M[kk]));

  std::vector<ExponentMatrix> out;
  std::vector<std::size_t> pick(k, 0);
  for (const auto& cs : cols)
    if (cs.empty()) return out;
  while (true) {
    ExponentMatrix a(g, n, std::vector<int>(static_cast<std::size_t>(g) * n, 0));
    for (int kk = 0; kk < k; ++kk)
      for (int j = 0; j < g; ++j) a.at(j, kk) = cols[kk][pick[kk]][j];
    out.push_back(std::move(a));
    int pos = k - 1;
    while (pos >= 0 && ++pick[pos] == cols[pos].size()) pick[pos--] = 0;
    if (pos < 0) break;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

VariableTable family_variables(const FamilyParams& params) {
  return VariableTable::family(params.g, params.n(), enumerate_A(params, params.n()));
}

RingPtr family_ring(const FamilyParams& params, const Field& field) {
  return PolyRing::make(family_variables(params), field);
}

IdealPresentation build_ideal(const FamilyParams& params, const Field& field) {
  const auto c = derived_constants(params);
  const int g = params.g, n = params.n();
  RingPtr ring = family_ring(params, field);
  const auto& vars = ring->vars();
  const std::size_t nv = vars.size();
  auto x = [&](int j, int k) { return *vars.index_of_x(j, k); };

  std::vector<Polynomial> gens;
  for (int j = 1; j <= g; ++j)
    gens.push_back(Polynomial::monomial(ring, Monomial::variable(nv, x(j, 1), static_cast<Exponent>(c.d[0]))));

  std::vector<Term> terms;
  const Coefficient one = Coefficient::one(field);
  for (int k = 1; k < n; ++k)
    for (const auto& a : enumerate_A(params, k - 1)) {
      Monomial xa = family_monomial(vars, a);
      for (int j = 1; j <= g; ++j) {
        Monomial t = mono_mul(xa, Monomial::variable(nv, x(j, k), static_cast<Exponent>(params.m[k - 1])));
        t = mono_mul(t, Monomial::variable(nv, x(j, k + 1), static_cast<Exponent>(c.d[k])));
        terms.push_back({one, std::move(t)});
      }
    }
  for (const auto& b : enumerate_A(params, n))
    terms.push_back({one, mono_mul(family_monomial(vars, b), Monomial::variable(nv, *vars.index_of_y(b)))});
  gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  return IdealPresentation(ring, std::move(gens));
}

Monomial socle_witness(const FamilyParams& params) {
  const auto c = derived_constants(params);
  const auto vars = family_variables(params);
  ExponentMatrix t(params.g, params.n(), std::vector<int>(static_cast<std::size_t>(params.g) * params.n(), 0));
  for (int k = 0; k < params.n(); ++k)
    for (int j = 0; j < params.g; ++j) t.at(j, k) = c.d[k] - 1;
  return family_monomial(vars, t);
}

std::vector<Monomial> lemma_targets(const FamilyParams& params, int k) {
  const auto c = derived_constants(params);
  const int g = params.g, n = params.n();
  if (k < 0 || k >= n) throw DomainError("lemma_targets: k must lie in 0..n-1");
  const auto vars = family_variables(params);
  ExponentMatrix e(g, n, std::vector<int>(static_cast<std::size_t>(g) * n, 0));
  for (int kk = 0; kk < k; ++kk)
    for (int j = 0; j < g; ++j) e.at(j, kk) = c.d[kk] - 1;
  Monomial base = family_monomial(vars, e);
  std::vector<Monomial> out;
  for (int j = 1; j <= g; ++j)
    out.push_back(mono_mul(base, Monomial::variable(vars.size(), *vars.index_of_x(j, k + 1),
                                                    static_cast<Exponent>(c.d[k]))));
  return out;
}

std::vector<Monomial> lemma_targets(const FamilyParams& params) {
  std::vector<Monomial> out;
  for (int k = 0; k < params.n(); ++k) {
    auto t = lemma_targets(params, k);
    out.insert(out.end(), t.begin(), t.end());
  }
  return out;
}

std::int64_t pd_formula(const FamilyParams& params) {
  params.validate();
  const int g = params.g, n = params.n();
  std::int64_t prod = 1;
  for (int i = 0; i + 1 < n; ++i) prod = checked_mul(prod, binomial(params.m[i] + g - 1, g - 1) - g);
  prod = checked_mul(prod, binomial(params.m[n - 1] + g - 1, g - 1));
  return checked_add(prod, checked_mul(g, n));
}

namespace {

// Number of vectors in [0, bound]^parts with the given sum, by dynamic
// programming over the parts.
std::int64_t bounded_compositions(int parts, int sum, int bound) {
  std::vector<std::int64_t> ways(sum + 1, 0);
  ways[0] = 1;
  for (int p = 0; p < parts; ++p) {
    std::vector<std::int64_t> next(sum + 1, 0);
    for (int s = 0; s <= sum; ++s) {
      if (!ways[s]) continue;
      for (int e = 0; e <= bound && s + e <= sum; ++e)
        if (__builtin_add_overflow(next[s + e], ways[s], &next[s + e]))
          throw OverflowError("|A_k| overflows int64");
    }
    ways = std::move(next);
  }
  return ways[sum];
}

}  // namespace

std::int64_t count_A(const FamilyParams& params, int k) {
  params.validate();
  if (k < 0 || k > params.n()) throw DomainError("count_A: k must lie in 0..n");
  const auto c = derived_constants(params);
  std::int64_t r = 1;
  for (int kk = 0; kk < k; ++kk)
    if (__builtin_mul_overflow(r, bounded_compositions(params.g, params.m[kk], c.M[kk]), &r))
      throw OverflowError("|A_k| overflows int64");
  return r;
}

std::int64_t variable_count(const FamilyParams& params) {
  std::int64_t r = static_cast<std::int64_t>(params.g) * params.n();
  if (__builtin_add_overflow(r, count_A(params, params.n()), &r)) throw OverflowError("variable count overflows int64");
  return r;
}

int verification_degree(const FamilyParams& params) {
  std::int64_t deg = socle_witness(params).degree() + 1;
  for (const auto& t : lemma_targets(params)) deg = std::max(deg, t.degree());
  return static_cast<int>(deg);
}

SocleReport verify_socle(const Monomial& witness, const GroebnerBasis& basis, std::string label) {
  const RingPtr& ring = basis.ring();
  if (witness.size() != ring->num_vars()) throw DomainError("witness lives in a different ring");
  SocleReport r;
  r.label = std::move(label);
  r.witness = witness;
  r.witness_text = to_string(witness, ring->vars());
  r.not_in_ideal = !is_member(Polynomial::monomial(ring, witness), basis);
  bool all = true;
  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    Monomial m = mono_mul(witness, Monomial::variable(ring->num_vars(), v));
    bool in = is_member(Polynomial::monomial(ring, m), basis);
    r.killed_by.emplace_back(ring->vars().name(v), in);
    all = all && in;
  }
  r.depth_zero = r.not_in_ideal && all;
  r.implied_pd = static_cast<std::int64_t>(ring->num_vars());
  return r;
}

SocleReport verify_socle(const FamilyParams& params, const GroebnerBasis& basis) {
  return verify_socle(socle_witness(params), basis, params.to_string());
}

LemmaReport verify_membership(const std::vector<Monomial>& targets, const GroebnerBasis& basis) {
  LemmaReport r;
  r.targets = targets;
  for (const auto& t : targets)
    if (!is_member(Polynomial::monomial(basis.ring(), t), basis)) r.counterexamples.push_back(t);
  r.holds = r.counterexamples.empty();
  return r;
}

LemmaReport verify_lemma(const FamilyParams& params, const GroebnerBasis& basis) {
  return verify_membership(lemma_targets(params), basis);
}

FamilyParams three_generator_preset(int p) {
  if (p < 2) throw ValidationError("p >= 2 required");
  FamilyParams f;
  f.g = 2;
  f.m.assign(p - 1, p + 1);
  f.m.push_back(0);
  f.validate();
  return f;
}

FamilyParams odd_generator_preset(int p) {
  if (p < 1) throw ValidationError("p >= 1 required");
  FamilyParams f;
  f.g = 2 * p;
  f.m = {p, p};
  f.validate();
  return f;
}

}  // namespace pdlab
