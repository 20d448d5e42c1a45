#include "pdlab/family/special.hpp"

#include "pdlab/error.hpp"
#include "pdlab/groebner/groebner.hpp"

namespace pdlab {

namespace {

// Exponent vectors of degree `deg` in m variables, descending lex.
std::vector<std::vector<Exponent>> monomials_desc(int m, int deg) {
  std::vector<std::vector<Exponent>> out;
  std::vector<Exponent> v(m, 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == m - 1) {
      v[pos] = left;
      out.push_back(v);
      return;
    }
    for (int a = left; a >= 0; --a) {
      v[pos] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, deg);
  return out;
}

void check_mccullough(int m, int n, int d) {
  if (m < 1) throw ValidationError("m >= 1 required");
  if (n < 0) throw ValidationError("n >= 0 required");
  if (d < 2) throw ValidationError("d >= 2 required");
  if (mccullough_pd(m, n, d) > 100'000) throw ValidationError("McCullough ring too large");
}

VariableTable mccullough_vars(int m, int n, int d) {
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
  const auto p = mccullough_p(m, d);
  for (int k = 1; k <= n; ++k)
    for (std::int64_t j = 1; j <= p; ++j)
      names.push_back(n == 1 ? "y" + std::to_string(j) : "y[" + std::to_string(j) + "," + std::to_string(k) + "]");
  return VariableTable::named(names);
}

RingPtr caviglia_ring(const Field& field) { return PolyRing::make(VariableTable::named({"w", "x", "y", "z"}), field); }

// Family variables x[1,1], x[2,1], x[1,2], x[2,2] -> x, y, w, z.
const std::vector<std::size_t> kCavigliaRename{1, 2, 0, 3};

bool same_ideal(const IdealPresentation& a, const IdealPresentation& b) {
  return buchberger(a).elements() == buchberger(b).elements();
}

IdealPresentation substitute(const IdealPresentation& ideal, const RingPtr& target,
                             const std::vector<SignedVariable>& images) {
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(map_variables(g, target, images));
  return IdealPresentation(target, std::move(gens));
}

std::string describe(const VariableTable& from, const VariableTable& to, const std::vector<SignedVariable>& images) {
  std::string s;
  for (std::size_t v = 0; v < images.size(); ++v) {
    if (v) s += ", ";
    s += from.name(v) + " -> " + (images[v].sign < 0 ? "-" : "") + to.name(images[v].index);
  }
  return s;
}

}  // namespace

std::int64_t mccullough_p(int m, int d) {
  // C(m + d - 2, m - 1)
  std::int64_t r = 1;
  for (int i = 1; i <= m - 1; ++i) {
    r = r * (d - 1 + i) / i;
    if (r > (std::int64_t{1} << 40)) throw OverflowError("McCullough p too large");
  }
  return r;
}

std::int64_t mccullough_pd(int m, int n, int d) { return m + static_cast<std::int64_t>(n) * mccullough_p(m, d); }

IdealPresentation mccullough_ideal(int m, int n, int d, const Field& field) {
  check_mccullough(m, n, d);
  RingPtr ring = PolyRing::make(mccullough_vars(m, n, d), field);
  const std::size_t nv = ring->num_vars();
  std::vector<Polynomial> gens;
  for (int i = 0; i < m; ++i)
    gens.push_back(Polynomial::monomial(ring, Monomial::variable(nv, i, static_cast<Exponent>(d))));
  const auto z = monomials_desc(m, d - 1);
  const Coefficient one = Coefficient::one(field);
  for (int k = 0; k < n; ++k) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < z.size(); ++j) {
      std::vector<Exponent> e(nv, 0);
      std::copy(z[j].begin(), z[j].end(), e.begin());
      e[m + k * z.size() + j] = 1;
      terms.push_back({one, Monomial(std::move(e))});
    }
    gens.push_back(Polynomial::from_terms(ring, std::move(terms)));
  }
  return IdealPresentation(ring, std::move(gens));
}

Monomial mccullough_socle_witness(int m, int n, int d) {
  check_mccullough(m, n, d);
  std::vector<Exponent> e(mccullough_pd(m, n, d), 0);
  for (int i = 0; i < m; ++i) e[i] = d - 1;
  return Monomial(std::move(e));
}

std::vector<Monomial> mccullough_lemma_targets(int m, int n, int d) {
  check_mccullough(m, n, d);
  std::vector<Monomial> out;
  for (int i = 0; i < m; ++i)
    out.push_back(Monomial::variable(mccullough_pd(m, n, d), i, static_cast<Exponent>(d)));
  return out;
}

IdealPresentation caviglia_ideal(int d, const Field& field) {
  if (d < 2) throw ValidationError("d >= 2 required");
  RingPtr ring = caviglia_ring(field);
  const Exponent e = static_cast<Exponent>(d);
  const Coefficient one = Coefficient::one(field);
  std::vector<Polynomial> gens{
      Polynomial::monomial(ring, Monomial{0, e, 0, 0}),
      Polynomial::monomial(ring, Monomial{0, 0, e, 0}),
      Polynomial::from_terms(ring, {{one, Monomial{e - 1, 1, 0, 0}}, {-one, Monomial{0, 0, 1, e - 1}}}),
  };
  return IdealPresentation(ring, std::move(gens));
}

namespace {

Monomial rename_to_caviglia(const Monomial& m) {
  std::vector<Exponent> e(4, 0);
  for (std::size_t v = 0; v < 4; ++v) e[kCavigliaRename[v]] = m[v];
  return Monomial(std::move(e));
}

FamilyParams caviglia_params(int d) {
  if (d < 2) throw ValidationError("d >= 2 required");
  return FamilyParams{2, {1, d - 2}};
}

}  // namespace

Monomial caviglia_socle_witness(int d) { return rename_to_caviglia(socle_witness(caviglia_params(d))); }

std::vector<Monomial> caviglia_lemma_targets(int d) {
  std::vector<Monomial> out;
  for (const auto& t : lemma_targets(caviglia_params(d))) out.push_back(rename_to_caviglia(t));
  return out;
}

std::optional<SubfamilyMatch> identify_subfamily(const FamilyParams& params, const Field& field) {
  params.validate();
  const IdealPresentation family = build_ideal(params, field);
  const VariableTable& fv = family.ring()->vars();

  if (params.g == 2 && params.n() == 2 && params.m[0] == 1) {
    const int d = params.m[1] + 2;
    IdealPresentation target = caviglia_ideal(d, field);
    SubfamilyMatch match{"Caviglia C_" + std::to_string(d), target, {}, {}, false};
    // Unit-scaling search: every sign pattern on the four variables.
    for (unsigned mask = 0; mask < 16 && !match.verified; ++mask) {
      std::vector<SignedVariable> images;
      for (std::size_t v = 0; v < 4; ++v) images.push_back({kCavigliaRename[v], (mask >> v & 1) ? -1 : 1});
      if (same_ideal(substitute(family, target.ring(), images), target)) {
        match.substitution = images;
        match.verified = true;
      }
    }
    if (!match.verified)
      for (std::size_t v = 0; v < 4; ++v) match.substitution.push_back({kCavigliaRename[v], 1});
    match.substitution_text = describe(fv, target.ring()->vars(), match.substitution);
    return match;
  }

  if (params.n() == 1 && params.m[0] >= 1) {
    const int m = params.g, d = params.m[0] + 1;
    IdealPresentation target = mccullough_ideal(m, 1, d, field);
    const VariableTable& tv = target.ring()->vars();
    const auto z = monomials_desc(m, d - 1);
    std::vector<SignedVariable> images(fv.size());
    for (std::size_t v = 0; v < fv.size(); ++v) {
      const Variable& var = fv[v];
      if (var.kind == Variable::Kind::kX) {
        images[v] = {static_cast<std::size_t>(var.j - 1), 1};
      } else {
        std::vector<Exponent> col;
        for (std::size_t j = 0; j < var.matrix.rows(); ++j) col.push_back(var.matrix.at(j, 0));
        auto it = std::find(z.begin(), z.end(), col);
        images[v] = {static_cast<std::size_t>(m + (it - z.begin())), 1};
      }
    }
    SubfamilyMatch match{"McCullough I_{" + std::to_string(m) + ",1," + std::to_string(d) + "}", target, images,
                         describe(fv, tv, images), false};
    match.verified = same_ideal(substitute(family, target.ring(), images), target);
    return match;
  }
  return std::nullopt;
}

}  // namespace pdlab
