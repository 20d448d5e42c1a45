// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../common/golden.hpp"
#include "../common/oracles.hpp"
#include "pdlab/error.hpp"
#include "pdlab/family/family.hpp"
#include "pdlab/family/special.hpp"
#include "pdlab/groebner/hilbert.hpp"
#include "pdlab/resolution/resolution.hpp"

using namespace pdlab;
using namespace oracle;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(const char* id, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string detail = o.detail.str();
  if (detail.size() >= 2 && detail.compare(detail.size() - 2, 2, "; ") == 0) detail.resize(detail.size() - 2);
  std::printf("%s %s %s (%.2f s)\n", id, o.pass ? "PASS" : "FAIL", detail.c_str(), s);
  std::fflush(stdout);
  failures += !o.pass;
}

std::vector<FamilyParams> grid(int max_g, int max_n, int max_m) {
  std::vector<FamilyParams> out;
  for (int g = 2; g <= max_g; ++g)
    for (int n = 1; n <= max_n; ++n) {
      std::vector<int> m(n, 0);
      while (true) {
        FamilyParams p{g, m};
        try {
          p.validate();
          out.push_back(p);
        } catch (const ValidationError&) {
        }
        int i = n - 1;
        while (i >= 0 && ++m[i] > max_m) m[i--] = 0;
        if (i < 0) break;
      }
    }
  return out;
}

// Every resolution computed for the golden, Caviglia and McCullough
// criteria, revisited by the property criterion.
struct Resolved {
  std::string label;
  IdealPresentation ideal;
  Resolution res;
};
std::vector<Resolved> resolved;

const Resolution& resolve_and_keep(const std::string& label, const IdealPresentation& I) {
  resolved.push_back({label, I, resolve(I)});
  return resolved.back().res;
}

struct VerifyCase {
  std::string label;
  IdealPresentation ideal;
  Monomial witness;
  std::vector<Monomial> targets;
  std::int64_t pd;
};

std::vector<VerifyCase> verify_cases() {
  std::vector<VerifyCase> out;
  for (const char* s : {"2:(1,1)", "2:(2,0)", "2:(3,1)", "2:(2,1,2)", "2:(2,2,2)", "3:(2,2)"}) {
    auto p = FamilyParams::parse(s);
    out.push_back({s, build_ideal(p), socle_witness(p), lemma_targets(p), variable_count(p)});
  }
  out.push_back({"mccullough(2,1,3)", mccullough_ideal(2, 1, 3), mccullough_socle_witness(2, 1, 3),
                 mccullough_lemma_targets(2, 1, 3), mccullough_pd(2, 1, 3)});
  return out;
}

int degree_bound(const VerifyCase& c) {
  std::int64_t d = c.witness.degree() + 1;
  for (const auto& t : c.targets) d = std::max(d, t.degree());
  return static_cast<int>(d);
}

std::vector<SocleReport> socle_reports;
std::vector<LemmaReport> lemma_reports;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

int main() {
  criterion("A1", [](Outcome& o) {
    auto all = grid(4, 3, 4);
    std::size_t agree = 0;
    for (const auto& p : all) {
      // The count is taken from the enumerated set, independently of the formula.
      std::int64_t count = std::int64_t{p.g} * p.n() + static_cast<std::int64_t>(enumerate_A(p, p.n()).size());
      bool ok = pd_formula(p) == count && variable_count(p) == count;
      agree += ok;
      o.require(ok, p.to_string());
    }
    o.require(all.size() >= 100, "fewer than 100 instances");
    o.detail << "pd formula = variable count on " << agree << "/" << all.size() << " parameter sets";
  });

  criterion("A2", [](Outcome& o) {
    struct Case {
      const char* p;
      std::int64_t pd;
    };
    for (auto [s, pd] : {Case{"2:(2,2,2)", 9}, Case{"2:(3,1)", 8}, Case{"2:(2,1,2)", 6}}) {
      std::int64_t got = pd_formula(FamilyParams::parse(s));
      o.detail << s << " -> " << got << "; ";
      o.require(got == pd, s);
    }
  });

  // Depth zero and the membership lemma share one truncated basis per instance.
  auto cases = verify_cases();
  criterion("A3", [&](Outcome& o) {
    for (const auto& c : cases) {
      GroebnerOptions go;
      go.degree_limit = degree_bound(c);
      auto t0 = std::chrono::steady_clock::now();
      GroebnerBasis G = buchberger(c.ideal, go);
      socle_reports.push_back(verify_socle(c.witness, G, c.label));
      lemma_reports.push_back(verify_membership(c.targets, G));
      double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      const auto& r = socle_reports.back();
      bool ok = r.depth_zero && r.not_in_ideal && r.implied_pd == c.pd &&
                r.killed_by.size() == c.ideal.ring()->num_vars();
      o.require(ok, c.label);
      char buf[64];
      std::snprintf(buf, sizeof buf, " %.1fs", s);
      o.detail << c.label << " depth 0, pd " << r.implied_pd << buf << "; ";
    }
  });

  criterion("A4", [&](Outcome& o) {
    o.require(lemma_reports.size() == cases.size(), "verification incomplete");
    for (std::size_t i = 0; i < lemma_reports.size(); ++i) {
      o.require(lemma_reports[i].holds && lemma_reports[i].counterexamples.empty(), cases[i].label);
      o.detail << cases[i].label << " " << lemma_reports[i].targets.size() << " targets; ";
    }
  });

  criterion("A5", [](Outcome& o) {
    struct Case {
      const char* p;
      const char* table;
      std::vector<std::int64_t> totals;
      int pd, reg;
    };
    std::vector<Case> goldens = {
        {"2:(3,1)", golden::k31, {1, 3, 53, 184, 287, 248, 124, 34, 4}, 8, 12},
        {"2:(2,1,2)", golden::k212, {1, 3, 75, 247, 320, 188, 42}, 6, 41},
    };
    for (const auto& g : goldens) {
      const BettiTable expected = golden::parse_rows(g.table);
      o.require(expected.totals() == g.totals, std::string(g.p) + " golden transcription");
      const auto& res = resolve_and_keep(g.p, build_ideal(FamilyParams::parse(g.p)));
      const BettiTable& t = res.betti();
      o.require(t.complete(), std::string(g.p) + " truncated");
      o.require(t == expected, std::string(g.p) + " table differs");
      o.require(pd_of(t) == g.pd && reg_of(t) == g.reg, std::string(g.p) + " pd/reg");
      o.detail << g.p << " table matches (pd " << pd_of(t) << ", reg " << reg_of(t) << "); ";
    }
  });

  criterion("A6", [](Outcome& o) {
    for (int d : {3, 4, 5}) {
      const auto& res = resolve_and_keep("caviglia " + std::to_string(d), caviglia_ideal(d));
      int reg = reg_of(res.betti());
      o.require(reg == d * d - 2, "C_" + std::to_string(d));
      o.detail << "reg C_" << d << " = " << reg << "; ";
    }
  });

  criterion("A7", [](Outcome& o) {
    for (int d : {3, 4}) {
      const auto& res = resolve_and_keep("mccullough(2,1," + std::to_string(d) + ")", mccullough_ideal(2, 1, d));
      int pd = pd_of(res.betti());
      o.require(pd == d + 2, "d = " + std::to_string(d));
      o.detail << "pd I_{2,1," << d << "} = " << pd << "; ";
    }
  });

  criterion("A8", [](Outcome& o) {
    std::mt19937 rng(20240601);
    std::string why;

    // Groebner axioms and independence from the pair strategy.
    auto r4 = ring_of({"x", "y", "z", "w"});
    std::size_t bases = 0;
    for (int s = 0; s < 40; ++s) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < 3; ++i) gens.push_back(random_homogeneous(rng, r4, 2 + (s + i) % 2, 4));
      IdealPresentation I(r4, gens);
      GroebnerOptions rev;
      rev.strategy = PairStrategy::kReverse;
      auto a = buchberger(I), b = buchberger(I, rev);
      o.require(a.elements() == b.elements(), "strategies disagree");
      o.require(groebner_axioms_hold(I, a, &why), why);
      ++bases;
    }
    for (const auto& rd : resolved) {
      auto G = buchberger(rd.ideal);
      GroebnerOptions rev;
      rev.strategy = PairStrategy::kReverse;
      o.require(G.elements() == buchberger(rd.ideal, rev).elements(), rd.label + " strategies disagree");
      o.require(groebner_axioms_hold(rd.ideal, G, &why), rd.label + ": " + why);
      ++bases;
    }

    // Normal form: idempotent, linear, fully reduced.
    auto r3 = ring_of({"x", "y", "z"});
    auto G = buchberger(ideal(r3, {"x^2 + 3*y*z", "y^2 - x*z", "x*y*z + z^3"}));
    std::size_t nf = 0;
    for (int s = 0; s < 200; ++s, ++nf) {
      int d = 1 + s % 5;
      auto p = random_homogeneous(rng, r3, d, 6), q = random_homogeneous(rng, r3, d, 6);
      auto np = normal_form(p, G), nq = normal_form(q, G);
      Coefficient c(r3->field(), 17 + s);
      bool ok = normal_form(np, G) == np && normal_form(p + q, G) == normal_form(np + nq, G) &&
                normal_form(poly_scale(c, p), G) == poly_scale(c, np) && is_member(p - np, G);
      for (const auto& t : np.terms())
        for (const auto& l : G.leading_monomials()) ok = ok && !mono_divides(l, t.mono);
      o.require(ok, "normal form property");
    }

    // Membership against dense linear algebra on random small ideals.
    std::size_t cases = 0, members = 0;
    for (int s = 0; s < 240; ++s) {
      auto r = s % 2 ? ring_of({"x", "y", "z"}, Field::prime(101)) : ring_of({"x", "y"}, Field::prime(101));
      std::uniform_int_distribution<int> ng(1, 3), dg(1, 3);
      std::vector<Polynomial> gens;
      for (int i = ng(rng); i > 0; --i) gens.push_back(random_homogeneous(rng, r, dg(rng), 3));
      IdealPresentation I(r, gens);
      auto B = buchberger(I);
      Polynomial p(r);
      const int e = 2 + s % 3;
      if (s % 3 == 0) {
        for (const auto& g : gens)
          if (g.total_degree() <= e) p = p + random_homogeneous(rng, r, e - g.total_degree(), 2) * g;
      } else {
        p = random_homogeneous(rng, r, e, 4);
      }
      bool expected = oracle_member(p, I);
      o.require(is_member(p, B) == expected, "membership oracle disagrees on " + to_string(p));
      ++cases;
      members += expected;
    }
    o.require(cases >= 200 && members > 0 && members < cases, "membership sample degenerate");

    // Invariants of every resolution computed above.
    for (const auto& rd : resolved) {
      const BettiTable& t = rd.res.betti();
      bool shape = t.at(0, 0) == 1;
      for (const auto& [k, v] : t.entries()) shape = shape && k.second >= k.first && (k.first || k.second == 0);
      o.require(rd.res.checks().all(), rd.label + " complex/minimality checks");
      o.require(hilbert_crosscheck(t, hilbert_numerator(buchberger(rd.ideal))), rd.label + " Hilbert");
      o.require(shape, rd.label + " table shape");
    }
    o.detail << bases << " bases, " << nf << " normal-form probes, " << cases << " membership probes ("
             << members << " members), " << resolved.size() << " resolutions checked";
  });

  criterion("A9", [](Outcome& o) {
    for (int p : {2, 3}) {
      auto fp = three_generator_preset(p);
      auto I = build_ideal(fp);
      bool deg = I.size() == 3;
      for (auto d : I.generator_degrees()) deg = deg && d == p * p;
      std::int64_t pd = pd_formula(fp), bound = ipow(p, p - 1);
      o.require(deg, fp.to_string() + " generator degrees");
      o.require(pd >= bound, fp.to_string() + " bound");
      o.detail << fp.to_string() << ": 3 gens of degree " << p * p << ", pd " << pd << " >= " << bound << "; ";
    }
    const int p = 2;
    auto fp = odd_generator_preset(p);
    auto I = build_ideal(fp);
    bool deg = I.size() == static_cast<std::size_t>(2 * p + 1);
    for (auto d : I.generator_degrees()) deg = deg && d == 2 * p + 1;
    std::int64_t pd = pd_formula(fp), bound = ipow(p, 2 * p);
    o.require(deg, fp.to_string() + " generators");
    o.require(pd >= bound, fp.to_string() + " bound");
    o.detail << fp.to_string() << ": " << I.size() << " gens of degree " << 2 * p + 1 << ", pd " << pd
             << " >= " << bound;
  });

  std::printf("%s\n", failures ? "acceptance: FAILED" : "acceptance: all criteria pass");
  return failures ? 1 : 0;
}
