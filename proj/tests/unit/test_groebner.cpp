#include <gtest/gtest.h>

#include <random>

#include "pdlab/error.hpp"
#include "pdlab/groebner/groebner.hpp"
#include "pdlab/groebner/hilbert.hpp"
#include "pdlab/poly/text.hpp"
#include "../common/oracles.hpp"

using namespace pdlab;
using namespace oracle;

namespace {

void expect_groebner_axioms(const IdealPresentation& I, const GroebnerBasis& G) {
  std::string why;
  EXPECT_TRUE(groebner_axioms_hold(I, G, &why)) << why;
}

}  // namespace

TEST(Groebner, HandTracedBasis) {
  auto r = ring_of({"x", "y"});
  auto I = ideal(r, {"x^2", "x*y + y^2"});
  auto G = buchberger(I);
  ASSERT_EQ(G.size(), 3u);
  EXPECT_EQ(G.elements()[0], parse_polynomial("x*y + y^2", r));
  EXPECT_EQ(G.elements()[1], parse_polynomial("x^2", r));
  EXPECT_EQ(G.elements()[2], parse_polynomial("y^3", r));
  expect_groebner_axioms(I, G);
}

TEST(Groebner, MonomialGenerators) {
  auto r = ring_of({"x", "y"});
  auto G = buchberger(ideal(r, {"x", "y"}));
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(normal_form(parse_polynomial("1", r), buchberger(ideal(r, {"x^2", "x*y"}))),
            parse_polynomial("1", r));
  EXPECT_TRUE(is_member(Polynomial(r), G));
}

TEST(Groebner, SmallFamilyLeadingTerms) {
  auto r = ring_of({"x[1,1]", "x[2,1]", "x[1,2]", "x[2,2]"});
  auto I = ideal(r, {"x[1,1]^3", "x[2,1]^3", "x[1,1]*x[1,2]^2 + x[2,1]*x[2,2]^2"});
  auto G = buchberger(I);
  expect_groebner_axioms(I, G);
  auto leads = G.leading_monomials();
  auto in_lead_ideal = [&](const Monomial& m) {
    for (const auto& l : leads)
      if (mono_divides(l, m)) return true;
    return false;
  };
  EXPECT_TRUE(in_lead_ideal(Monomial{3, 0, 0, 0}));
  EXPECT_TRUE(in_lead_ideal(Monomial{0, 3, 0, 0}));
  EXPECT_TRUE(in_lead_ideal(Monomial{1, 0, 2, 0}));
}

TEST(Groebner, RejectsBadPresentations) {
  auto r = ring_of({"x", "y"});
  EXPECT_THROW(ideal(r, {"x^2 + y"}), DomainError);
  EXPECT_THROW(IdealPresentation(r, {Polynomial(r)}), DomainError);
  EXPECT_THROW(IdealPresentation(r, {parse_polynomial("x", ring_of({"x", "z"}))}), DomainError);
}

TEST(Groebner, PairLimit) {
  auto r = ring_of({"a", "b", "c", "d"});
  GroebnerOptions o;
  o.max_pairs = 1;
  EXPECT_THROW(buchberger(ideal(r, {"a^2 + b*c", "b^2 + c*d", "c^2 + a*d", "d^2 + a*b"}), o),
               ResourceLimitError);
}

TEST(Groebner, TruncationIsExactBelowLimit) {
  auto r = ring_of({"x", "y", "z"});
  auto I = ideal(r, {"x^2 + y*z", "y^3 + x*z^2", "x*y*z"});
  auto full = buchberger(I);
  GroebnerOptions o;
  o.degree_limit = 4;
  auto part = buchberger(I, o);
  std::mt19937 rng(4);
  for (int d = 1; d <= 4; ++d)
    for (int s = 0; s < 20; ++s) {
      auto p = random_homogeneous(rng, r, d, 5);
      ASSERT_EQ(normal_form(p, part), normal_form(p, full));
    }
  if (!part.complete()) {
    EXPECT_THROW(normal_form(random_homogeneous(rng, r, 9, 2), part), DomainError);
  }
}

TEST(Groebner, StrategiesGiveSameReducedBasis) {
  std::mt19937 rng(21);
  auto r = ring_of({"x", "y", "z", "w"});
  for (int s = 0; s < 30; ++s) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(random_homogeneous(rng, r, 2 + (s + i) % 2, 4));
    IdealPresentation I(r, gens);
    GroebnerOptions a, b;
    b.strategy = PairStrategy::kReverse;
    auto ga = buchberger(I, a), gb = buchberger(I, b);
    ASSERT_EQ(ga.elements(), gb.elements());
    expect_groebner_axioms(I, ga);
  }
}

TEST(Groebner, OtherOrdersAndRationals) {
  auto r = ring_of({"x", "y", "z"}, Field::rationals());
  auto I = ideal(r, {"x^2 - 1/2*y*z", "x*y - 3*z^2"});
  for (auto o : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::graded_lex()}) {
    auto G = buchberger(I, o);
    auto Io = I.with_order(o);
    expect_groebner_axioms(Io, G);
  }
}

TEST(NormalForm, IdempotentAndLinear) {
  std::mt19937 rng(8);
  auto r = ring_of({"x", "y", "z"});
  auto G = buchberger(ideal(r, {"x^2 + 3*y*z", "y^2 - x*z", "x*y*z + z^3"}));
  for (int s = 0; s < 200; ++s) {
    int d = 1 + s % 5;
    auto p = random_homogeneous(rng, r, d, 6), q = random_homogeneous(rng, r, d, 6);
    auto np = normal_form(p, G), nq = normal_form(q, G);
    ASSERT_EQ(normal_form(np, G), np);
    ASSERT_EQ(normal_form(p + q, G), normal_form(np + nq, G));
    Coefficient c(r->field(), 17 + s);
    ASSERT_EQ(normal_form(poly_scale(c, p), G), poly_scale(c, np));
    for (const auto& t : np.terms())
      for (const auto& l : G.leading_monomials()) ASSERT_FALSE(mono_divides(l, t.mono));
    ASSERT_TRUE(is_member(p - np, G));
  }
}

TEST(Membership, AgreesWithLinearAlgebraOracle) {
  std::mt19937 rng(1234);
  std::size_t cases = 0, members = 0;
  for (int s = 0; s < 220; ++s) {
    const std::size_t n = 2 + s % 2;
    auto r = n == 2 ? ring_of({"x", "y"}, Field::prime(101)) : ring_of({"x", "y", "z"}, Field::prime(101));
    std::uniform_int_distribution<int> ng(1, 3), dg(1, 3);
    std::vector<Polynomial> gens;
    for (int i = ng(rng); i > 0; --i) gens.push_back(random_homogeneous(rng, r, dg(rng), 3));
    IdealPresentation I(r, gens);
    auto G = buchberger(I);
    for (int t = 0; t < 3; ++t) {
      int e = 2 + t;
      // Half the probes are built inside the ideal.
      Polynomial p(r);
      if (t % 2 == 0) {
        for (const auto& g : gens)
          if (g.total_degree() <= e) p = p + random_homogeneous(rng, r, e - g.total_degree(), 2) * g;
      } else {
        p = random_homogeneous(rng, r, e, 4);
      }
      bool expected = oracle_member(p, I);
      ASSERT_EQ(is_member(p, G), expected) << to_string(p);
      ++cases;
      members += expected;
    }
  }
  EXPECT_GE(cases, 200u);
  EXPECT_GT(members, 0u);
  EXPECT_LT(members, cases);
}

TEST(Hilbert, Examples) {
  auto h1 = hilbert_numerator({Monomial{1}}, 1);
  EXPECT_EQ(h1.coefficients, (std::vector<std::int64_t>{1, -1}));
  auto h2 = hilbert_numerator({Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}, 2);
  EXPECT_EQ(h2.coefficients, (std::vector<std::int64_t>{1, 0, -3, 2}));
  EXPECT_EQ(h2.hilbert_function(0), 1);
  EXPECT_EQ(h2.hilbert_function(1), 2);
  EXPECT_EQ(h2.hilbert_function(2), 0);
  EXPECT_EQ(h2.to_string(), "1 - 3*t^2 + 2*t^3");
  auto h3 = hilbert_numerator({Monomial{2, 0}, Monomial{0, 3}}, 2);
  EXPECT_EQ(h3.coefficients, (std::vector<std::int64_t>{1, 0, -1, -1, 0, 1}));
  auto empty = hilbert_numerator({}, 3);
  EXPECT_EQ(empty.coefficients, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(empty.hilbert_function(2), 6);
}

TEST(Hilbert, MatchesStandardMonomialCounts) {
  std::mt19937 rng(77);
  auto r = ring_of({"a", "b", "c", "d"});
  for (int s = 0; s < 25; ++s) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 2 + s % 3; ++i) gens.push_back(random_homogeneous(rng, r, 2 + i % 2, 3));
    auto G = buchberger(IdealPresentation(r, gens));
    auto h = hilbert_numerator(G);
    auto leads = G.leading_monomials();
    for (int d = 0; d <= 7; ++d) {
      std::int64_t standard = 0;
      for (const auto& m : monomials_of_degree(4, d)) {
        bool div = false;
        for (const auto& l : leads) div = div || mono_divides(l, m);
        standard += !div;
      }
      ASSERT_EQ(h.hilbert_function(d), standard) << "degree " << d;
    }
  }
}
