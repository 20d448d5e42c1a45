#include <gtest/gtest.h>

#include <random>

#include "pdlab/error.hpp"
#include "pdlab/poly/polynomial.hpp"
#include "pdlab/poly/text.hpp"

using namespace pdlab;

namespace {

RingPtr xyz(Field f = Field::prime(), MonomialOrder o = MonomialOrder::grevlex()) {
  return PolyRing::make(VariableTable::named({"x", "y", "z"}), f, o);
}

Monomial random_monomial(std::mt19937& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Exponent> v(n);
  for (auto& x : v) x = e(rng);
  return Monomial(v);
}

Polynomial random_poly(std::mt19937& rng, const RingPtr& r, int terms, int max_exp) {
  std::uniform_int_distribution<long long> c(-50, 50);
  std::vector<Term> ts;
  for (int i = 0; i < terms; ++i)
    ts.push_back(Term{Coefficient(r->field(), c(rng)), random_monomial(rng, r->num_vars(), max_exp)});
  return Polynomial::from_terms(r, ts);
}

bool invariants_hold(const Polynomial& p) {
  const auto& t = p.terms();
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].coef.is_zero()) return false;
    if (i > 0 && p.ring()->order().compare(t[i - 1].mono, t[i].mono) <= 0) return false;
  }
  return true;
}

}  // namespace

TEST(Monomial, MultiplyAndDivide) {
  Monomial a{2, 1, 0}, b{1, 0, 1};
  EXPECT_EQ(mono_mul(a, b), (Monomial{3, 1, 1}));
  EXPECT_EQ(mono_mul(a, b).degree(), 5);
  EXPECT_EQ(mono_mul(a, Monomial(3)), a);
  EXPECT_EQ(mono_mul(Monomial{1, 0, 0}, Monomial{0, 1, 0}), (Monomial{1, 1, 0}));

  Monomial big{3, 1, 0};
  EXPECT_TRUE(mono_divides(Monomial{2, 0, 0}, big));
  EXPECT_EQ(mono_quotient(big, Monomial{2, 0, 0}), (Monomial{1, 1, 0}));
  EXPECT_FALSE(mono_divides(Monomial{1, 0, 1}, big));
  EXPECT_THROW(mono_quotient(big, Monomial{1, 0, 1}), DomainError);
  EXPECT_TRUE(mono_divides(Monomial(3), big));
  EXPECT_EQ(mono_quotient(big, Monomial(3)), big);
}

TEST(Monomial, OverflowIsReported) {
  Monomial a{std::numeric_limits<Exponent>::max(), 0};
  EXPECT_THROW(mono_mul(a, Monomial{1, 0}), OverflowError);
  EXPECT_THROW(mono_pow(Monomial{1 << 20}, 1 << 12), OverflowError);
  EXPECT_THROW(mono_mul(Monomial{1}, Monomial{1, 2}), DomainError);
}

TEST(Monomial, LcmGcd) {
  Monomial a{2, 0, 1}, b{1, 3, 0};
  EXPECT_EQ(mono_lcm(a, b), (Monomial{2, 3, 1}));
  EXPECT_EQ(mono_gcd(a, b), (Monomial{1, 0, 0}));
  EXPECT_FALSE(mono_coprime(a, b));
  EXPECT_TRUE(mono_coprime(Monomial{1, 0, 0}, Monomial{0, 2, 1}));
}

TEST(MonomialOrder, KnownComparisons) {
  auto grevlex = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();
  auto glex = MonomialOrder::graded_lex();
  // x*z vs y^2: lex and glex say xz > y^2, grevlex says y^2 > xz.
  Monomial xz{1, 0, 1}, yy{0, 2, 0};
  EXPECT_GT(lex.compare(xz, yy), 0);
  EXPECT_GT(glex.compare(xz, yy), 0);
  EXPECT_LT(grevlex.compare(xz, yy), 0);
  // x vs y^2: lex puts x first, graded orders put y^2 first.
  Monomial x{1, 0, 0};
  EXPECT_GT(lex.compare(x, yy), 0);
  EXPECT_LT(glex.compare(x, yy), 0);
  EXPECT_LT(grevlex.compare(x, yy), 0);
  // Permuted lex with z most significant.
  MonomialOrder zfirst(MonomialOrder::Kind::kLex, {2, 1, 0});
  EXPECT_GT(zfirst.compare(Monomial{0, 0, 1}, Monomial{5, 0, 0}), 0);
}

TEST(MonomialOrder, MultiplicativeOnRandomSamples) {
  std::mt19937 rng(7);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::graded_lex(),
                     MonomialOrder(MonomialOrder::Kind::kGrevlex, {3, 0, 2, 1})}) {
    for (int s = 0; s < 10000; ++s) {
      Monomial a = random_monomial(rng, 4, 4), b = random_monomial(rng, 4, 4),
               c = random_monomial(rng, 4, 4);
      int ab = order.compare(a, b);
      ASSERT_EQ(ab, -order.compare(b, a));
      ASSERT_EQ(ab, order.compare(mono_mul(a, c), mono_mul(b, c))) << order.name();
      if (ab == 0) ASSERT_EQ(a, b);
    }
  }
}

TEST(MonomialOrder, GradedOrdersRefineDegree) {
  std::mt19937 rng(11);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::graded_lex()}) {
    for (int s = 0; s < 5000; ++s) {
      Monomial a = random_monomial(rng, 5, 3), b = random_monomial(rng, 5, 3);
      if (a.degree() == b.degree()) continue;
      ASSERT_EQ(order.compare(a, b) < 0, a.degree() < b.degree());
    }
  }
}

TEST(Coefficient, PrimeField) {
  Field f = Field::prime(7);
  Coefficient a(f, 5), b(f, -3);
  EXPECT_EQ(b.residue(), 4u);
  EXPECT_EQ((a + b).residue(), 2u);
  EXPECT_EQ((a * b).residue(), 6u);
  EXPECT_EQ((a / b * b), a);
  EXPECT_EQ(a.inverse().residue(), 3u);
  EXPECT_EQ(Coefficient(f, 6).lift(), -1);
  EXPECT_THROW(Coefficient(f, 0).inverse(), DomainError);
  EXPECT_THROW(Field::prime(9), ValidationError);
  EXPECT_THROW(Field::prime(2), ValidationError);
  EXPECT_THROW((void)(a + Coefficient(Field::rationals(), 1)), DomainError);
  EXPECT_THROW((void)(a + Coefficient(Field::prime(5), 1)), DomainError);
}

TEST(Coefficient, RationalsStayReduced) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-30, 30);
  Field q = Field::rationals();
  auto reduced = [](const Coefficient& c) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), c.rational().get_num_mpz_t(), c.rational().get_den_mpz_t());
    return g == 1 && c.rational().get_den() > 0;
  };
  for (int s = 0; s < 2000; ++s) {
    int n1 = d(rng), d1 = d(rng), n2 = d(rng), d2 = d(rng);
    if (d1 == 0 || d2 == 0) continue;
    mpq_class x(n1 * 6, d1 * 4), y(n2 * 10, d2 * 15);
    x.canonicalize();
    y.canonicalize();
    Coefficient a(q, x), b(q, y);
    ASSERT_TRUE(reduced(a + b));
    ASSERT_TRUE(reduced(a - b));
    ASSERT_TRUE(reduced(a * b));
    if (!b.is_zero()) ASSERT_TRUE(reduced(a / b));
  }
}

TEST(Polynomial, SpecExamples) {
  auto r = xyz();
  auto x = Polynomial::variable(r, 0), y = Polynomial::variable(r, 1);
  EXPECT_TRUE((x + y + (-(x + y))).is_zero());
  EXPECT_EQ((x + y) * (x - y), x * x - y * y);

  auto r3 = xyz(Field::prime(3));
  auto x3 = Polynomial::variable(r3, 0), y3 = Polynomial::variable(r3, 1);
  EXPECT_EQ(to_string(poly_pow(x3 + y3, 2)), "x^2 - x*y + y^2");  // 2 = -1 mod 3
  EXPECT_EQ(poly_pow(x3 + y3, 2), parse_polynomial("x^2 + 2*x*y + y^2", r3));
}

TEST(Polynomial, InvariantsAfterArithmetic) {
  auto r = xyz();
  std::mt19937 rng(5);
  for (int s = 0; s < 200; ++s) {
    auto p = random_poly(rng, r, 6, 3), q = random_poly(rng, r, 6, 3);
    EXPECT_TRUE(invariants_hold(p));
    EXPECT_TRUE(invariants_hold(p + q));
    EXPECT_TRUE(invariants_hold(p * q));
    EXPECT_TRUE(invariants_hold(poly_scale(Coefficient(r->field(), 0), p)));
    EXPECT_TRUE(poly_scale(Coefficient(r->field(), 0), p).is_zero());
  }
}

TEST(Polynomial, RingAxiomsOnRandomPolynomials) {
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex()}) {
    auto r = xyz(Field::prime(101), order);
    std::mt19937 rng(9);
    for (int s = 0; s < 200; ++s) {
      auto a = random_poly(rng, r, 4, 2), b = random_poly(rng, r, 4, 2), c = random_poly(rng, r, 4, 2);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + b, b + a);
      ASSERT_TRUE((a - a).is_zero());
    }
  }
}

TEST(Polynomial, RationalArithmetic) {
  auto r = xyz(Field::rationals());
  auto p = parse_polynomial("1/2*x + 3/4*y", r);
  auto q = parse_polynomial("2*x - 4/3*y", r);
  EXPECT_EQ(p * q, parse_polynomial("x^2 + 5/6*x*y - y^2", r));
  EXPECT_EQ(to_string(p), "1/2*x + 3/4*y");
  EXPECT_THROW(p + change_field(q, xyz()), DomainError);
}

TEST(Polynomial, SubstituteSigns) {
  auto r = xyz();
  auto p = parse_polynomial("x + y", r);
  std::map<std::size_t, int> s{{0, 1}, {1, -1}, {2, 1}};
  EXPECT_EQ(substitute_signs(p, s), parse_polynomial("x - y", r));
  std::mt19937 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto q = random_poly(rng, r, 5, 3);
    ASSERT_EQ(substitute_signs(substitute_signs(q, s), s), q);
  }
  EXPECT_THROW(substitute_signs(p, {{0, 1}}), DomainError);
  EXPECT_THROW(substitute_signs(p, {{0, 1}, {1, 2}}), DomainError);
}

TEST(Polynomial, Homogeneity) {
  auto r = xyz();
  auto h = is_homogeneous(parse_polynomial("x^2 + x*y", r));
  EXPECT_EQ(h.kind, Homogeneity::Kind::kDegree);
  EXPECT_EQ(h.degree, 2);
  EXPECT_EQ(is_homogeneous(parse_polynomial("x^2 + x", r)).kind, Homogeneity::Kind::kNot);
  EXPECT_EQ(is_homogeneous(Polynomial(r)).kind, Homogeneity::Kind::kAny);
}

TEST(Variables, FamilyTableOrder) {
  std::vector<ExponentMatrix> ys = {ExponentMatrix::from_rows({{1, 0}, {0, 1}}),
                                    ExponentMatrix::from_rows({{2, 0}, {0, 0}}),
                                    ExponentMatrix::from_rows({{0, 1}, {1, 0}})};
  auto t = VariableTable::family(2, 2, ys);
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t.name(0), "x[1,1]");
  EXPECT_EQ(t.name(1), "x[2,1]");
  EXPECT_EQ(t.name(2), "x[1,2]");
  EXPECT_EQ(t.name(3), "x[2,2]");
  EXPECT_EQ(t.name(4), "y[[2,0],[0,0]]");
  EXPECT_EQ(t.name(5), "y[[1,0],[0,1]]");
  EXPECT_EQ(t.name(6), "y[[0,1],[1,0]]");
  EXPECT_EQ(t.index_of_x(2, 1), 1u);
  EXPECT_EQ(t.index_of_y(ys[2]), 6u);
  EXPECT_THROW(VariableTable::named({"a", "a"}), DomainError);
}

TEST(Text, RoundTrip) {
  std::vector<ExponentMatrix> ys = {ExponentMatrix::from_rows({{1, 1, 2}, {1, 1, 0}})};
  auto r = PolyRing::make(VariableTable::family(2, 3, ys));
  auto p = parse_polynomial(" x[1,1]^3*x[2,3] - 5*y[[1,1,2],[1,1,0]] + 2 ", r);
  EXPECT_EQ(parse_polynomial(to_string(p), r), p);
  EXPECT_EQ(parse_polynomial("0", r), Polynomial(r));
  EXPECT_THROW(parse_polynomial("x[1,1]^", r), ParseError);
  EXPECT_THROW(parse_polynomial("q", r), ParseError);

  auto s = xyz();
  std::mt19937 rng(2);
  for (int i = 0; i < 300; ++i) {
    auto q = random_poly(rng, s, 5, 4);
    ASSERT_EQ(parse_polynomial(to_string(q), s), q) << to_string(q);
  }
  auto qq = xyz(Field::rationals());
  auto rq = parse_polynomial("-7/3*x^2*y + 1/5*z", qq);
  EXPECT_EQ(parse_polynomial(to_string(rq), qq), rq);
}
