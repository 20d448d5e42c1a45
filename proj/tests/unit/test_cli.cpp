#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "pdlab/cli/app.hpp"
#include "pdlab/family/special.hpp"
#include "pdlab/poly/text.hpp"

using namespace pdlab;
using namespace pdlab::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

// Macaulay2 names back to the text grammar: x_(j,k) -> x[j,k],
// y_(a,b,c,d) -> y[[a,b],[c,d]] for a g x n matrix.
std::string from_m2(std::string s, int g, int n) {
  s = std::regex_replace(s, std::regex(R"(x_\((\d+),(\d+)\))"), "x[$1,$2]");
  std::regex y(R"(y_\(([\d,]+)\))");
  std::string result;
  auto begin = std::sregex_iterator(s.begin(), s.end(), y);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    result += s.substr(last, it->position() - last);
    std::vector<std::string> e;
    std::stringstream ss((*it)[1].str());
    for (std::string t; std::getline(ss, t, ',');) e.push_back(t);
    EXPECT_EQ(e.size(), static_cast<std::size_t>(g * n));
    std::string m = "y[";
    for (int r = 0; r < g; ++r) {
      m += r ? ",[" : "[";
      for (int c = 0; c < n; ++c) m += (c ? "," : "") + e[r * n + c];
      m += "]";
    }
    result += m + "]";
    last = it->position() + it->length();
  }
  return result + s.substr(last);
}

std::vector<std::string> m2_generators(const std::string& script) {
  auto a = script.find("ideal(");
  auto b = script.find(");", a);
  std::string body = script.substr(a + 6, b - a - 6);
  std::vector<std::string> out;
  std::stringstream ss(body);
  for (std::string t; std::getline(ss, t, ',');) {
    // commas also separate subscripts; rejoin until parentheses balance
    if (!out.empty() && std::count(out.back().begin(), out.back().end(), '(') !=
                            std::count(out.back().begin(), out.back().end(), ')'))
      out.back() += "," + t;
    else
      out.push_back(t);
  }
  return out;
}

const char* kExampleF =
    "x[1,1]^2*x[1,2]^5 + x[2,1]^2*x[2,2]^5 + x[1,1]*x[2,1]*x[1,2]^2*x[1,3]^3"
    " + x[1,1]*x[2,1]*x[2,2]^2*x[2,3]^3"
    " + x[1,1]*x[2,1]*x[1,2]*x[2,2]*x[1,3]^2*y[[1,1,2],[1,1,0]]"
    " + x[1,1]*x[2,1]*x[1,2]*x[2,2]*x[1,3]*x[2,3]*y[[1,1,1],[1,1,1]]"
    " + x[1,1]*x[2,1]*x[1,2]*x[2,2]*x[2,3]^2*y[[1,1,0],[1,1,2]]";

}  // namespace

TEST(Cli, ConstructDisplay222) {
  auto r = call({"construct", "2:(2,2,2)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "field: F_32003"));
  EXPECT_TRUE(contains(r.out, "d_k: 7 5 3"));
  EXPECT_TRUE(contains(r.out, "M_k: 1 1 2"));
  EXPECT_TRUE(contains(r.out, "variables (9):"));
  EXPECT_TRUE(contains(r.out, "generators (3, degree 7):"));
  EXPECT_TRUE(contains(r.out, "expected pd: 9"));

  IdealPresentation I = parse_ideal_text(r.out);
  ASSERT_EQ(I.size(), 3u);
  EXPECT_EQ(I.generators()[0], parse_polynomial("x[1,1]^7", I.ring()));
  EXPECT_EQ(I.generators()[1], parse_polynomial("x[2,1]^7", I.ring()));
  EXPECT_EQ(I.generators()[2], parse_polynomial(kExampleF, I.ring()));
  EXPECT_EQ(I.generators()[2].size(), 7u);
}

TEST(Cli, ConstructMacaulay2MatchesDisplay) {
  auto r = call({"construct", "2:(2,1,2)", "--format", "m2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "kk = ZZ/32003;"));
  EXPECT_TRUE(contains(r.out, "res(I)"));
  auto gens = m2_generators(r.out);
  ASSERT_EQ(gens.size(), 3u);
  auto ring = family_ring(FamilyParams{2, {2, 1, 2}});
  EXPECT_EQ(parse_polynomial(from_m2(gens[0], 2, 3), ring), parse_polynomial("x[1,1]^6", ring));
  EXPECT_EQ(parse_polynomial(from_m2(gens[1], 2, 3), ring), parse_polynomial("x[2,1]^6", ring));
  EXPECT_EQ(parse_polynomial(from_m2(gens[2], 2, 3), ring),
            parse_polynomial("x[1,1]^2*x[1,2]^4 + x[2,1]^2*x[2,2]^4 + x[1,1]*x[2,1]*x[1,2]*x[1,3]^3"
                             " + x[1,1]*x[2,1]*x[2,2]*x[2,3]^3",
                             ring));
}

TEST(Cli, ConstructMacaulay2WithYVariables) {
  auto r = call({"construct", "2:(3,1)", "--format", "m2"});
  ASSERT_EQ(r.code, 0);
  auto gens = m2_generators(r.out);
  ASSERT_EQ(gens.size(), 3u);
  auto I = build_ideal(FamilyParams{2, {3, 1}});
  for (std::size_t i = 0; i < 3; ++i)
    EXPECT_EQ(parse_polynomial(from_m2(gens[i], 2, 2), I.ring()), I.generators()[i]);
}

TEST(Cli, ConstructRejectsBadParams) {
  auto r = call({"construct", "1:(2)"});
  EXPECT_EQ(r.code, kInvalidInput);
  EXPECT_TRUE(contains(r.err, "g >= 2")) << r.err;

  EXPECT_EQ(call({"construct", "2:(2,0,2)"}).code, kInvalidInput);
  EXPECT_EQ(call({"construct", "2:2,2"}).code, kInvalidInput);
  EXPECT_EQ(call({"construct", "2:(2,2)", "--field", "9"}).code, kInvalidInput);
  EXPECT_EQ(call({"construct", "2:(2,2)", "--format", "xml"}).code, kInvalidInput);
  EXPECT_EQ(call({"betti", "2:(1,0)", "--degree-limit", "0"}).code, kInvalidInput);
  EXPECT_EQ(call({"frobnicate"}).code, kInvalidInput);
  EXPECT_EQ(call({}).code, kInvalidInput);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, ConstructOverRationals) {
  auto r = call({"construct", "2:(1,1)", "--field", "QQ"});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "field: QQ"));
  EXPECT_EQ(parse_ideal_text(r.out).ring()->field(), Field::rationals());
}

TEST(Cli, ConstructIdentifiesSubfamilies) {
  auto r = call({"construct", "2:(1,1)"});
  EXPECT_TRUE(contains(r.out, "Caviglia C_3")) << r.out;
  auto s = call({"construct", "3:(2)"});
  EXPECT_TRUE(contains(s.out, "McCullough")) << s.out;
  EXPECT_FALSE(contains(call({"construct", "2:(2,2,2)"}).out, "identified"));
}

TEST(Cli, RoundTripPreservesReducedBasis) {
  for (const char* p : {"2:(1,1)", "2:(2,1,2)", "2:(3,1)", "3:(2,0)", "2:(2,2,0)"}) {
    auto r = call({"construct", p});
    ASSERT_EQ(r.code, 0) << p;
    auto original = build_ideal(FamilyParams::parse(p));
    auto reparsed = parse_ideal_text(r.out);
    ASSERT_EQ(reparsed.ring()->num_vars(), original.ring()->num_vars());
    GroebnerOptions o;
    o.degree_limit = verification_degree(FamilyParams::parse(p));
    auto a = buchberger(original, o), b = buchberger(reparsed, o);
    ASSERT_EQ(a.size(), b.size()) << p;
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_string(a.elements()[i]), to_string(b.elements()[i])) << p;
  }
  auto c = call({"construct", "caviglia", "4"});
  ASSERT_EQ(c.code, 0);
  auto J = parse_ideal_text(c.out);
  auto K = caviglia_ideal(4);
  auto a = buchberger(J), b = buchberger(K);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_string(a.elements()[i]), to_string(b.elements()[i]));
}

TEST(Cli, ConstructJsonSchema) {
  auto r = call({"construct", "2:(2,1,2)", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  for (const char* key : {"\"params\"", "\"constants\"", "\"generators\"", "\"report\""})
    EXPECT_TRUE(contains(r.out, key)) << key;
  EXPECT_TRUE(contains(r.out, "\"expected_pd\": 6"));
}

TEST(Cli, VerifyExamples) {
  struct Case {
    const char* params;
    const char* pd;
  };
  for (auto [p, pd] : {Case{"2:(2,2,2)", "9"}, Case{"2:(1,1)", "4"}, Case{"2:(3,1)", "8"}}) {
    auto r = call({"verify", p});
    EXPECT_EQ(r.code, kOk) << p << "\n" << r.out << r.err;
    EXPECT_TRUE(contains(r.out, "depth 0: confirmed")) << r.out;
    EXPECT_TRUE(contains(r.out, "lemma: holds")) << r.out;
    EXPECT_TRUE(contains(r.out, std::string("pd(R/I) = ") + pd)) << r.out;
  }
}

TEST(Cli, VerifyJsonAndSpecialInstances) {
  auto r = call({"verify", "2:(2,2,2)", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_TRUE(contains(r.out, "\"depth_zero\": true"));
  EXPECT_TRUE(contains(r.out, "\"implied_pd\": 9"));
  EXPECT_TRUE(contains(r.out, "\"verified\": true"));

  EXPECT_EQ(call({"verify", "caviglia", "3"}).code, kOk);
  auto m = call({"verify", "mccullough", "2", "1", "3"});
  EXPECT_EQ(m.code, kOk) << m.out;
  EXPECT_TRUE(contains(m.out, "pd(R/I) = 5"));
}

TEST(Cli, VerifyFailureHasOwnExitCode) {
  // A witness one degree too low is not killed by every variable.
  Instance inst = parse_instance({"2:(2,2,2)"});
  Monomial w = inst.witness;
  std::vector<Exponent> e(w.exponents().begin(), w.exponents().end());
  e[0] -= 1;
  inst.witness = Monomial(e);
  std::ostringstream out;
  EXPECT_EQ(verify_instance(inst, "text", out), kVerificationFailed);
  EXPECT_TRUE(contains(out.str(), "depth 0: NOT confirmed")) << out.str();

  // Dropping a lemma target's power below the ideal also fails.
  Instance lemma = parse_instance({"2:(1,1)"});
  std::vector<Exponent> t(lemma.targets[0].exponents().begin(), lemma.targets[0].exponents().end());
  for (auto& x : t) x = x ? x - 1 : 0;
  lemma.targets = {Monomial(t)};
  std::ostringstream out2;
  EXPECT_EQ(verify_instance(lemma, "json", out2), kVerificationFailed);
  EXPECT_TRUE(contains(out2.str(), "\"holds\": false"));
}

TEST(Cli, ResourceLimitHasOwnExitCode) {
  auto r = call({"betti", "4:(2,2)"});
  EXPECT_EQ(r.code, kResourceLimit) << r.out << r.err;
}

TEST(Cli, PdExamples) {
  auto a = call({"pd", "2:(2,2,2)"});
  ASSERT_EQ(a.code, 0);
  EXPECT_TRUE(contains(a.out, "pd(R/I) = 9\n"));
  EXPECT_TRUE(contains(a.out, "variables: 9 (equal)"));

  auto b = call({"pd", "2:(4,4,0)"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_TRUE(contains(b.out, "pd(R/I) = 15\n"));
  EXPECT_TRUE(contains(b.out, "pd >= p^(p-1) = 9: holds")) << b.out;

  auto c = call({"pd", "4:(2,2)"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_TRUE(contains(c.out, "pd(R/I) = 68\n"));
  EXPECT_TRUE(contains(c.out, "pd >= p^(2p) = 16: holds")) << c.out;

  auto d = call({"pd", "2:(4,4,0)", "--format", "json"});
  EXPECT_TRUE(contains(d.out, "\"pd_formula\": 15"));
  EXPECT_TRUE(contains(d.out, "\"bound\": 9"));
}

TEST(Cli, PdOverflowIsResourceLimit) {
  auto r = call({"pd", "40:(60,60,60)"});
  EXPECT_EQ(r.code, kResourceLimit);
  EXPECT_TRUE(contains(r.err, "overflow")) << r.err;
}

TEST(Cli, PdOfLargeInstanceSkipsConstruction) {
  auto r = call({"pd", "6:(4,4,4)", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "\"generators\": []"));
  // (C(9,5) - 6)^2 * C(9,5) + 18
  EXPECT_TRUE(contains(r.out, "\"variable_count\": 1814418")) << r.out;
}

TEST(Cli, BettiExamples) {
  auto a = call({"betti", "2:(3,1)"});
  ASSERT_EQ(a.code, kOk) << a.out << a.err;
  EXPECT_TRUE(contains(a.out, "pd = 8\n"));
  EXPECT_TRUE(contains(a.out, "reg = 12\n"));
  EXPECT_TRUE(contains(a.out, "total: 1 3 "));
  EXPECT_FALSE(contains(a.out, "FAIL"));

  auto b = call({"betti", "caviglia", "3"});
  ASSERT_EQ(b.code, kOk) << b.out << b.err;
  EXPECT_TRUE(contains(b.out, "reg = 7\n"));

  auto c = call({"betti", "2:(1,0)"});
  ASSERT_EQ(c.code, kOk) << c.out << c.err;
  // x_{j,k} for j, k in {1, 2} and no y: A_2 is empty since M_1 = 0.
  EXPECT_TRUE(contains(c.out, "pd = 4\n")) << c.out;
  EXPECT_EQ(variable_count(FamilyParams{2, {1, 0}}), 4);
  EXPECT_EQ(pd_formula(FamilyParams{2, {1, 0}}), 4);
}

TEST(Cli, BettiTruncationBanner) {
  auto r = call({"betti", "2:(3,1)", "--degree-limit", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(contains(r.out, "truncated resolution"));
  EXPECT_FALSE(contains(r.out, "pd = "));

  auto j = call({"betti", "2:(3,1)", "--format", "json"});
  EXPECT_TRUE(contains(j.out, "\"pd\": 8"));
  EXPECT_TRUE(contains(j.out, "\"reg\": 12"));
}

TEST(Cli, SweepAgreesEverywhere) {
  auto r = call({"sweep", "--max-g", "3", "--max-n", "3", "--max-m", "3", "--jobs", "4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_FALSE(contains(r.out, "MISMATCH"));
  std::smatch m;
  ASSERT_TRUE(std::regex_search(r.out, m, std::regex(R"((\d+) of (\d+) instances)")));
  EXPECT_EQ(m[1], m[2]);
  EXPECT_GT(std::stoi(m[2]), 30);

  auto s = call({"sweep", "--jobs", "1", "--max-g", "3", "--max-n", "3", "--max-m", "3"});
  EXPECT_EQ(s.out, r.out);
}

TEST(Cli, SweepRegSeries) {
  auto r = call({"sweep", "--reg-series", "1:2", "--betti"});
  ASSERT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_TRUE(contains(r.out, "2:(2,1,0)"));
  EXPECT_TRUE(contains(r.out, "2:(2,1,2)  pd 6  vars 6  resolved pd 6 reg 41")) << r.out;
}

TEST(Cli, OutWritesFile) {
  auto path = std::filesystem::temp_directory_path() / "pdlab_cli_out.txt";
  auto r = call({"pd", "2:(2,2,2)", "--out", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_TRUE(contains(text, "pd(R/I) = 9"));
  std::filesystem::remove(path);
}
