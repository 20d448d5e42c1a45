#include "pdlab/cli/app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "pdlab/error.hpp"
#include "pdlab/family/special.hpp"
#include "pdlab/groebner/hilbert.hpp"
#include "pdlab/poly/text.hpp"
#include "pdlab/resolution/resolution.hpp"

namespace pdlab::cli {

using json = nlohmann::ordered_json;

namespace {

// pd --format json lists generators only up to this many variables.
constexpr std::int64_t kMaxRenderedVariables = 4096;

int parse_int(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " must be an integer, got '" + s + "'");
  }
}

int verification_degree_of(const Monomial& witness, const std::vector<Monomial>& targets) {
  std::int64_t d = witness.degree() + 1;
  for (const auto& t : targets) d = std::max(d, t.degree());
  return static_cast<int>(d);
}

std::vector<std::string> names_of(const RingPtr& ring) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < ring->num_vars(); ++v) out.push_back(ring->vars().name(v));
  return out;
}

std::vector<std::string> texts(const std::vector<Monomial>& ms, const RingPtr& ring) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(to_string(m, ring->vars()));
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs, const std::string& sep = " ") {
  std::vector<std::string> s;
  for (auto x : xs) s.push_back(std::to_string(x));
  return join(s, sep);
}

// Preset bounds: three generators in degree p^2 and 2p+1 generators in
// degree 2p+1.
struct Bound {
  std::string statement;
  std::int64_t pd;
  std::int64_t bound;
  bool holds;
};

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i)
    if (__builtin_mul_overflow(r, b, &r)) throw OverflowError("bound overflows int64");
  return r;
}

std::vector<Bound> preset_bounds(const FamilyParams& params, std::int64_t pd) {
  std::vector<Bound> out;
  const int n = params.n();
  if (n >= 2 && params.m.back() == 0) {
    const int p = n;
    if (params == three_generator_preset(p)) {
      std::int64_t b = ipow(p, p - 1);
      out.push_back({"3 generators of degree " + std::to_string(p * p) + " (p = " + std::to_string(p) +
                         "): pd >= p^(p-1) = " + std::to_string(b),
                     pd, b, pd >= b});
    }
  }
  if (n == 2 && params.g % 2 == 0 && params.m[0] == params.g / 2 && params.m[1] == params.g / 2) {
    const int p = params.g / 2;
    std::int64_t b = ipow(p, 2 * p);
    out.push_back({std::to_string(2 * p + 1) + " generators of degree " + std::to_string(2 * p + 1) +
                       " (p = " + std::to_string(p) + "): pd >= p^(2p) = " + std::to_string(b),
                   pd, b, pd >= b});
  }
  return out;
}

json params_json(const Instance& inst) {
  json j;
  j["label"] = inst.label;
  if (inst.params) {
    j["kind"] = "family";
    j["g"] = inst.params->g;
    j["m"] = inst.params->m;
  } else {
    j["kind"] = inst.label.substr(0, inst.label.find(' '));
  }
  return j;
}

json constants_json(const Instance& inst) {
  json j;
  j["degree"] = inst.ideal.generator_degrees().empty() ? 0 : inst.ideal.generator_degrees().front();
  j["variables"] = inst.ideal.ring()->num_vars();
  j["expected_pd"] = inst.expected_pd;
  if (inst.params) {
    auto c = derived_constants(*inst.params);
    j["d"] = c.d;
    j["M"] = c.M;
    std::vector<std::size_t> sizes;
    for (int k = 0; k <= inst.params->n(); ++k) sizes.push_back(enumerate_A(*inst.params, k).size());
    j["A_sizes"] = sizes;
  }
  return j;
}

json generators_json(const IdealPresentation& I) {
  json g = json::array();
  for (const auto& p : I.generators()) g.push_back(to_string(p));
  return g;
}

json envelope(const Instance& inst, json report) {
  json j;
  j["params"] = params_json(inst);
  j["constants"] = constants_json(inst);
  j["generators"] = generators_json(inst.ideal);
  j["report"] = std::move(report);
  return j;
}

std::string m2_name(const Variable& v) {
  switch (v.kind) {
    case Variable::Kind::kX:
      return "x_(" + std::to_string(v.j) + "," + std::to_string(v.k) + ")";
    case Variable::Kind::kY:
      return "y_(" + join_numbers(v.matrix.row_major(), ",") + ")";
    case Variable::Kind::kNamed:
      break;
  }
  auto open = v.name.find('[');
  if (open == std::string::npos) return v.name;
  std::string inside;
  for (char c : v.name.substr(open))
    if (std::isdigit(static_cast<unsigned char>(c)) || c == ',') inside += c;
  return v.name.substr(0, open) + "_(" + inside + ")";
}

std::vector<std::string> m2_names(const RingPtr& ring) {
  std::vector<std::string> names;
  for (std::size_t v = 0; v < ring->num_vars(); ++v) names.push_back(m2_name(ring->vars()[v]));
  return names;
}

std::string m2_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    mpq_class c = t.coef.lift();
    const bool neg = c < 0;
    if (neg) c = -c;
    s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::vector<std::string> factors;
    if (c != 1 || t.mono.is_one()) factors.push_back(c.get_str());
    for (std::size_t v = 0; v < t.mono.size(); ++v) {
      if (t.mono[v] == 0) continue;
      factors.push_back(names[v] + (t.mono[v] > 1 ? "^" + std::to_string(t.mono[v]) : ""));
    }
    s += join(factors, "*");
  }
  return s;
}

std::string render_construct_text(const Instance& inst) {
  const RingPtr& ring = inst.ideal.ring();
  std::ostringstream o;
  o << "instance: " << inst.label << '\n';
  o << "field: " << ring->field().name() << '\n';
  if (inst.params) {
    auto c = derived_constants(*inst.params);
    o << "d_k: " << join_numbers(c.d) << '\n';
    o << "M_k: " << join_numbers(c.M) << '\n';
    std::vector<std::size_t> sizes;
    for (int k = 0; k <= inst.params->n(); ++k) sizes.push_back(enumerate_A(*inst.params, k).size());
    o << "|A_k| (k = 0.." << inst.params->n() << "): " << join_numbers(sizes) << '\n';
  }
  o << "variables (" << ring->num_vars() << "): " << join(names_of(ring), " ") << '\n';
  const auto degs = inst.ideal.generator_degrees();
  o << "generators (" << inst.ideal.size() << ", degree " << (degs.empty() ? 0 : degs.front()) << "):\n";
  for (const auto& g : inst.ideal.generators()) o << "  " << to_string(g) << '\n';
  o << "expected pd: " << inst.expected_pd << '\n';
  return o.str();
}

// Degree limits tried, largest first, when a full resolution exceeds a
// resource bound; the first stays just inside the kernel's degree lanes.
std::vector<int> fallback_limits(const IdealPresentation& I) {
  std::int64_t d = 1;
  for (auto g : I.generator_degrees()) d = std::max(d, g);
  std::vector<int> out;
  for (int l : {127, 96, 64, 48, 32, 24, 16, 12, 8})
    if (l > d) out.push_back(l);
  return out;
}

struct BettiOutcome {
  std::optional<Resolution> res;
  std::string error;
  bool hilbert_ok = false;
};

BettiOutcome compute_betti(const IdealPresentation& I, std::optional<int> limit, bool checks) {
  BettiOutcome out;
  ResolveOptions o;
  o.degree_limit = limit;
  o.minimize = checks;
  try {
    out.res = resolve(I, o);
  } catch (const ResourceLimitError& e) {
    out.error = e.what();
    for (int l : fallback_limits(I)) {
      if (limit && l >= *limit) continue;
      o.degree_limit = l;
      try {
        out.res = resolve(I, o);
        break;
      } catch (const ResourceLimitError&) {
      }
    }
  }
  if (out.res && out.res->betti().complete()) {
    try {
      out.hilbert_ok = hilbert_crosscheck(out.res->betti(), hilbert_numerator(buchberger(I)));
    } catch (const ResourceLimitError&) {
    }
  }
  return out;
}

json betti_json(const BettiOutcome& b) {
  json r;
  if (!b.error.empty()) r["resource_limit"] = b.error;
  if (!b.res) {
    r["betti"] = nullptr;
    return r;
  }
  const BettiTable& t = b.res->betti();
  json triples = json::array();
  for (auto [i, j, v] : t.triples()) triples.push_back({i, j, v});
  r["betti"] = triples;
  r["totals"] = t.totals();
  r["truncated_at"] = t.truncated_at() ? json(*t.truncated_at()) : json(nullptr);
  r["pd"] = t.complete() ? json(pd_of(t)) : json(nullptr);
  r["reg"] = t.complete() ? json(reg_of(t)) : json(nullptr);
  const auto& c = b.res->checks();
  if (c.performed)
    r["checks"] = {{"frame_is_complex", c.frame_is_complex},
                   {"minimal_is_complex", c.minimal_is_complex},
                   {"minimal", c.minimal},
                   {"ranks_agree", c.ranks_agree}};
  if (t.complete()) r["hilbert_crosscheck"] = b.hilbert_ok;
  r["frame_ranks"] = b.res->stats().frame_ranks;
  return r;
}

std::string betti_text(const BettiOutcome& b) {
  std::ostringstream o;
  if (!b.error.empty()) o << "resource limit: " << b.error << '\n';
  if (!b.res) {
    o << "no partial table available\n";
    return o.str();
  }
  const BettiTable& t = b.res->betti();
  if (!t.complete()) o << "*** truncated resolution: entries exact only for internal degrees <= " << *t.truncated_at()
                       << " ***\n";
  o << t.to_text();
  if (t.complete()) {
    o << "pd = " << pd_of(t) << '\n';
    o << "reg = " << reg_of(t) << '\n';
  }
  const auto& c = b.res->checks();
  if (c.performed)
    o << "checks: frame complex " << (c.frame_is_complex ? "ok" : "FAIL") << ", minimal complex "
      << (c.minimal_is_complex ? "ok" : "FAIL") << ", minimal " << (c.minimal ? "ok" : "FAIL") << ", ranks "
      << (c.ranks_agree ? "ok" : "FAIL");
  if (t.complete()) o << (c.performed ? ", " : "checks: ") << "Hilbert " << (b.hilbert_ok ? "ok" : "FAIL");
  if (c.performed || t.complete()) o << '\n';
  return o.str();
}

bool betti_ok(const BettiOutcome& b) {
  if (!b.res || !b.error.empty()) return false;
  const auto& c = b.res->checks();
  if (c.performed && !c.all()) return false;
  return !b.res->betti().complete() || b.hilbert_ok;
}

// Instances of I_{2,(2,...,2,1,i)} (p twos) for i = 0..imax.
std::vector<std::string> reg_series(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("--reg-series expects p:imax");
  int p = parse_int(text.substr(0, colon), "p");
  int imax = parse_int(text.substr(colon + 1), "imax");
  if (p < 0 || imax < 0) throw ValidationError("--reg-series needs p >= 0 and imax >= 0");
  std::vector<std::string> out;
  for (int i = 0; i <= imax; ++i) {
    std::string s = "2:(";
    for (int k = 0; k < p; ++k) s += "2,";
    out.push_back(s + "1," + std::to_string(i) + ")");
  }
  return out;
}

std::vector<std::string> grid(int max_g, int max_n, int max_m) {
  std::vector<std::string> out;
  for (int g = 2; g <= max_g; ++g)
    for (int n = 1; n <= max_n; ++n) {
      std::vector<int> m(n, 0);
      while (true) {
        FamilyParams p{g, m};
        try {
          p.validate();
          out.push_back(p.to_string());
        } catch (const ValidationError&) {
        }
        int i = n - 1;
        while (i >= 0 && ++m[i] > max_m) m[i--] = 0;
        if (i < 0) break;
      }
    }
  return out;
}

}  // namespace

Field parse_field(const std::string& text) {
  if (text == "QQ" || text == "qq" || text == "Q") return Field::rationals();
  std::string digits = text.rfind("F_", 0) == 0 ? text.substr(2) : text;
  long long p;
  try {
    std::size_t pos = 0;
    p = std::stoll(digits, &pos);
    if (pos != digits.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw ValidationError("--field expects an odd prime or QQ, got '" + text + "'");
  }
  if (p <= 2 || p >= (1LL << 31)) throw ValidationError("field characteristic must be an odd prime below 2^31");
  return Field::prime(static_cast<std::uint32_t>(p));
}

Instance parse_instance(const std::vector<std::string>& words, const Field& field) {
  if (words.empty()) throw ParseError("missing instance (g:(m1,...,mn), 'mccullough m n d', or 'caviglia d')");
  const std::string& head = words[0];
  if (head == "mccullough") {
    if (words.size() != 4) throw ParseError("usage: mccullough m n d");
    int m = parse_int(words[1], "m"), n = parse_int(words[2], "n"), d = parse_int(words[3], "d");
    Instance inst{"mccullough " + words[1] + " " + words[2] + " " + words[3], std::nullopt,
                  mccullough_ideal(m, n, d, field), mccullough_socle_witness(m, n, d),
                  mccullough_lemma_targets(m, n, d), mccullough_pd(m, n, d), 0};
    inst.verification_degree = verification_degree_of(inst.witness, inst.targets);
    return inst;
  }
  if (head == "caviglia") {
    if (words.size() != 2) throw ParseError("usage: caviglia d");
    int d = parse_int(words[1], "d");
    Instance inst{"caviglia " + words[1], std::nullopt, caviglia_ideal(d, field), caviglia_socle_witness(d),
                  caviglia_lemma_targets(d), 4, 0};
    inst.verification_degree = verification_degree_of(inst.witness, inst.targets);
    return inst;
  }
  std::string joined = join(words, "");
  FamilyParams p = FamilyParams::parse(joined);
  Instance inst{p.to_string(), p, build_ideal(p, field), socle_witness(p), lemma_targets(p), pd_formula(p), 0};
  inst.verification_degree = verification_degree(p);
  return inst;
}

IdealPresentation parse_ideal_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::optional<Field> field;
  std::vector<std::string> names;
  std::vector<std::string> gens;
  bool in_gens = false;
  auto value = [](const std::string& l) {
    auto c = l.find(':');
    std::string v = l.substr(c + 1);
    while (!v.empty() && std::isspace(static_cast<unsigned char>(v.front()))) v.erase(v.begin());
    return v;
  };
  while (std::getline(in, line)) {
    if (in_gens && line.rfind("  ", 0) == 0) {
      gens.push_back(line.substr(2));
      continue;
    }
    in_gens = false;
    if (line.rfind("field:", 0) == 0) {
      field = parse_field(value(line));
    } else if (line.rfind("variables", 0) == 0) {
      std::istringstream vs(value(line));
      for (std::string n; vs >> n;) names.push_back(n);
    } else if (line.rfind("generators", 0) == 0) {
      in_gens = true;
    }
  }
  if (!field) throw ParseError("ideal text lacks a 'field:' line");
  if (names.empty()) throw ParseError("ideal text lacks a 'variables' line");
  RingPtr ring = PolyRing::make(VariableTable::named(names), *field);
  std::vector<Polynomial> ps;
  for (const auto& g : gens) ps.push_back(parse_polynomial(g, ring));
  return IdealPresentation(ring, std::move(ps));
}

std::string to_macaulay2(const IdealPresentation& ideal, const std::string& title) {
  const RingPtr& ring = ideal.ring();
  const std::vector<std::string> names = m2_names(ring);
  std::ostringstream o;
  if (!title.empty()) o << "-- " << title << '\n';
  const Field& f = ring->field();
  o << "kk = " << (f.is_prime() ? "ZZ/" + std::to_string(f.characteristic()) : std::string("QQ")) << ";\n";
  o << "R = kk[" << join(names, ", ") << ", MonomialOrder => GRevLex];\n";
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) gens.push_back(m2_polynomial(g, names));
  o << "I = ideal(" << join(gens, ",\n    ") << ");\n";
  o << "C = res(I);\n";
  o << "print betti C;\n";
  o << "print(\"pd = \" | toString pdim(R^1/I));\n";
  o << "print(\"reg = \" | toString regularity(R^1/I));\n";
  return o.str();
}

int verify_instance(const Instance& inst, const std::string& format, std::ostream& o) {
  GroebnerOptions go;
  go.degree_limit = inst.verification_degree;
  GroebnerBasis G = buchberger(inst.ideal, go);
  SocleReport s = verify_socle(inst.witness, G, inst.label);
  LemmaReport l = verify_membership(inst.targets, G);
  const RingPtr& ring = inst.ideal.ring();
  if (format == "json") {
    json r;
    r["field"] = inst.ideal.ring()->field().name();
    r["basis_size"] = G.size();
    r["basis_degree_limit"] = inst.verification_degree;
    r["witness"] = s.witness_text;
    r["not_in_ideal"] = s.not_in_ideal;
    json kb = json::array();
    for (const auto& [v, in] : s.killed_by) kb.push_back({{"variable", v}, {"in_ideal", in}});
    r["killed_by"] = kb;
    r["depth_zero"] = s.depth_zero;
    r["implied_pd"] = s.implied_pd;
    r["lemma"] = {{"holds", l.holds},
                  {"targets", texts(l.targets, ring)},
                  {"counterexamples", texts(l.counterexamples, ring)}};
    r["verified"] = s.depth_zero && l.holds;
    o << envelope(inst, r).dump(2) << '\n';
  } else if (format == "m2") {
    o << to_macaulay2(inst.ideal, inst.label);
    o << "S = " << m2_polynomial(Polynomial::monomial(ring, s.witness), m2_names(ring)) << ";\n";
    o << "print(\"S in I: \" | toString(S % I == 0));\n";
    o << "print(\"m*S in I: \" | toString all(gens R, v -> (v*S) % I == 0));\n";
  } else {
    o << "instance: " << inst.label << " over " << inst.ideal.ring()->field().name() << '\n';
    o << "basis: " << G.size() << " elements, exact through degree " << inst.verification_degree << '\n';
    o << "witness S = " << s.witness_text << '\n';
    o << "S in I: " << (s.not_in_ideal ? "no" : "YES") << '\n';
    for (const auto& [v, in] : s.killed_by) o << "  " << v << "*S in I: " << (in ? "yes" : "NO") << '\n';
    o << "depth 0: " << (s.depth_zero ? "confirmed" : "NOT confirmed") << '\n';
    o << "lemma: " << (l.holds ? "holds" : "FAILS") << " (" << l.targets.size() << " targets)\n";
    for (const auto& c : l.counterexamples) o << "  not in I: " << to_string(c, ring->vars()) << '\n';
    if (s.depth_zero) o << "pd(R/I) = " << s.implied_pd << " (number of variables)\n";
  }
  return s.depth_zero && l.holds ? kOk : kVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructions and verifications for ideals of large projective dimension"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  std::string field_text = "32003";
  std::optional<int> degree_limit;
  std::string format = "text";
  std::string out_path;
  unsigned jobs = 1;
  std::vector<std::string> words;

  auto common = [&](CLI::App* sub, bool with_limit) {
    sub->add_option("instance", words, "g:(m1,...,mn) | mccullough m n d | caviglia d")->expected(1, 4);
    sub->add_option("--field", field_text, "odd prime or QQ")->capture_default_str();
    sub->add_option("--format", format, "text | json | m2")
        ->check(CLI::IsMember({"text", "json", "m2"}))
        ->capture_default_str();
    sub->add_option("--out", out_path, "write output to this file");
    if (with_limit) sub->add_option("--degree-limit", degree_limit, "truncate at this internal degree")->check(CLI::PositiveNumber);
  };
  auto* construct = app.add_subcommand("construct", "print the ideal, its ring, and derived constants");
  common(construct, false);
  auto* verify = app.add_subcommand("verify", "certify depth zero and the membership lemma");
  common(verify, false);
  auto* pd = app.add_subcommand("pd", "projective dimension from the closed formula");
  common(pd, false);
  auto* betti = app.add_subcommand("betti", "minimal graded free resolution and Betti table");
  common(betti, true);
  bool no_checks = false;
  betti->add_flag("--no-checks", no_checks, "skip explicit minimalization and consistency checks");

  auto* sweep = app.add_subcommand("sweep", "run pd (and optionally betti) over many parameters");
  int max_g = 4, max_n = 3, max_m = 4;
  bool with_betti = false;
  std::string series;
  sweep->add_option("params", words, "explicit parameter strings");
  sweep->add_option("--max-g", max_g)->capture_default_str();
  sweep->add_option("--max-n", max_n)->capture_default_str();
  sweep->add_option("--max-m", max_m)->capture_default_str();
  sweep->add_option("--reg-series", series, "p:imax, the instances 2:(2,...,2,1,i) with p twos");
  sweep->add_flag("--betti", with_betti, "also resolve each instance (exploratory)");
  sweep->add_option("--field", field_text)->capture_default_str();
  sweep->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  sweep->add_option("--out", out_path);
  sweep->add_option("--degree-limit", degree_limit)->check(CLI::PositiveNumber);
  sweep->add_option("--jobs", jobs, "parallel workers")->check(CLI::Range(1u, 256u))->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  std::ofstream file;
  std::ostream* o = &out;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kInvalidInput;
    }
    o = &file;
  }

  try {
    const Field field = parse_field(field_text);

    if (*construct) {
      Instance inst = parse_instance(words, field);
      std::optional<SubfamilyMatch> match;
      if (inst.params) match = identify_subfamily(*inst.params, field);
      if (format == "m2") {
        *o << to_macaulay2(inst.ideal, inst.label);
      } else if (format == "json") {
        json r;
        r["field"] = field.name();
        r["variables"] = names_of(inst.ideal.ring());
        if (match)
          r["identification"] = {{"name", match->name}, {"substitution", match->substitution_text},
                                 {"verified", match->verified}};
        else
          r["identification"] = nullptr;
        *o << envelope(inst, r).dump(2) << '\n';
      } else {
        *o << render_construct_text(inst);
        if (match)
          *o << "# identified with " << match->name << (match->verified ? "" : " (NOT verified)") << " via "
             << match->substitution_text << '\n';
      }
      return kOk;
    }

    if (*verify) return verify_instance(parse_instance(words, field), format, *o);

    if (*pd) {
      json params_j, constants_j, generators_j = json::array();
      std::int64_t formula, count;
      std::string label;
      std::vector<Bound> bounds;
      if (!words.empty() && (words[0] == "mccullough" || words[0] == "caviglia")) {
        Instance inst = parse_instance(words, field);
        label = inst.label;
        formula = inst.expected_pd;
        count = static_cast<std::int64_t>(inst.ideal.ring()->num_vars());
        params_j = params_json(inst);
        constants_j = constants_json(inst);
        generators_j = generators_json(inst.ideal);
      } else {
        // Formula and count only; the ideal itself may be far too large to build.
        FamilyParams p = FamilyParams::parse(join(words, ""));
        label = p.to_string();
        formula = pd_formula(p);
        count = variable_count(p);
        bounds = preset_bounds(p, formula);
        auto c = derived_constants(p);
        std::vector<std::int64_t> sizes;
        for (int k = 0; k <= p.n(); ++k) sizes.push_back(count_A(p, k));
        params_j = {{"label", label}, {"kind", "family"}, {"g", p.g}, {"m", p.m}};
        constants_j = {{"degree", c.degree()}, {"variables", count}, {"expected_pd", formula},
                       {"d", c.d},           {"M", c.M},             {"A_sizes", sizes}};
        if (count <= kMaxRenderedVariables) generators_j = generators_json(build_ideal(p, field));
      }
      if (format == "json") {
        json r;
        r["pd_formula"] = formula;
        r["variable_count"] = count;
        json b = json::array();
        for (const auto& x : bounds) b.push_back({{"statement", x.statement}, {"bound", x.bound}, {"holds", x.holds}});
        r["bounds"] = b;
        json j;
        j["params"] = params_j;
        j["constants"] = constants_j;
        j["generators"] = generators_j;
        j["report"] = r;
        *o << j.dump(2) << '\n';
      } else {
        *o << "instance: " << label << '\n';
        *o << "pd(R/I) = " << formula << '\n';
        *o << "variables: " << count << (count == formula ? " (equal)" : " (DIFFERENT)") << '\n';
        for (const auto& x : bounds) *o << x.statement << ": " << (x.holds ? "holds" : "FAILS") << '\n';
      }
      return count == formula ? kOk : kVerificationFailed;
    }

    if (*betti) {
      Instance inst = parse_instance(words, field);
      BettiOutcome b = compute_betti(inst.ideal, degree_limit, !no_checks);
      if (format == "json") {
        *o << envelope(inst, betti_json(b)).dump(2) << '\n';
      } else if (format == "m2") {
        *o << to_macaulay2(inst.ideal, inst.label);
      } else {
        *o << "instance: " << inst.label << " over " << field.name() << '\n' << betti_text(b);
      }
      if (!b.error.empty()) return kResourceLimit;
      return betti_ok(b) ? kOk : kVerificationFailed;
    }

    if (*sweep) {
      std::vector<std::string> items = words;
      if (!series.empty()) {
        auto s = reg_series(series);
        items.insert(items.end(), s.begin(), s.end());
      }
      if (items.empty()) items = grid(max_g, max_n, max_m);
      for (const auto& s : items) FamilyParams::parse(s);

      std::vector<json> rows(items.size());
      std::vector<std::string> lines(items.size());
      std::vector<int> codes(items.size(), kOk);
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t i; (i = next++) < items.size();) {
          json r;
          std::ostringstream line;
          try {
            FamilyParams p = FamilyParams::parse(items[i]);
            std::int64_t f = pd_formula(p), c = variable_count(p);
            r = {{"params", p.to_string()}, {"pd_formula", f}, {"variable_count", c}, {"agree", f == c}};
            line << p.to_string() << "  pd " << f << "  vars " << c << (f == c ? "" : "  MISMATCH");
            if (f != c) codes[i] = kVerificationFailed;
            if (with_betti) {
              BettiOutcome b = compute_betti(build_ideal(p, field), degree_limit, false);
              r["betti"] = betti_json(b);
              if (b.res && b.res->betti().complete())
                line << "  resolved pd " << pd_of(b.res->betti()) << " reg " << reg_of(b.res->betti());
              else if (b.res)
                line << "  truncated at " << *b.res->betti().truncated_at() << ", totals "
                     << join_numbers(b.res->betti().totals());
              if (!b.error.empty()) {
                line << "  (resource limit)";
                codes[i] = kResourceLimit;
              }
            }
          } catch (const ResourceLimitError& e) {
            r["error"] = e.what();
            line << items[i] << "  resource limit: " << e.what();
            codes[i] = kResourceLimit;
          } catch (const OverflowError& e) {
            r["error"] = e.what();
            line << items[i] << "  overflow: " << e.what();
            codes[i] = kResourceLimit;
          }
          rows[i] = std::move(r);
          lines[i] = line.str();
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(work);
      work();
      for (auto& t : pool) t.join();

      int code = kOk;
      for (int c : codes) code = std::max(code, c);
      if (format == "json") {
        json j;
        j["params"] = {{"max_g", max_g}, {"max_n", max_n}, {"max_m", max_m}, {"count", items.size()}};
        j["constants"] = json::object();
        j["generators"] = json::array();
        j["report"] = {{"instances", rows}};
        *o << j.dump(2) << '\n';
      } else {
        for (const auto& l : lines) *o << l << '\n';
        std::size_t agree = 0;
        for (const auto& r : rows) agree += r.value("agree", false);
        *o << agree << " of " << items.size() << " instances: formula equals variable count\n";
      }
      return code;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const OverflowError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace pdlab::cli
