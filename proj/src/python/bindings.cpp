#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <sstream>

#include "pdlab/cli/app.hpp"
#include "pdlab/error.hpp"
#include "pdlab/family/special.hpp"
#include "pdlab/groebner/hilbert.hpp"
#include "pdlab/poly/text.hpp"
#include "pdlab/resolution/resolution.hpp"

namespace py = pybind11;
using namespace pdlab;

namespace {

std::vector<std::vector<std::vector<int>>> matrices(const std::vector<ExponentMatrix>& ms) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& a : ms) {
    std::vector<std::vector<int>> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) rows[r].push_back(a.at(r, c));
    out.push_back(std::move(rows));
  }
  return out;
}

std::vector<std::string> variable_names(const IdealPresentation& I) {
  std::vector<std::string> out;
  for (std::size_t v = 0; v < I.ring()->num_vars(); ++v) out.push_back(I.ring()->vars().name(v));
  return out;
}

py::dict betti_dict(const IdealPresentation& I, std::optional<int> degree_limit, bool minimize) {
  ResolveOptions o;
  o.degree_limit = degree_limit;
  o.minimize = minimize;
  Resolution res = resolve(I, o);
  const BettiTable& t = res.betti();
  py::dict entries;
  for (auto [i, j, v] : t.triples()) entries[py::make_tuple(i, j)] = v;
  py::dict d;
  d["betti"] = entries;
  d["totals"] = t.totals();
  d["complete"] = t.complete();
  d["pd"] = t.complete() ? py::object(py::int_(pd_of(t))) : py::none();
  d["reg"] = t.complete() ? py::object(py::int_(reg_of(t))) : py::none();
  d["checks"] = res.checks().all();
  d["hilbert"] = t.complete() && hilbert_crosscheck(t, hilbert_numerator(buchberger(I)));
  d["text"] = t.to_text();
  return d;
}

}  // namespace

PYBIND11_MODULE(_pdlab, m) {
  m.doc() = "Ideals of large projective dimension: construction, depth-zero certificates, Betti tables";

  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<OverflowError>(m, "OverflowError", PyExc_OverflowError);
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<Field>(m, "Field")
      .def_static("prime", &Field::prime, py::arg("p") = Field::kDefaultPrime)
      .def_static("rationals", &Field::rationals)
      .def_property_readonly("characteristic", &Field::characteristic)
      .def("__repr__", &Field::name)
      .def(py::self == py::self);

  py::class_<FamilyParams>(m, "FamilyParams")
      .def(py::init([](int g, std::vector<int> mm) {
             FamilyParams p{g, std::move(mm)};
             p.validate();
             return p;
           }),
           py::arg("g"), py::arg("m"))
      .def_static("parse", &FamilyParams::parse)
      .def_readonly("g", &FamilyParams::g)
      .def_readonly("m", &FamilyParams::m)
      .def_property_readonly("n", &FamilyParams::n)
      .def("__str__", &FamilyParams::to_string)
      .def("__repr__", [](const FamilyParams& p) { return "FamilyParams('" + p.to_string() + "')"; })
      .def(py::self == py::self);

  py::class_<IdealPresentation>(m, "Ideal")
      .def_property_readonly("variables", &variable_names)
      .def_property_readonly("generators",
                             [](const IdealPresentation& I) {
                               std::vector<std::string> out;
                               for (const auto& g : I.generators()) out.push_back(to_string(g));
                               return out;
                             })
      .def_property_readonly("degrees", &IdealPresentation::generator_degrees)
      .def_property_readonly("field", [](const IdealPresentation& I) { return I.ring()->field(); })
      .def("groebner_basis",
           [](const IdealPresentation& I, std::optional<int> degree_limit) {
             GroebnerOptions o;
             o.degree_limit = degree_limit;
             std::vector<std::string> out;
             for (const auto& g : buchberger(I, o).elements()) out.push_back(to_string(g));
             return out;
           },
           py::arg("degree_limit") = py::none())
      .def("contains",
           [](const IdealPresentation& I, const std::string& poly) {
             Polynomial p = parse_polynomial(poly, I.ring());
             GroebnerOptions o;
             o.degree_limit = static_cast<int>(std::max<std::int64_t>(p.total_degree(), 0));
             return is_member(p, buchberger(I, o));
           })
      .def("to_macaulay2", [](const IdealPresentation& I) { return cli::to_macaulay2(I); })
      .def("__len__", &IdealPresentation::size);

  m.def("derived_constants", [](const FamilyParams& p) {
    auto c = derived_constants(p);
    py::dict d;
    d["d"] = c.d;
    d["M"] = c.M;
    d["degree"] = c.degree();
    return d;
  });
  m.def("enumerate_A", [](const FamilyParams& p, int k) { return matrices(enumerate_A(p, k)); });
  m.def("count_A", &count_A);
  m.def("pd_formula", &pd_formula);
  m.def("variable_count", &variable_count);
  m.def("build_ideal", &build_ideal, py::arg("params"), py::arg("field") = Field::prime());
  m.def("caviglia_ideal", &caviglia_ideal, py::arg("d"), py::arg("field") = Field::prime());
  m.def("mccullough_ideal", &mccullough_ideal, py::arg("m"), py::arg("n"), py::arg("d"),
        py::arg("field") = Field::prime());
  m.def("three_generator_preset", &three_generator_preset);
  m.def("odd_generator_preset", &odd_generator_preset);

  m.def(
      "verify",
      [](const FamilyParams& p, const Field& field) {
        GroebnerOptions o;
        o.degree_limit = verification_degree(p);
        GroebnerBasis G = buchberger(build_ideal(p, field), o);
        SocleReport s = verify_socle(p, G);
        LemmaReport l = verify_lemma(p, G);
        py::dict d;
        d["witness"] = s.witness_text;
        d["not_in_ideal"] = s.not_in_ideal;
        d["killed_by"] = s.killed_by;
        d["depth_zero"] = s.depth_zero;
        d["implied_pd"] = s.implied_pd;
        d["lemma"] = l.holds;
        return d;
      },
      py::arg("params"), py::arg("field") = Field::prime());

  m.def("betti", &betti_dict, py::arg("ideal"), py::arg("degree_limit") = py::none(), py::arg("minimize") = true);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      "Runs the command-line front end; returns (exit code, stdout, stderr).");
}
