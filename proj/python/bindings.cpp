// Python bindings. Exact values cross the boundary as "p/q" strings; the
// Python package turns them into fractions.Fraction.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "tdpair/cob.hpp"
#include "tdpair/errors.hpp"
#include "tdpair/overlap.hpp"
#include "tdpair/tdcore.hpp"
#include "tdpair/verify.hpp"

namespace py = pybind11;
using namespace tdpair;

namespace {

using Table = std::vector<std::vector<std::string>>;

Table to_table(const ExactMatrix& m) {
  Table out;
  for (const auto& row : m.to_dense()) {
    auto& r = out.emplace_back();
    for (const auto& v : row) r.push_back(v.to_string());
  }
  return out;
}

std::vector<std::vector<int>> basis_of(const TDParameters& p) {
  std::vector<std::vector<int>> out;
  for (const auto& n : *p.basis()) {
    auto& v = out.emplace_back();
    for (std::size_t k = 0; k < n.size(); ++k) v.push_back(n[k]);
  }
  return out;
}

Table operator_table(const TDParameters& p, const std::string& name, const std::string& basis) {
  if (name == "C" || name == "Cbar" || name == "D" || name == "Dbar") {
    if (basis != "split") throw InvalidParameters("change-of-basis matrices exist in the split basis only");
    return to_table(cob_matrix(p, parse_cob_kind(name)));
  }
  ExactMatrix m = build_operator(p, parse_operator(name));
  if (basis == "eigA") {
    m = cob_matrix(p, CobKind::Cbar) * m * cob_matrix(p, CobKind::C);
  } else if (basis == "eigAstar") {
    m = cob_matrix(p, CobKind::Dbar) * m * cob_matrix(p, CobKind::D);
  } else if (basis != "split") {
    throw ParseError("unknown basis '" + basis + "'");
  }
  return to_table(m);
}

VerificationReport suite(const TDParameters& p, const std::optional<std::vector<std::string>>& names,
                         const std::optional<std::string>& beta, int word_length) {
  std::vector<Check> checks = default_checks();
  if (names) {
    checks.clear();
    for (const auto& n : *names) checks.push_back(parse_check(n));
  }
  SuiteOptions options;
  if (beta) options.beta_override = FieldElement::parse(*beta);
  options.irreducibility_word_length = word_length;
  return run_suite(p, checks, options);
}

py::dict check_to_dict(const CheckResult& c) {
  py::dict d;
  d["check"] = c.check;
  d["status"] = to_string(c.status);
  d["note"] = c.note;
  if (c.witness) {
    py::dict w;
    w["description"] = c.witness->description;
    w["row"] = c.witness->row ? py::cast(c.witness->row->to_string()) : py::none();
    w["col"] = c.witness->col ? py::cast(c.witness->col->to_string()) : py::none();
    w["expected"] = c.witness->expected;
    w["actual"] = c.witness->actual;
    d["witness"] = w;
  } else {
    d["witness"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact tridiagonal pairs of type II";

  py::register_exception<Error>(m, "Error");
  py::register_exception<ParseError>(m, "ParseError", m.attr("Error"));
  py::register_exception<InvalidParameters>(m, "InvalidParameters", m.attr("Error"));
  py::register_exception<InvalidShape>(m, "InvalidShape", m.attr("Error"));

  py::class_<TDParameters>(m, "Parameters")
      .def_static("from_json", &TDParameters::from_json)
      .def("to_json", &TDParameters::to_json)
      .def_property_readonly("shape", [](const TDParameters& p) {
        std::vector<int> ell;
        for (std::size_t k = 0; k < p.N(); ++k) ell.push_back(p.shape[k]);
        return ell;
      })
      .def_property_readonly("dimension", [](const TDParameters& p) { return p.shape.dimension(); })
      .def("basis", &basis_of, "split-basis multi-indices in graded-lex order")
      .def("__repr__", [](const TDParameters& p) { return "Parameters(" + p.to_json() + ")"; });

  py::class_<VerificationReport>(m, "Report")
      .def_property_readonly("passed", &VerificationReport::passed)
      .def_property_readonly("checks", [](const VerificationReport& r) {
        py::list out;
        for (const auto& c : r.checks) out.append(check_to_dict(c));
        return out;
      })
      .def("to_text", &VerificationReport::to_text, py::arg("include_timing") = true)
      .def("to_json", &VerificationReport::to_json, py::arg("include_timing") = true);

  m.def(
      "random_parameters",
      [](const std::vector<int>& shape, std::uint64_t seed, int bound) {
        return random_valid_parameters(Shape(shape), seed, bound);
      },
      py::arg("shape"), py::arg("seed"), py::arg("bound") = 10);
  m.def("validate", &validate_parameters, py::arg("params"));
  m.def("build_operator_raw", &operator_table, py::arg("params"), py::arg("name"), py::arg("basis") = "split");
  m.def(
      "overlap_T_raw",
      [](const TDParameters& p, const std::string& method) { return to_table(overlap_T_table(p, parse_t_method(method))); },
      py::arg("params"), py::arg("method") = "direct_sum");
  m.def(
      "overlap_U_raw",
      [](const TDParameters& p, const std::string& method) { return to_table(overlap_U_table(p, parse_u_method(method))); },
      py::arg("params"), py::arg("method") = "direct_sum");
  m.def("run_suite", &suite, py::arg("params"), py::arg("checks") = std::nullopt, py::arg("beta") = std::nullopt,
        py::arg("word_length") = 12);
  m.def("shape_profile", [](const std::vector<int>& shape) { return shape_profile(Shape(shape)); });
}
