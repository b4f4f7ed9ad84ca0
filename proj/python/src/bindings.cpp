// Python bindings. Structured results cross the boundary as JSON text using
// the same serialization as the command-line tool; the package wrapper decodes it.
#include "modrep/cli.hpp"
#include "modrep/errors.hpp"
#include "modrep/lattice.hpp"
#include "modrep/normal_forms.hpp"
#include "modrep/serialize.hpp"
#include "modrep/structure.hpp"
#include "modrep/theorem_lab.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <variant>

namespace py = pybind11;
using namespace modrep;
using nlohmann::json;

namespace {

using SpecArg = std::variant<std::string, std::vector<Int>>;

FinModule toModule(const SpecArg& spec) {
  if (const auto* text = std::get_if<std::string>(&spec)) return parseSpec(*text).module;
  return makeModule(std::get<std::vector<Int>>(spec));
}

LatticeOptions capped(std::uint64_t max_submodules) {
  LatticeOptions o;
  o.max_submodules = max_submodules;
  return o;
}

RepKind toKind(const std::string& kind) {
  if (kind == "second") return RepKind::Second;
  if (kind == "secondary") return RepKind::Secondary;
  throw ValidationError("kind must be 'second' or 'secondary', got '" + kind + "'");
}

// Matrices travel as nested lists of decimal strings so no precision is lost.
IntMatrix toMatrix(const std::vector<std::vector<std::string>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix a(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("ragged matrix");
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = BigInt(rows[r][c]);
  }
  return a;
}

std::vector<std::vector<std::string>> fromMatrix(const IntMatrix& a) {
  std::vector<std::vector<std::string>> out(a.rows(), std::vector<std::string>(a.cols()));
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out[r][c] = a(r, c).str();
  return out;
}

constexpr std::uint64_t kDefaultCap = LatticeOptions{}.max_submodules;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite abelian groups as Z-modules: submodule lattices, second representations, structure.";

  auto base = py::register_exception<Error>(m, "ModrepError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ResourceCapError>(m, "ResourceCapError", base.ptr());
  py::register_exception<UnknownTheoremError>(m, "UnknownTheoremError", base.ptr());

  m.def("parse_spec", [](const std::string& text) {
    const auto s = parseSpec(text);
    return std::make_pair(s.factors, s.module.invariantFactors());
  }, py::arg("text"), "Parse 'Z2^3 + Z9' into (factors, invariant_factors).");

  m.def("invariant_factors", [](const SpecArg& spec) { return toModule(spec).invariantFactors(); },
        py::arg("spec"));

  m.def("count_submodules", [](const SpecArg& spec) { return countSubmodules(toModule(spec)).str(); },
        py::arg("spec"));

  m.def("submodules_json", [](const SpecArg& spec, std::uint64_t cap) {
    json list = json::array();
    for (const auto& s : enumerateSubmodules(toModule(spec), capped(cap))) list.push_back(toJson(s));
    return list.dump();
  }, py::arg("spec"), py::arg("max_submodules") = kDefaultCap);

  m.def("spec_second_json", [](const SpecArg& spec, std::uint64_t cap) {
    json list = json::array();
    for (const auto& s : specSecond(toModule(spec), capped(cap))) {
      auto j = toJson(s);
      j["prime"] = isSecond(s)->p();
      list.push_back(j);
    }
    return list.dump();
  }, py::arg("spec"), py::arg("max_submodules") = kDefaultCap);

  m.def("att_json", [](const SpecArg& spec, std::uint64_t cap) {
    return toJson(attAll(toModule(spec), capped(cap))).dump();
  }, py::arg("spec"), py::arg("max_submodules") = kDefaultCap);

  m.def("representation_json", [](const SpecArg& spec, const std::string& kind, std::uint64_t cap) {
    const auto r = findRepresentation(toModule(spec), toKind(kind), capped(cap));
    return r ? toJson(*r).dump() : std::string("null");
  }, py::arg("spec"), py::arg("kind") = "second", py::arg("max_submodules") = kDefaultCap);

  m.def("all_minimal_representations_json", [](const SpecArg& spec, const std::string& kind, std::uint64_t cap) {
    SecondOptions o;
    o.lattice = capped(cap);
    json list = json::array();
    for (const auto& r : allMinimalRepresentations(toModule(spec), toKind(kind), o)) list.push_back(toJson(r));
    return list.dump();
  }, py::arg("spec"), py::arg("kind") = "second", py::arg("max_submodules") = kDefaultCap);

  m.def("classify_json", [](const SpecArg& spec, std::uint64_t cap) {
    return toJson(classifyModule(toModule(spec), capped(cap))).dump();
  }, py::arg("spec"), py::arg("max_submodules") = kDefaultCap);

  m.def("theorem_ids", &theoremIds);

  m.def("verify_json", [](const std::string& id, const SpecArg& spec) {
    return toJson(verifyTheorem(id, toModule(spec))).dump();
  }, py::arg("theorem_id"), py::arg("spec"));

  m.def("run_suite_json", [](Int max_order, std::vector<std::string> ids, unsigned jobs) {
    if (ids.empty()) ids = theoremIds();
    SuiteOptions o;
    o.jobs = jobs;
    Report r;
    {
      py::gil_scoped_release release;
      r = runSuite(max_order, ids, o);
    }
    return toJson(r).dump();
  }, py::arg("max_order"), py::arg("theorem_ids") = std::vector<std::string>{}, py::arg("jobs") = 1u);

  m.def("hermite_normal_form", [](const std::vector<std::vector<std::string>>& rows) {
    const auto r = hermiteNormalForm(toMatrix(rows));
    return std::make_pair(fromMatrix(r.h), fromMatrix(r.u));
  }, py::arg("matrix"));

  m.def("smith_normal_form", [](const std::vector<std::vector<std::string>>& rows) {
    const auto r = smithNormalForm(toMatrix(rows));
    return std::make_tuple(fromMatrix(r.s), fromMatrix(r.u), fromMatrix(r.v));
  }, py::arg("matrix"));

  m.def("run_command", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = runCommand(args, out, err);
    }
    return std::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
