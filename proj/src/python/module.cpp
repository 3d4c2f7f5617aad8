#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hbcells/betti.hpp"
#include "hbcells/cli.hpp"
#include "hbcells/enumeration.hpp"
#include "hbcells/errors.hpp"
#include "hbcells/generic_cells.hpp"
#include "hbcells/hilbert_burch.hpp"
#include "hbcells/io.hpp"
#include "hbcells/parse.hpp"

namespace py = pybind11;
using namespace hbcells;

namespace {

Field field_of(const std::string& s) {
  if (s == "q") return Field::rationals();
  if (s.starts_with("p:")) return Field::prime_field(static_cast<std::uint32_t>(std::stoul(s.substr(2))));
  throw UsageError("field must be 'q' or 'p:<prime>'");
}

IdealBasis ideal_of(const std::string& gens, const std::string& field) {
  return IdealBasis(2, parse_polynomial_list(gens, default_variable_names(2), field_of(field)));
}

std::vector<std::string> strings(const std::vector<Polynomial>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Hilbert-Burch matrices and Grobner cells of k[x,y]";

  static py::exception<UsageError> usage_error(m, "UsageError", PyExc_ValueError);
  static py::exception<DomainError> domain_error(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const UsageError& e) {
      py::set_error(usage_error, e.what());
    } catch (const DomainError& e) {
      py::set_error(domain_error, e.what());
    }
  });

  py::class_<Staircase>(m, "Staircase")
      .def_static("from_m", &Staircase::from_m, py::arg("m"))
      .def_static("from_d", &Staircase::from_d, py::arg("d"))
      .def_static("parse", [](const std::string& s) { return parse_staircase(s); })
      .def_property_readonly("m", [](const Staircase& e) { return e.m(); })
      .def_property_readonly("d", &Staircase::d_vector)
      .def_property_readonly("t", &Staircase::t)
      .def_property_readonly("colength", &Staircase::colength)
      .def("is_lex_segment", &Staircase::is_lex_segment)
      .def("hilbert_function", [](const Staircase& e) { return hilbert_function(e); })
      .def("__eq__", [](const Staircase& a, const Staircase& b) { return a == b; })
      .def("__hash__", [](const Staircase& e) { return py::hash(py::tuple(py::cast(e.m()))); })
      .def("__repr__", &Staircase::to_string);

  m.def("enumerate_staircases", &enumerate_staircases, py::arg("colength"));

  m.def(
      "cell_dimensions",
      [](const Staircase& e) {
        std::map<std::string, std::uint64_t> out;
        for (CellKind k : kAllCellKinds) out[to_string(k)] = cell_dimension(e, k);
        return out;
      },
      py::arg("staircase"));

  m.def(
      "frame_json", [](const Staircase& e) { return frame_to_json(canonical_frame(e)).dump(); }, py::arg("staircase"));

  m.def(
      "random_cell_matrix_json",
      [](const Staircase& e, const std::string& kind, std::uint64_t seed, const std::string& field) {
        return cell_matrix_to_json(random_cell_matrix(e, parse_cell_kind(kind), seed, field_of(field))).dump();
      },
      py::arg("staircase"), py::arg("kind") = "V0", py::arg("seed") = 1, py::arg("field") = "q");

  m.def(
      "minors",
      [](const std::string& matrix_json, const std::string& field) {
        return strings(minors_ideal(cell_matrix_from_json(Json::parse(matrix_json), field_of(field))).elements);
      },
      py::arg("matrix_json"), py::arg("field") = "q");

  m.def(
      "groebner_basis",
      [](const std::string& gens, const std::string& field) {
        return strings(buchberger_reduced(ideal_of(gens, field)).elements);
      },
      py::arg("generators"), py::arg("field") = "q");

  m.def(
      "canonicalize",
      [](const std::string& gens, const std::string& field) {
        return cell_matrix_to_json(canonical_matrix(ideal_of(gens, field)).n).dump();
      },
      py::arg("generators"), py::arg("field") = "q");

  m.def(
      "cell_kinds",
      [](const std::string& gens, const std::string& field) {
        std::vector<std::string> out;
        for (CellKind k : cell_kind_of_ideal(ideal_of(gens, field))) out.push_back(to_string(k));
        return out;
      },
      py::arg("generators"), py::arg("field") = "q");

  m.def(
      "betti_numbers",
      [](const Staircase& e, const std::vector<long>& p) {
        std::vector<Scalar> values(p.begin(), p.end());
        std::map<int, std::pair<int, int>> out;
        for (const auto& [j, b] : betti_numbers(e, values)) out[j] = {b.beta0, b.beta1};
        return out;
      },
      py::arg("staircase"), py::arg("p"));

  m.def(
      "stratum_equations",
      [](const Staircase& e, int j, int u) {
        const std::size_t n = s_set(e).size();
        auto names = parameter_names(n);
        std::vector<std::string> out;
        for (const auto& q : stratum_equations(stratum_descriptor(e, j, u), n)) out.push_back(q.to_string(names));
        return out;
      },
      py::arg("staircase"), py::arg("j"), py::arg("u"));

  m.def(
      "g_dim",
      [](const std::vector<int>& h, const std::string& method) {
        if (method != "bella" && method != "brutta") throw UsageError("method must be 'bella' or 'brutta'");
        return g_dim(HSeries(h), method == "bella" ? GDimMethod::Bella : GDimMethod::Brutta);
      },
      py::arg("h"), py::arg("method") = "bella");

  m.def(
      "census_json", [](int d) { return census_to_json(cell_census(d)).dump(); }, py::arg("colength"));
  m.def("brute_force_ideal_count", &brute_force_ideal_count, py::arg("colength"), py::arg("q"));

  m.def(
      "generic_json",
      [](const std::string& gens, std::size_t nvars, bool graded, bool log) {
        auto names = default_variable_names(nvars);
        std::vector<Monomial> monos;
        for (const auto& p : parse_polynomial_list(gens, names)) {
          if (p.size() != 1 || !p.leading_coefficient().is_one()) throw UsageError("generators must be monic monomials");
          monos.push_back(p.leading_monomial());
        }
        GenericFamily f = generic_family(monos, nvars, graded);
        return elimination_to_json(eliminate_linear(buchberger_equations(f), f.nparams()), log).dump();
      },
      py::arg("generators"), py::arg("nvars") = 2, py::arg("graded") = true, py::arg("log") = false);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
