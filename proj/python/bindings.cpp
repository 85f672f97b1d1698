#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gradedrep/contraction.hpp"
#include "gradedrep/gt.hpp"
#include "gradedrep/io.hpp"
#include "gradedrep/lie_algebra.hpp"
#include "gradedrep/simulation.hpp"

namespace py = pybind11;
using namespace gradedrep;

namespace {

using Nested = std::vector<std::vector<py::object>>;

contract::RationalTable to_table(const Nested& rows, const std::vector<int>& orders) {
  std::vector<Rational> values;
  for (const auto& row : rows)
    for (const auto& v : row) values.push_back(parse_rational(py::str(v)));
  return contract::RationalTable(AbelianGroup(orders), std::move(values));
}

py::list from_table(const contract::RationalTable& t) {
  const auto fraction = py::module_::import("fractions").attr("Fraction");
  py::list rows;
  for (int a = 0; a < t.size(); ++a) {
    py::list row;
    for (int b = 0; b < t.size(); ++b) {
      const auto& q = t.at(a, b);
      if (q.denominator() == 1)
        row.append(py::int_(q.numerator()));
      else
        row.append(fraction(q.numerator(), q.denominator()));
    }
    rows.append(row);
  }
  return rows;
}

// "inner:n,s" or "outer:n".
sim::Automorphism parse_auto(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("automorphism must be inner:n,s or outer:n");
  const auto kind = spec.substr(0, colon);
  std::vector<int> args;
  std::stringstream ss(spec.substr(colon + 1));
  for (std::string item; std::getline(ss, item, ',');) args.push_back(std::stoi(item));
  if (kind == "inner" && args.size() == 2) return sim::auto_inner(args[0], args[1]);
  if (kind == "outer" && args.size() == 1) return sim::auto_outer(args[0]);
  throw std::invalid_argument("automorphism must be inner:n,s or outer:n");
}

std::map<std::string, Matrix> parts_of(const lie::Grading& g) {
  std::map<std::string, Matrix> out;
  for (const auto& [label, basis] : g.parts) out[label.label()] = basis;
  return out;
}

}  // namespace

PYBIND11_MODULE(_gradedrep, m) {
  m.doc() = "Gel'fand-Tseitlin representations, gradings and graded contractions of sl(n)";

  py::class_<Report>(m, "Report")
      .def_readonly("ok", &Report::ok)
      .def_readonly("max_residual", &Report::max_residual)
      .def_readonly("violations", &Report::violations)
      .def("__bool__", [](const Report& r) { return r.ok; })
      .def("__repr__", [](const Report& r) {
        return "Report(ok=" + std::string(r.ok ? "True" : "False") + ", max_residual=" + io::format_real(r.max_residual) + ")";
      });

  py::class_<lie::LieAlgebra>(m, "LieAlgebra")
      .def_property_readonly("dim", &lie::LieAlgebra::dim)
      .def_property_readonly("basis_names", &lie::LieAlgebra::basis_names)
      .def("bracket", &lie::LieAlgebra::bracket)
      .def("constants",
           [](const lie::LieAlgebra& a) {
             std::vector<std::tuple<int, int, int, Complex>> out;
             for (const auto& c : a.constants()) out.emplace_back(c.i, c.j, c.l, c.value);
             return out;
           })
      .def("check_jacobi", &lie::check_jacobi, py::arg("tol") = kDefaultTolerance)
      .def("to_json", [](const lie::LieAlgebra& a) { return io::algebra_to_json(a).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::algebra_from_json(io::json::parse(s)); });

  py::class_<lie::Grading>(m, "Grading")
      .def_property_readonly("group", [](const lie::Grading& g) { return g.group.orders(); })
      .def_property_readonly("parts", &parts_of)
      .def("part_dims",
           [](const lie::Grading& g) {
             std::map<std::string, int> out;
             for (const auto& [label, basis] : g.parts) out[label.label()] = static_cast<int>(basis.cols());
             return out;
           })
      .def("to_json", [](const lie::Grading& g) { return io::grading_to_json(g).dump(); })
      .def_static("from_json", [](const std::string& s) { return io::grading_from_json(io::json::parse(s)); });

  py::class_<gt::Representation>(m, "Representation")
      .def_property_readonly("dim", &gt::Representation::dim)
      .def_property_readonly("highest_weight", [](const gt::Representation& r) { return r.hw.entries(); })
      .def_property_readonly("basis",
                             [](const gt::Representation& r) {
                               std::vector<std::vector<int>> out;
                               for (const auto& p : r.basis) out.push_back(p.flattened());
                               return out;
                             })
      .def("generator", [](const gt::Representation& r, int k, int l) { return r.gens.gen(k, l); }, py::arg("k"),
           py::arg("l"))
      .def("image", [](const gt::Representation& r, const Matrix& x) { return r.gens.image(x); })
      .def("sl_matrices", [](const gt::Representation& r) { return r.gens.on_sl().mats; })
      .def("commutator_residual", [](const gt::Representation& r) { return r.gens.commutator_residual(); })
      .def("transpose_residual", [](const gt::Representation& r) { return r.gens.transpose_residual(); })
      .def("to_json", [](const gt::Representation& r) { return io::rep_to_json(r).dump(); });

  py::class_<sim::SimulationMatrix>(m, "SimulationMatrix")
      .def_readonly("matrix", &sim::SimulationMatrix::r)
      .def_readonly("order", &sim::SimulationMatrix::order)
      .def_property_readonly("kind", [](const sim::SimulationMatrix& r) { return sim::to_string(r.kind); });

  m.def("weyl_dim", [](const std::vector<int>& w) { return gt::weyl_dim(gt::HighestWeight(w)); });
  m.def("enumerate_patterns", [](const std::vector<int>& w) {
    std::vector<std::vector<int>> out;
    for (const auto& p : gt::enumerate_patterns(gt::HighestWeight(w))) out.push_back(p.flattened());
    return out;
  });
  m.def("build_representation", [](const std::vector<int>& w) { return gt::build_representation(gt::HighestWeight(w)); });
  m.def("sl_algebra", &lie::sl_algebra);

  m.def(
      "grading_from_automorphism",
      [](const std::string& spec, double tol) {
        const auto g = parse_auto(spec);
        return sim::grading_from_automorphism(lie::sl_algebra(g.n()), g, tol);
      },
      py::arg("spec"), py::arg("tol") = kDefaultTolerance);
  m.def("verify_grading", &lie::verify_grading, py::arg("algebra"), py::arg("grading"),
        py::arg("tol") = kDefaultTolerance);
  m.def(
      "classify_two_part",
      [](const lie::LieAlgebra& a, const Matrix& pa, const Matrix& pb, double tol) {
        return lie::to_string(lie::classify_two_part(a, pa, pb, tol));
      },
      py::arg("algebra"), py::arg("part_a"), py::arg("part_b"), py::arg("tol") = kDefaultTolerance);

  m.def("simulation_inner", [](const std::vector<int>& w, int s) { return sim::simulation_inner(gt::HighestWeight(w), s); });
  m.def("j_matrix", [](const std::vector<int>& w) { return sim::j_matrix(gt::HighestWeight(w)); });
  m.def("is_self_contragredient", [](const std::vector<int>& w) { return sim::is_self_contragredient(gt::HighestWeight(w)); });
  m.def("doubled_rep", [](const std::vector<int>& w) {
    auto d = sim::doubled_rep(gt::HighestWeight(w));
    return std::make_pair(d.rep.on_sl().mats, d.swap);
  });
  m.def("decompose_rep_space", &sim::decompose_rep_space, py::arg("simulation"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "check_compatibility",
      [](const std::vector<Matrix>& mats, const lie::Grading& g, const lie::Grading& v, double tol) {
        return sim::check_compatibility(lie::MatrixRep{mats}, g, v, tol);
      },
      py::arg("sl_matrices"), py::arg("grading"), py::arg("vspace"), py::arg("tol") = kDefaultTolerance);

  m.def(
      "verify_epsilon",
      [](const Nested& eps, const std::vector<int>& group) { return contract::verify_epsilon(to_table(eps, group)); },
      py::arg("eps"), py::arg("group") = std::vector<int>{2});
  m.def(
      "verify_psi",
      [](const Nested& psi, const Nested& eps, const std::vector<int>& group) {
        return contract::verify_psi(to_table(psi, group), to_table(eps, group));
      },
      py::arg("psi"), py::arg("eps"), py::arg("group") = std::vector<int>{2});
  m.def(
      "enumerate_binary_epsilon",
      [](const std::vector<int>& group) {
        py::list out;
        for (const auto& t : contract::enumerate_binary_epsilon(AbelianGroup(group))) out.append(from_table(t));
        return out;
      },
      py::arg("group") = std::vector<int>{2});
  m.def(
      "enumerate_binary_psi",
      [](const Nested& eps, const std::vector<int>& group) {
        py::list out;
        for (const auto& t : contract::enumerate_binary_psi(to_table(eps, group))) out.append(from_table(t));
        return out;
      },
      py::arg("eps"), py::arg("group") = std::vector<int>{2});
  m.def(
      "contract_algebra",
      [](const lie::LieAlgebra& a, const lie::Grading& g, const Nested& eps, double tol) {
        return contract::contract_algebra(a, g, to_table(eps, g.group.orders()), tol).result;
      },
      py::arg("algebra"), py::arg("grading"), py::arg("eps"), py::arg("tol") = kDefaultTolerance);
  m.def(
      "contract_rep",
      [](const std::vector<Matrix>& mats, const lie::Grading& g, const lie::Grading& v, const Nested& psi,
         const Nested& eps, double tol) {
        const auto& orders = g.group.orders();
        return contract::contract_rep(lie::MatrixRep{mats}, g, v, to_table(psi, orders), to_table(eps, orders), tol)
            .result.mats;
      },
      py::arg("sl_matrices"), py::arg("grading"), py::arg("vspace"), py::arg("psi"), py::arg("eps"),
      py::arg("tol") = kDefaultTolerance);
}
