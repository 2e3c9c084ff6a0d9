#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "liecartan/cartan.hpp"
#include "liecartan/cli.hpp"
#include "liecartan/error.hpp"
#include "liecartan/io.hpp"
#include "liecartan/levi.hpp"
#include "liecartan/powermap.hpp"
#include "liecartan/quotient.hpp"
#include "liecartan/radicals.hpp"
#include "liecartan/verify.hpp"

namespace py = pybind11;
using namespace liecartan;

namespace {

py::object fraction(const Rational& q) {
  py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(format_rational(q));
}

py::list to_py(std::span<const Rational> v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

py::list to_py(const Subspace& s) {
  py::list rows;
  for (std::size_t i = 0; i < s.dim(); ++i) rows.append(to_py(s.row(i)));
  return rows;
}

py::list to_py(const Matrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.append(to_py(m.row(i)));
  return rows;
}

// Accepts int, Fraction or "p/q" strings.
Vector from_py(const py::sequence& seq) {
  Vector v;
  for (const auto& item : seq) v.push_back(parse_rational(py::str(item).cast<std::string>()));
  return v;
}

Subspace subspace_from_py(const LieAlgebra& g, const py::sequence& rows) {
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(from_py(r.cast<py::sequence>()));
  return Subspace(g.dim(), vs);
}

py::object json_to_py(const nlohmann::json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

py::dict cartan_dict(const LieAlgebra& g, const CartanResult& r) {
  py::dict d;
  d["method"] = std::string(to_string(r.method));
  d["basis"] = to_py(r.csa);
  d["dim"] = r.csa.dim();
  py::list labels;
  for (std::size_t i = 0; i < r.csa.dim(); ++i) labels.append(describe_vector(g.labels(), r.csa.row(i)));
  d["labels"] = labels;
  d["steps"] = r.steps;
  py::list trace;
  for (const auto& t : r.trace) trace.append(to_py(t));
  d["trace"] = trace;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Lie algebra structure: radicals, Levi decomposition, Cartan subalgebras, quotients, power maps";

  py::exception<Error>(m, "LieCartanError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object type = py::module_::import("liecartan._core").attr("LieCartanError");
      py::object exc = type(e.what());
      exc.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  py::class_<LieAlgebra>(m, "LieAlgebra")
      .def_static(
          "load", [](const std::string& path, bool check_jacobi) {
            return load_algebra(path, check_jacobi ? JacobiCheck::Force : JacobiCheck::Skip);
          },
          py::arg("path"), py::arg("check_jacobi") = true)
      .def_static(
          "from_json", [](const std::string& text) { return parse_algebra(nlohmann::json::parse(text)); },
          py::arg("text"))
      .def_static("abelian", [](std::size_t n) { return LieAlgebra::abelian(n); }, py::arg("dim"))
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("name", &LieAlgebra::name)
      .def_property_readonly("labels", &LieAlgebra::labels)
      .def("bracket", [](const LieAlgebra& g, const py::sequence& x, const py::sequence& y) {
        return to_py(g.bracket(from_py(x), from_py(y)));
      })
      .def("ad", [](const LieAlgebra& g, const py::sequence& x) { return to_py(g.ad(from_py(x))); })
      .def("killing_form", [](const LieAlgebra& g) { return to_py(killing_form(g)); })
      .def("to_json", [](const LieAlgebra& g) { return algebra_to_json(g).dump(2); })
      .def("__repr__", [](const LieAlgebra& g) {
        return "<LieAlgebra '" + g.name() + "' dim " + std::to_string(g.dim()) + ">";
      });

  m.def("radical", [](const LieAlgebra& g) { return to_py(radical(g)); });
  m.def("nilradical", [](const LieAlgebra& g) { return to_py(nilradical(g)); });
  m.def("is_semisimple", &is_semisimple);
  m.def("is_solvable", [](const LieAlgebra& g) { return is_solvable(g); });
  m.def("is_nilpotent", [](const LieAlgebra& g) { return is_nilpotent(g); });
  m.def("levi_decomposition", [](const LieAlgebra& g) {
    const LeviDecomposition d = levi_decomposition(g);
    py::dict out;
    out["levi"] = to_py(d.levi);
    out["radical"] = to_py(d.radical);
    return out;
  });
  m.def(
      "cartan_subalgebra",
      [](const LieAlgebra& g, const std::string& method, std::optional<py::sequence> start) {
        if (method == "regular") return cartan_dict(g, regular_element_csa(g));
        if (method == "composite") return cartan_dict(g, composite_csa(g));
        if (method == "chain") {
          std::optional<Subspace> s;
          if (start) s = subspace_from_py(g, *start);
          return cartan_dict(g, normalizer_chain_csa(g, s));
        }
        throw Error(ErrorCode::ParseError, "unknown method '" + method + "'");
      },
      py::arg("g"), py::arg("method") = "regular", py::arg("start") = py::none());
  m.def("is_cartan_subalgebra",
        [](const LieAlgebra& g, const py::sequence& rows) { return is_cartan_subalgebra(g, subspace_from_py(g, rows)); });
  m.def(
      "quotient",
      [](const LieAlgebra& g, const py::sequence& ideal_rows) {
        const QuotientMap q = quotient_algebra(g, subspace_from_py(g, ideal_rows));
        const Subspace h = regular_element_csa(g).csa;
        const Subspace pushed = push_cartan(h, q);
        const Subspace lifted = lift_cartan(pushed, q);
        py::dict out;
        out["algebra"] = q.target;
        out["projection"] = to_py(q.projection);
        out["pushed_csa"] = to_py(pushed);
        out["lifted_csa"] = to_py(lifted);
        out["roundtrip"] = push_cartan(lifted, q) == pushed;
        return out;
      },
      py::arg("g"), py::arg("ideal"));

  m.def(
      "pk_surjective",
      [](std::uint64_t vector_rank, std::uint64_t torus_rank, std::vector<std::uint64_t> orders, std::uint64_t k) {
        return pk_surjective({vector_rank, torus_rank, std::move(orders)}, k);
      },
      py::arg("vector_rank"), py::arg("torus_rank"), py::arg("component_orders"), py::arg("k"));
  m.def(
      "power_map_dense", [](const std::string& path, std::uint64_t k) { return density_from_cartans(load_instance(path), k); },
      py::arg("instance_path"), py::arg("k"));

  m.def(
      "verify",
      [](std::vector<std::string> paths, bool all, std::optional<std::string> data_dir) {
        const std::filesystem::path dir = data_dir ? std::filesystem::path(*data_dir) : default_data_dir();
        VerificationMatrix matrix;
        if (all) {
          matrix = load_verification_matrix(dir);
        } else {
          for (const auto& p : paths) matrix.algebras.push_back({p, standard_ideals(), {}});
        }
        nlohmann::json report;
        {
          py::gil_scoped_release release;
          report = run_verification(matrix, {all, 0}).to_json();
        }
        return json_to_py(report);
      },
      py::arg("paths") = std::vector<std::string>{}, py::arg("all") = false, py::arg("data_dir") = py::none());

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));

  m.attr("data_dir") = default_data_dir().string();
}
