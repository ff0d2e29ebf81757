#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <sstream>

#include "toricjl/aomoto.hpp"
#include "toricjl/cli.hpp"
#include "toricjl/errors.hpp"
#include "toricjl/io.hpp"
#include "toricjl/jump_loci.hpp"
#include "toricjl/kernel_tests.hpp"
#include "toricjl/lie_ranks.hpp"
#include "toricjl/zcover.hpp"

namespace py = pybind11;
using namespace toricjl;

namespace {

py::list labels(const SimplicialComplex& l, VertexSet w) {
  py::list out;
  for (std::size_t v : face_vertices(w)) out.append(l.labels()[v]);
  return out;
}

VertexSet vertex_set(const SimplicialComplex& l, const std::vector<std::string>& names) {
  VertexSet w = 0;
  for (const auto& name : names) {
    const auto it = std::find(l.labels().begin(), l.labels().end(), name);
    if (it == l.labels().end()) throw py::value_error("unknown vertex " + name);
    w |= singleton(static_cast<std::size_t>(it - l.labels().begin()));
  }
  return w;
}

py::int_ to_py(const Integer& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.get_str().c_str(), nullptr, 10));
}

py::list to_py(const std::vector<Integer>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x));
  return out;
}

Character character(const SimplicialComplex& l, const py::object& chi) {
  Character raw;
  if (chi.is_none()) {
    raw = Character::diagonal(l.ambient_size());
  } else if (py::isinstance<py::str>(chi)) {
    std::vector<std::string> warnings;
    raw = parse_character(chi.cast<std::string>(), l, warnings);
  } else if (py::isinstance<py::dict>(chi)) {
    raw.m.assign(l.ambient_size(), 0);
    for (auto [key, value] : chi.cast<py::dict>()) {
      const VertexSet v = vertex_set(l, {key.cast<std::string>()});
      raw.m[face_vertices(v).front()] = value.cast<std::int64_t>();
    }
  } else {
    raw.m = chi.cast<std::vector<std::int64_t>>();
    if (raw.size() != l.ambient_size()) throw py::value_error("character needs one weight per vertex");
  }
  std::int64_t g = 1;
  Character chi_n = normalize_character(raw, &g);
  if (g != 1) {
    const std::string msg = "character divided by the gcd " + std::to_string(g) + " of its weights";
    if (PyErr_WarnEx(PyExc_UserWarning, msg.c_str(), 1) != 0) throw py::error_already_set();
  }
  return chi_n;
}

py::dict decomposition(const ZModuleDecomposition& z) {
  py::list degrees;
  for (const auto& deg : z.degrees) {
    py::list torsion;
    for (const auto& tc : deg.torsion) {
      py::dict t;
      t["d"] = tc.cls.d;
      t["degree"] = tc.cls.degree;
      t["count"] = tc.cls.count;
      t["multiplicities"] = tc.multiplicities;
      torsion.append(t);
    }
    py::dict d;
    d["free_rank"] = deg.free_rank;
    d["torsion"] = torsion;
    degrees.append(d);
  }
  py::dict out;
  out["field"] = z.field.name();
  out["degrees"] = degrees;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Toric complexes, their infinite cyclic covers, and Artin kernels";

  static PyObject* refusal = PyErr_NewException("toricjl._core.RefusalError", PyExc_RuntimeError, nullptr);
  m.attr("RefusalError") = py::handle(refusal);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Refusal& e) {
      PyErr_SetString(refusal, (std::string(e.what()) + "; witness: " + e.witness()).c_str());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<SimplicialComplex>(m, "Complex")
      .def_static("parse", py::overload_cast<const std::string&>(&parse_complex), py::arg("text"))
      .def_static("read", [](const std::string& path) { return read_complex_file(path); }, py::arg("path"))
      .def_static("fixture", &fixture, py::arg("name"))
      .def("flag_completion", [](const SimplicialComplex& l) { return flag_complex(l.one_skeleton()); })
      .def_property_readonly("labels", &SimplicialComplex::labels)
      .def_property_readonly("dimension", &SimplicialComplex::dimension)
      .def_property_readonly("f_vector", &SimplicialComplex::f_vector)
      .def_property_readonly("is_flag", &SimplicialComplex::is_flag)
      .def("maximal_faces",
           [](const SimplicialComplex& l) {
             py::list out;
             for (Face f : l.maximal_faces()) out.append(labels(l, f));
             return out;
           })
      .def("induced", [](const SimplicialComplex& l, const std::vector<std::string>& w) { return l.induced(vertex_set(l, w)); })
      .def("to_text", [](const SimplicialComplex& l) { return format_complex(l); })
      .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
      .def("__repr__", [](const SimplicialComplex& l) {
        std::ostringstream os;
        os << "Complex(" << l.vertex_count() << " vertices, dim " << l.dimension() << ")";
        return os.str();
      });

  m.def("fixture_names", &fixture_names);
  m.def("toric_betti", &toric_betti);
  m.def("flagification_defect", [](const SimplicialComplex& l) {
    const auto d = flagification_defect(l);
    return py::make_tuple(d.p ? py::object(py::int_(*d.p)) : py::none(),
                          d.coinvariant_rank ? py::object(py::int_(*d.coinvariant_rank)) : py::none());
  });

  m.def(
      "aomoto_betti",
      [](const SimplicialComplex& l, const std::vector<std::string>& w, const std::string& field, std::size_t imax,
         const std::string& method) {
        const FieldSpec k = FieldSpec::parse(field);
        const VertexSet ws = vertex_set(l, w);
        if (method == "direct") return aomoto_betti_direct(l, indicator_class(ws, l.ambient_size()), k, imax);
        if (method == "links") return aomoto_betti_aah(l, ws, k, imax);
        throw py::value_error("method must be 'direct' or 'links'");
      },
      py::arg("complex"), py::arg("w"), py::arg("field") = "q0", py::arg("imax") = 2, py::arg("method") = "direct");

  m.def(
      "strata",
      [](const SimplicialComplex& l, std::size_t i, std::size_t d, const std::string& field) {
        py::list out;
        for (VertexSet w : strata(l, FieldSpec::parse(field), i, d).members) out.append(labels(l, w));
        return out;
      },
      py::arg("complex"), py::arg("i"), py::arg("d"), py::arg("field") = "q0");

  m.def(
      "zcover",
      [](const SimplicialComplex& l, const py::object& chi, const std::string& field, std::size_t imax, bool oracle) {
        const Character c = character(l, chi);
        const FieldSpec k = FieldSpec::parse(field);
        return decomposition(oracle ? direct_oracle(l, c, k, imax) : full_decomposition(l, c, k, imax));
      },
      py::arg("complex"), py::arg("chi") = py::none(), py::arg("field") = "q0", py::arg("imax") = 2,
      py::arg("oracle") = false);

  m.def(
      "monodromy_trivial",
      [](const SimplicialComplex& l, const py::object& chi, const std::string& field, std::size_t r) {
        return monodromy_trivial(l, character(l, chi), FieldSpec::parse(field), r).trivial;
      },
      py::arg("complex"), py::arg("chi") = py::none(), py::arg("field") = "q0", py::arg("r") = 1);

  m.def(
      "finite_dim",
      [](const SimplicialComplex& l, const py::object& chi, const std::string& field, std::size_t r) {
        return finite_dim_test(l, character(l, chi), FieldSpec::parse(field), r).finite;
      },
      py::arg("complex"), py::arg("chi") = py::none(), py::arg("field") = "q0", py::arg("r") = 1);

  m.def(
      "cover_ring_dims",
      [](const SimplicialComplex& l, const py::object& chi, const std::string& field, std::size_t r) {
        return cover_cohomology_ring(l, character(l, chi), FieldSpec::parse(field), r).dims();
      },
      py::arg("complex"), py::arg("chi") = py::none(), py::arg("field") = "q0", py::arg("r") = 1);

  m.def(
      "kernel",
      [](const SimplicialComplex& l, const py::object& chi, const std::string& query, std::size_t r) {
        const Graph g = l.one_skeleton();
        const Character c = character(l, chi);
        FinitenessReport f;
        if (query == "fg") f = finitely_generated(g, c);
        else if (query == "fp") f = finitely_presented(g, c);
        else if (query == "fpr") f = fp_r(g, c, r);
        else throw py::value_error("query must be fg, fp or fpr");
        return py::make_tuple(to_string(f.verdict), f.witness);
      },
      py::arg("complex"), py::arg("chi") = py::none(), py::arg("query") = "fg", py::arg("r") = 1);

  m.def("clique_polynomial", [](const SimplicialComplex& l) { return to_py(clique_polynomial(l.one_skeleton())); });
  m.def("cut_polynomial", [](const SimplicialComplex& l) { return to_py(cut_polynomial(l.one_skeleton())); });
  m.def(
      "lcs_ranks", [](const SimplicialComplex& l, std::size_t K) { return to_py(lcs_ranks(l.one_skeleton(), K).ranks); },
      py::arg("complex"), py::arg("K") = 8);
  m.def(
      "chen_ranks", [](const SimplicialComplex& l, std::size_t K) { return to_py(chen_ranks(l.one_skeleton(), K).ranks); },
      py::arg("complex"), py::arg("K") = 8);
  m.def("holonomy_dims",
        [](const SimplicialComplex& l) { return to_py(holonomy_dims(raag_holonomy(l.one_skeleton()), 3).ranks); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
