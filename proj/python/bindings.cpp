#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "cli.hpp"
#include "matchfield/ehrhart.hpp"
#include "matchfield/equivalence.hpp"
#include "matchfield/errors.hpp"
#include "matchfield/json_io.hpp"
#include "matchfield/mutation.hpp"
#include "matchfield/pluecker.hpp"

namespace py = pybind11;
using namespace matchfield;

namespace {

py::object fraction(const Rational& r) {
  static auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*cls)(to_string(r));
}

py::list fractions(const RationalVector& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

Rational rational(py::handle h) {
  if (py::isinstance<py::bool_>(h)) throw py::type_error("expected a number, got bool");
  return parse_rational(py::str(h).cast<std::string>());
}

WeightMatrix weights(const py::sequence& rows) {
  RationalMatrix m;
  for (auto row : rows) {
    RationalVector r;
    for (auto x : row.cast<py::sequence>()) r.push_back(rational(x));
    m.push_back(std::move(r));
  }
  return WeightMatrix(std::move(m));
}

py::list matrix(const WeightMatrix& m) {
  py::list out;
  for (const auto& row : m.entries()) out.append(fractions(row));
  return out;
}

/// Reports go through their JSON form so Python sees plain dicts.
py::object as_python(const json_io::Json& j) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

py::list tuples_of(const std::vector<Triple>& triples) {
  py::list out;
  for (const auto& t : triples) out.append(py::make_tuple(t.p, t.l, t.q));
  return out;
}

}  // namespace

PYBIND11_MODULE(_matchfield, m) {
  m.doc() = "Matching fields, their polytopes, and the GT to FFLV mutation chain";

  py::register_exception<NonGenericError>(m, "NonGenericError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);

  py::class_<GrassmannPoset>(m, "GrassmannPoset")
      .def(py::init<int, int>(), py::arg("k"), py::arg("n"))
      .def_property_readonly("k", &GrassmannPoset::k)
      .def_property_readonly("n", &GrassmannPoset::n)
      .def("__len__", &GrassmannPoset::size)
      .def_property_readonly("elements",
                             [](const GrassmannPoset& p) {
                               py::list out;
                               for (const auto& e : p.elements()) out.append(py::make_tuple(e.row, e.col));
                               return out;
                             })
      .def("filters",
           [](const GrassmannPoset& p) {
             py::list out;
             for (const auto& f : enumerate_filters(p)) {
               py::list members;
               for (const auto& e : f.members) members.append(py::make_tuple(e.row, e.col));
               out.append(members);
             }
             return out;
           })
      .def("antichains",
           [](const GrassmannPoset& p) {
             py::list out;
             for (const auto& a : enumerate_antichains(p)) {
               py::list members;
               for (const auto& e : a.members) members.append(py::make_tuple(e.row, e.col));
               out.append(members);
             }
             return out;
           })
      .def("min_elements",
           [](const GrassmannPoset& p, const std::vector<std::pair<int, int>>& members) {
             std::vector<PosetElement> es;
             for (auto [r, c] : members) es.push_back({r, c});
             std::vector<std::pair<int, int>> out;
             for (const auto& e : min_elements(p, es).members) out.emplace_back(e.row, e.col);
             return out;
           })
      .def("order_vertices", [](const GrassmannPoset& p) { return order_polytope_vertices(p); })
      .def("chain_vertices", [](const GrassmannPoset& p) { return chain_polytope_vertices(p); })
      .def("order_contains",
           [](const GrassmannPoset& p, const py::sequence& x) {
             RationalVector v;
             for (auto e : x) v.push_back(rational(e));
             return order_polytope_contains(p, v);
           })
      .def("chain_contains", [](const GrassmannPoset& p, const py::sequence& x) {
        RationalVector v;
        for (auto e : x) v.push_back(rational(e));
        return chain_polytope_contains(p, v);
      });

  py::class_<MatchingField>(m, "MatchingField")
      .def(py::init<int, int, std::vector<Tuple>>(), py::arg("k"), py::arg("n"), py::arg("tuples"))
      .def_property_readonly("k", &MatchingField::k)
      .def_property_readonly("n", &MatchingField::n)
      .def_property_readonly("subsets", &MatchingField::subsets)
      .def_property_readonly("tuples", &MatchingField::tuples)
      .def("tuple", &MatchingField::tuple, py::arg("subset"))
      .def("__len__", &MatchingField::size)
      .def("__eq__", &MatchingField::operator==)
      .def("__repr__", [](const MatchingField& f) {
        return "MatchingField(k=" + std::to_string(f.k()) + ", n=" + std::to_string(f.n()) + ")";
      });

  m.def("diagonal", &diagonal, py::arg("k"), py::arg("n"));
  m.def("block_diagonal", &block_diagonal, py::arg("k"), py::arg("n"));
  m.def("fflv", &fflv, py::arg("k"), py::arg("n"));
  m.def("intermediate_field", &intermediate_field, py::arg("k"), py::arg("n"), py::arg("index"));
  m.def("induce_field", [](const py::sequence& w) { return induce_field(weights(w)); }, py::arg("weights"));
  m.def("is_generic", [](const py::sequence& w) { return is_generic(weights(w)); }, py::arg("weights"));
  m.def("diagonal_weight_matrix", [](int k, int n) { return matrix(diagonal_weight_matrix(k, n)); });
  m.def("block_diagonal_weight_matrix", [](int k, int n) { return matrix(block_diagonal_weight_matrix(k, n)); });
  m.def(
      "fflv_weight_matrix",
      [](int k, int n, py::object big_n) {
        std::optional<Rational> shift;
        if (!big_n.is_none()) shift = rational(big_n);
        return matrix(fflv_weight_matrix(k, n, shift));
      },
      py::arg("k"), py::arg("n"), py::arg("N") = py::none());
  m.def("triple_sequence", [](int k, int n) { return tuples_of(triple_sequence(k, n).entries); });
  m.def("weight_sequence", [](int k, int n) {
    py::list out;
    for (const auto& w : weight_sequence(k, n)) out.append(matrix(w));
    return out;
  });
  m.def("swap_step", [](const MatchingField& f, int p, int l, int q) { return swap_step(f, Triple{p, l, q}); });
  m.def("tuple_oracle", &tuple_oracle, py::arg("k"), py::arg("n"), py::arg("index"), py::arg("subset"));
  m.def("coherence_check", [](const MatchingField& f) {
    const CoherenceResult r = coherence_check(f);
    py::dict out;
    out["coherent"] = r.coherent;
    out["constraints"] = r.constraints;
    out["witness"] = r.witness ? py::object(matrix(*r.witness)) : py::object(py::none());
    return out;
  });

  py::class_<LatticePolytope>(m, "LatticePolytope")
      .def(py::init([](std::size_t dim, std::vector<IntVector> vertices) { return LatticePolytope(dim, std::move(vertices)); }),
           py::arg("ambient_dim"), py::arg("vertices"))
      .def_property_readonly("ambient_dim", &LatticePolytope::ambient_dim)
      .def_property_readonly("vertices", &LatticePolytope::vertices)
      .def("contains",
           [](const LatticePolytope& p, const py::sequence& x) {
             RationalVector v;
             for (auto e : x) v.push_back(rational(e));
             return contains(p, v);
           })
      .def("all_vertices_extremal", &all_vertices_extremal)
      .def(
          "lattice_points",
          [](const LatticePolytope& p, int t, std::uint64_t max_candidates) {
            ResourceLimits limits;
            limits.max_candidates = max_candidates;
            py::gil_scoped_release release;
            return lattice_points(p, t, limits).count;
          },
          py::arg("t"), py::arg("max_candidates") = 10'000'000)
      .def("ehrhart", [](const LatticePolytope& p) {
        EhrhartResult r;
        {
          py::gil_scoped_release release;
          r = ehrhart(p);
        }
        py::dict out;
        out["dimension"] = r.dimension;
        out["counts"] = r.counts;
        out["coefficients"] = fractions(r.polynomial.coefficients);
        return out;
      });

  m.def("polytope_of_field", &polytope_of_field, py::arg("field"));
  m.def("verify_gt_equivalence", [](int k, int n) { return as_python(json_io::to_json(verify_gt_equivalence(k, n))); });
  m.def("verify_fflv_projection",
        [](int k, int n) { return as_python(json_io::to_json(verify_fflv_projection(k, n))); });
  m.def("verify_gr3_block_projection",
        [](int n) { return as_python(json_io::to_json(verify_gr3_block_projection(n))); });

  m.def(
      "tropical_map",
      [](const IntVector& w, const std::vector<IntVector>& factor, const py::sequence& x) {
        RationalVector v;
        for (auto e : x) v.push_back(rational(e));
        return fractions(tropical_map(MutationData(w, factor), v));
      },
      py::arg("w"), py::arg("factor"), py::arg("x"));
  m.def(
      "map_polytope",
      [](const IntVector& w, const std::vector<IntVector>& factor, std::vector<IntVector> points) {
        const MutationData data(w, factor);
        const LatticePolytope p(data.dim(), std::move(points));
        const MappedPolytope r = map_polytope(data, p);
        py::dict out;
        out["points"] = p.vertices();
        out["images"] = r.images;
        out["extremal"] = r.extremal;
        out["vertices"] = r.vertices;
        return out;
      },
      py::arg("w"), py::arg("factor"), py::arg("points"));
  m.def("mutation_data", [](int k, int n, std::size_t i) {
    const MutationData d = mutation_data(k, n, i);
    return py::make_tuple(d.w(), d.factor());
  });
  m.def("verify_step", [](int k, int n, std::size_t i, bool witnesses) {
    return as_python(json_io::to_json(verify_step(k, n, i), witnesses));
  }, py::arg("k"), py::arg("n"), py::arg("index"), py::arg("witnesses") = false);
  m.def(
      "verify_chain",
      [](int k, int n, int ehrhart_depth, bool witnesses) {
        ChainOptions options;
        options.ehrhart_depth = ehrhart_depth;
        ChainReport r;
        {
          py::gil_scoped_release release;
          r = verify_chain(k, n, options);
        }
        return as_python(json_io::to_json(r, witnesses));
      },
      py::arg("k"), py::arg("n"), py::arg("ehrhart_depth") = 0, py::arg("witnesses") = false);

  m.def("induced_weight", [](const py::sequence& w) {
    const InducedWeight iw = induced_weight(weights(w));
    py::dict out;
    for (std::size_t i = 0; i < iw.subsets.size(); ++i) out[py::tuple(py::cast(iw.subsets[i]))] = fraction(iw.values[i]);
    return out;
  });
  m.def("initial_term", [](const py::sequence& w, const Subset& s) {
    const InitialTerm t = initial_term(weights(w), s);
    py::dict out;
    out["assignment"] = t.assignment;
    out["sign"] = t.sign;
    out["weight"] = fraction(t.weight);
    return out;
  });
  m.def("gp_relations", [](int k, int n) {
    std::vector<std::string> out;
    for (const auto& r : gp_relations(k, n)) out.push_back(r.to_string());
    return out;
  });
  m.def("initial_forms", [](const py::sequence& w) {
    const WeightMatrix wm = weights(w);
    const InducedWeight iw = induced_weight(wm);
    py::list out;
    for (const auto& r : gp_relations(wm.rows(), wm.cols())) {
      const InitialForm f = initial_form(r, iw);
      out.append(as_python(json_io::to_json(f)));
    }
    return out;
  });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<std::string> all{"matchfield"};
        all.insert(all.end(), args.begin(), args.end());
        std::vector<const char*> argv;
        for (const auto& a : all) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
