#include "okada/algebra.hpp"
#include "okada/cellular.hpp"
#include "okada/errors.hpp"
#include "okada/io.hpp"
#include "okada/monoid.hpp"
#include "okada/render.hpp"
#include "okada/rewrite.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace okada;

namespace {

py::dict monomial_dict(const Monomial& m) {
  py::dict d;
  d["x"] = m.x_exponents();
  d["y"] = m.y_exponents();
  return d;
}

std::vector<std::vector<int>> chain_lists(const Chain& c) {
  std::vector<std::vector<int>> out;
  for (const FibonacciSet& s : c.sets()) out.emplace_back(s.elements().begin(), s.elements().end());
  return out;
}

Chain chain_from_lists(const std::vector<std::vector<int>>& sets) {
  std::vector<FibonacciSet> out;
  for (std::size_t k = 0; k < sets.size(); ++k) out.emplace_back(static_cast<int>(k), sets[k]);
  return Chain(std::move(out));
}

Format format_of(const std::string& name) { return parse_format(name); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Okada algebra and monoid toolkit";

  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<io::SchemaError>(m, "SchemaError", PyExc_ValueError);

  py::class_<FibonacciSet>(m, "FibonacciSet")
      .def(py::init<int, std::vector<int>>(), py::arg("rank"), py::arg("elements"))
      .def_static("interval", &FibonacciSet::interval)
      .def_property_readonly("rank", &FibonacciSet::rank)
      .def_property_readonly("elements",
                             [](const FibonacciSet& s) { return std::vector<int>(s.elements().begin(), s.elements().end()); })
      .def("word", [](const FibonacciSet& s) { return set_to_word(s).letters(); })
      .def("free_set", [](const FibonacciSet& s) { return free_set(s); })
      .def("chain_count", [](const FibonacciSet& s) { return chain_count(s); })
      .def("covers", [](const FibonacciSet& s) { return yf_covers(s); })
      .def("__le__", [](const FibonacciSet& a, const FibonacciSet& b) { return dominance_leq(a, b); })
      .def("__lt__", [](const FibonacciSet& a, const FibonacciSet& b) { return dominance_less(a, b); })
      .def("__eq__", [](const FibonacciSet& a, const FibonacciSet& b) { return a == b; })
      .def("__hash__", [](const FibonacciSet& s) { return py::hash(py::make_tuple(s.rank(), py::tuple(py::cast(std::vector<int>(s.elements().begin(), s.elements().end()))))); })
      .def("__repr__", &FibonacciSet::to_string);

  m.def("enumerate_yfs", &enumerate_yfs, py::arg("rank"));
  m.def("word_to_set", [](const std::string& w) { return word_to_set(FibonacciWord(w)); });
  m.def("meet", [](const FibonacciSet& a, const FibonacciSet& b) { return dominance_meet(a, b); });
  m.def("join", [](const FibonacciSet& a, const FibonacciSet& b) { return dominance_join(a, b); });
  m.def("dominance_covers", [](int rank) {
    const DominanceLattice lattice(rank);
    std::vector<std::pair<FibonacciSet, FibonacciSet>> out;
    for (const auto& [lo, hi] : lattice.hasse_edges()) out.emplace_back(lattice.elements()[lo], lattice.elements()[hi]);
    return out;
  });

  py::class_<ArcDiagram>(m, "ArcDiagram")
      .def(py::init([](int rank, const std::vector<std::tuple<int, int, int>>& arcs) {
             std::vector<Arc> list;
             for (const auto& [a, b, h] : arcs) list.push_back({a, b, h});
             ArcDiagram d(rank, list);
             if (const Violation v = check(d); v != Violation::none)
               throw StructureError("invalid arc diagram: " + std::string(to_string(v)));
             return d;
           }),
           py::arg("rank"), py::arg("arcs"))
      .def_static("identity", &identity)
      .def_static("generator", &generator, py::arg("i"), py::arg("rank"))
      .def_static("from_permutation", [](const std::vector<int>& p) { return perm_to_diagram(Permutation(p)); })
      .def_property_readonly("rank", &ArcDiagram::rank)
      .def_property_readonly("arcs",
                             [](const ArcDiagram& d) {
                               std::vector<std::tuple<int, int, int>> out;
                               for (const Arc& a : d.arcs()) out.emplace_back(a.a, a.b, a.height);
                               return out;
                             })
      .def("permutation", [](const ArcDiagram& d) { return diagram_to_perm(d).one_line(); })
      .def("prop_lab", [](const ArcDiagram& d) { return prop_lab(d); })
      .def("left_chain", [](const ArcDiagram& d) { return chain_lists(chain_of(bra(d))); })
      .def("right_chain", [](const ArcDiagram& d) { return chain_lists(chain_of(ket(d))); })
      .def("product", [](const ArcDiagram& a, const ArcDiagram& b) {
             const DiagramProduct p = product_y1(a, b);
             return py::make_tuple(monomial_dict(p.coefficient), p.diagram);
           }, "Arc product at y = 1: (coefficient exponents, diagram).")
      .def("__mul__", &mproduct)
      .def("__pow__", &mpower)
      .def("is_idempotent", &is_idempotent)
      .def("is_involutive", &is_involutive)
      .def("aperiodicity_index", &aperiodicity_index)
      .def("to_json", [](const ArcDiagram& d) { return io::document("diagram", io::to_json(d)).dump(); })
      .def_static("from_json", [](const std::string& text) { return io::diagram_from_json(io::payload(io::parse(text), "diagram")); })
      .def("render", [](const ArcDiagram& d, const std::string& f) { return render(d, format_of(f)); }, py::arg("format") = "svg")
      .def("__eq__", [](const ArcDiagram& a, const ArcDiagram& b) { return a == b; })
      .def("__hash__", [](const ArcDiagram& d) { return d.hash(); })
      .def("__repr__", &ArcDiagram::to_string);

  m.def("normalize", [](const std::vector<int>& word, int rank) {
    const NormalizationResult r = normalize(word, rank);
    return py::make_tuple(monomial_dict(r.coefficient), r.normal_word, r.permutation.one_line());
  }, py::arg("word"), py::arg("rank"), "Normal form of E_w: (coefficient exponents, normal word, permutation).");
  m.def("multiply", [](const std::vector<int>& a, const std::vector<int>& b) {
    const NormalizationResult r = multiply_permutations(Permutation(a), Permutation(b));
    return py::make_tuple(monomial_dict(r.coefficient), r.permutation.one_line());
  }, "E_a E_b in the generic algebra: (coefficient exponents, permutation).");
  m.def("rs", [](const std::vector<int>& p) {
    const auto [left, right] = rs(Permutation(p));
    return py::make_tuple(chain_lists(left), chain_lists(right));
  });
  m.def("rs_inverse", [](const std::vector<std::vector<int>>& p, const std::vector<std::vector<int>>& q) {
    return rs_inverse(chain_from_lists(p), chain_from_lists(q)).one_line();
  });
  m.def("triangular_factorization", [](const std::vector<int>& p) {
    const TriangularFactorization f = triangular_factorization(Permutation(p));
    return py::make_tuple(f.left.one_line(), f.label, f.right.one_line());
  });
  m.def("gram_matrix", [](const FibonacciSet& s) {
    std::vector<std::vector<std::string>> out;
    for (const auto& row : gram_matrix(s)) {
      out.emplace_back();
      for (const Polynomial& p : row) out.back().push_back(p.to_string());
    }
    return out;
  });
  m.def("gram_determinant", [](const FibonacciSet& s) { return determinant(gram_matrix(s)).to_string(); });

  m.def("idempotent_count", &idempotent_count, py::arg("rank"), py::arg("threads") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("green_counts", [](int rank) {
    const GreenClasses g(rank);
    py::dict d;
    d["elements"] = g.elements().size();
    d["R"] = g.r_class_count();
    d["L"] = g.l_class_count();
    d["J"] = g.j_class_count();
    return d;
  });
  m.def("render_dominance", [](int rank, const std::string& f) { return render_dominance_hasse(rank, format_of(f)); },
        py::arg("rank"), py::arg("format") = "svg");
  m.def("render_yf", [](int max_rank, const std::string& f) { return render_yf_hasse(max_rank, format_of(f)); },
        py::arg("max_rank"), py::arg("format") = "svg");
  m.attr("schema_version") = std::string(io::schema_version);
}
