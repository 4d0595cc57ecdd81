#include "okada/io.hpp"

#include <stdexcept>

namespace okada::io {

namespace {

template <typename F>
auto guarded(std::string_view what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const SchemaError&) {
    throw;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw SchemaError(std::string(what) + ": " + e.what());
  }
}

Json exponents(const std::vector<int>& e) { return Json(e); }

Json coefficient_json(const mpz_class& c) {
  if (c.fits_slong_p()) return c.get_si();
  return c.get_str();
}

mpz_class coefficient_from_json(const Json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw SchemaError("coefficient must be an integer or a decimal string");
}

Monomial monomial_from_json(const Json& j) {
  Monomial m;
  const auto xs = j.value("x", std::vector<int>{}), ys = j.value("y", std::vector<int>{});
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k] < 0) throw SchemaError("negative exponent");
    if (xs[k]) m *= Monomial::x(static_cast<int>(k) + 1, xs[k]);
  }
  for (std::size_t k = 0; k < ys.size(); ++k) {
    if (ys[k] < 0) throw SchemaError("negative exponent");
    if (ys[k]) m *= Monomial::y(static_cast<int>(k) + 1, ys[k]);
  }
  return m;
}

std::vector<Arc> arcs_from_json(const Json& arcs) {
  std::vector<Arc> out;
  for (const Json& a : arcs) {
    const auto ends = a.at("ends").get<std::vector<int>>();
    if (ends.size() != 2) throw SchemaError("an arc has exactly two ends");
    out.push_back({ends[0], ends[1], a.at("height").get<int>()});
  }
  return out;
}

Json arcs_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back({{"ends", {a.a, a.b}}, {"height", a.height}});
  return out;
}

}  // namespace

Json to_json(const FibonacciSet& s) {
  return {{"rank", s.rank()}, {"elements", std::vector<int>(s.elements().begin(), s.elements().end())}};
}

Json to_json(const FibonacciWord& w) { return w.letters(); }

Json to_json(const Chain& c) {
  Json out = Json::array();
  for (const FibonacciSet& s : c.sets()) out.push_back(to_json(s));
  return out;
}

Json to_json(const ArcDiagram& d) { return {{"rank", d.rank()}, {"arcs", arcs_json(d.arcs())}}; }

Json to_json(const HalfArcDiagram& h) {
  Json half = Json::array();
  for (const HalfArc& a : h.half_arcs()) half.push_back({{"node", a.node}, {"height", a.height}});
  return {{"rank", h.rank()}, {"arcs", arcs_json(h.full_arcs())}, {"half", half}};
}

Json to_json(const Permutation& p) { return p.one_line(); }

Json to_json(const Monomial& m) { return {{"x", exponents(m.x_exponents())}, {"y", exponents(m.y_exponents())}}; }

Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json term = to_json(m);
    term["c"] = coefficient_json(c);
    out.push_back(std::move(term));
  }
  return out;
}

Json to_json(const NormalizationResult& r) {
  return {{"coeff_x", exponents(r.coefficient.x_exponents())},
          {"coeff_y", exponents(r.coefficient.y_exponents())},
          {"perm", to_json(r.permutation)},
          {"word", r.normal_word}};
}

Json to_json(const AlgebraElement& a) {
  Json out = Json::array();
  for (const auto& [perm, poly] : a.terms()) {
    for (const auto& [m, c] : poly.terms()) {
      Json coeff = to_json(m);
      coeff["c"] = coefficient_json(c);
      out.push_back({{"perm", to_json(perm)}, {"coeff", std::move(coeff)}});
    }
  }
  return out;
}

Json to_json(const Heap& h) {
  Json cells = Json::array();
  for (const Heap::Cell& c : h.cells()) cells.push_back({c.diagonal, c.row});
  return {{"rank", h.rank()}, {"cells", cells}};
}

Json to_json(const PolynomialMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const Polynomial& p : row) r.push_back(to_json(p));
    out.push_back(std::move(r));
  }
  return out;
}

FibonacciSet fibonacci_set_from_json(const Json& j) {
  return guarded("Fibonacci set", [&] {
    return FibonacciSet(j.at("rank").get<int>(), j.at("elements").get<std::vector<int>>());
  });
}

Chain chain_from_json(const Json& j) {
  return guarded("chain", [&] {
    std::vector<FibonacciSet> sets;
    for (const Json& s : j) sets.push_back(fibonacci_set_from_json(s));
    return Chain(std::move(sets));
  });
}

ArcDiagram diagram_from_json(const Json& j) {
  return guarded("arc diagram", [&] {
    const std::vector<Arc> arcs = arcs_from_json(j.at("arcs"));
    ArcDiagram d(j.at("rank").get<int>(), arcs);
    if (const Violation v = check(d); v != Violation::none) throw SchemaError("invalid arc diagram: " + std::string(to_string(v)));
    return d;
  });
}

HalfArcDiagram half_from_json(const Json& j) {
  return guarded("half diagram", [&] {
    const std::vector<Arc> arcs = arcs_from_json(j.at("arcs"));
    std::vector<HalfArc> half;
    for (const Json& h : j.at("half")) half.push_back({h.at("node").get<int>(), h.at("height").get<int>()});
    HalfArcDiagram h(j.at("rank").get<int>(), arcs, half);
    if (const Violation v = check_half(h); v != Violation::none) throw SchemaError("invalid half diagram: " + std::string(to_string(v)));
    return h;
  });
}

Permutation permutation_from_json(const Json& j) {
  return guarded("permutation", [&] { return Permutation(j.get<std::vector<int>>()); });
}

Polynomial polynomial_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    if (!j.is_array()) throw SchemaError("a polynomial is a list of terms");
    Polynomial p;
    for (const Json& t : j) p.add_term(monomial_from_json(t), coefficient_from_json(t.at("c")));
    return p;
  });
}

AlgebraElement algebra_element_from_json(const Json& j, int rank) {
  return guarded("algebra element", [&] {
    if (!j.is_array()) throw SchemaError("an algebra element is a list of terms");
    AlgebraElement a(rank);
    for (const Json& t : j) {
      const Json& c = t.at("coeff");
      a.add_term(permutation_from_json(t.at("perm")), Polynomial(monomial_from_json(c), coefficient_from_json(c.at("c"))));
    }
    return a;
  });
}

Heap heap_from_json(const Json& j) {
  return guarded("heap", [&] {
    std::vector<Heap::Cell> cells;
    for (const Json& c : j.at("cells")) {
      const auto pair = c.get<std::vector<int>>();
      if (pair.size() != 2) throw SchemaError("a cell is [diagonal, row]");
      cells.push_back({pair[0], pair[1]});
    }
    return Heap(j.at("rank").get<int>(), std::move(cells));
  });
}

Json document(std::string_view kind, Json payload) {
  Json out{{"schema", schema_version}, {"kind", kind}};
  if (payload.is_object() && !payload.contains("value") && !payload.contains("schema") && !payload.contains("kind")) {
    for (auto& [key, value] : payload.items()) out[key] = std::move(value);
  } else {
    out["value"] = std::move(payload);
  }
  return out;
}

Json payload(const Json& doc, std::string_view kind) {
  if (!doc.is_object()) throw SchemaError("a document is a JSON object");
  if (!doc.contains("schema") || doc["schema"] != schema_version)
    throw SchemaError("unsupported schema " + (doc.contains("schema") ? doc["schema"].dump() : std::string("(missing)")) +
                      ", expected \"" + std::string(schema_version) + "\"");
  if (!doc.contains("kind") || doc["kind"] != kind)
    throw SchemaError("expected a document of kind \"" + std::string(kind) + "\"");
  if (doc.contains("value")) return doc["value"];
  Json out = doc;
  out.erase("schema");
  out.erase("kind");
  return out;
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace okada::io
