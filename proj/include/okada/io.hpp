#pragma once

// JSON encodings of the library's objects and versioned documents.

#include "okada/algebra.hpp"
#include "okada/arc_diagram.hpp"
#include "okada/cellular.hpp"
#include "okada/errors.hpp"
#include "okada/fibonacci.hpp"
#include "okada/permutation.hpp"
#include "okada/polynomial.hpp"
#include "okada/rewrite.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace okada::io {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view schema_version = "okada/1";

/// Raised for JSON that is well formed but does not encode a valid object.
class SchemaError : public StructureError {
 public:
  using StructureError::StructureError;
};

Json to_json(const FibonacciSet& s);          // {"rank", "elements"}
Json to_json(const FibonacciWord& w);         // "1121"
Json to_json(const Chain& c);                 // [set, ...]
Json to_json(const ArcDiagram& d);            // {"rank", "arcs": [{"ends", "height"}]}
Json to_json(const HalfArcDiagram& h);        // {"rank", "arcs", "half": [{"node", "height"}]}
Json to_json(const Permutation& p);           // one-line array
Json to_json(const Monomial& m);              // {"x": [...], "y": [...]}
Json to_json(const Polynomial& p);            // [{"x", "y", "c"}, ...]
Json to_json(const NormalizationResult& r);   // {"coeff_x", "coeff_y", "perm", "word"}
Json to_json(const AlgebraElement& a);        // [{"perm", "coeff": {"x", "y", "c"}}, ...]
Json to_json(const Heap& h);                  // {"rank", "cells": [[diagonal, row], ...]}
Json to_json(const PolynomialMatrix& m);

FibonacciSet fibonacci_set_from_json(const Json& j);
Chain chain_from_json(const Json& j);
ArcDiagram diagram_from_json(const Json& j);
HalfArcDiagram half_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);
Polynomial polynomial_from_json(const Json& j);
AlgebraElement algebra_element_from_json(const Json& j, int rank);
Heap heap_from_json(const Json& j);

/// {"schema", "kind", ...fields of an object payload}, or
/// {"schema", "kind", "value"} for any other payload.
Json document(std::string_view kind, Json payload);
/// Inverse of document(); throws SchemaError on a version or kind mismatch.
Json payload(const Json& doc, std::string_view kind);

/// Parses text, converting parse failures to SchemaError.
Json parse(std::string_view text);

}  // namespace okada::io
