#pragma once

// Cellular structure: the cell datum, cell modules spanned by half diagrams,
// Gram matrices of their bilinear forms, and exact determinants.

#include "okada/algebra.hpp"
#include "okada/arc_diagram.hpp"
#include "okada/fibonacci.hpp"
#include "okada/polynomial.hpp"

#include <gmpxx.h>

#include <map>
#include <vector>

namespace okada {

class CellDatum {
 public:
  explicit CellDatum(int rank);

  int rank() const noexcept { return rank_; }
  const DominanceLattice& poset() const noexcept { return poset_; }
  /// M_S: half diagrams with propagating labels S, in enumeration order.
  const std::vector<HalfArcDiagram>& index_set(const FibonacciSet& s) const;
  /// C^S_{L,R} = glue(L, R)
  ArcDiagram basis(const FibonacciSet& s, const HalfArcDiagram& left, const HalfArcDiagram& right) const;
  ArcDiagram involution(const ArcDiagram& d) const { return mirror(d); }

 private:
  int rank_;
  DominanceLattice poset_;
  std::map<FibonacciSet, std::vector<HalfArcDiagram>> index_sets_;
};

/// A vector of the cell module for S, in the basis of half diagrams.
using CellVector = std::map<HalfArcDiagram, Polynomial>;

/// E_sigma . H: the left half of E_sigma glue(H, H) with its coefficient when the
/// propagating labels stay S, otherwise zero. Throws std::invalid_argument
/// if H does not have labels S.
CellVector cell_action(const Permutation& sigma, const HalfArcDiagram& h, const FibonacciSet& s);
CellVector cell_action(const AlgebraElement& a, const CellVector& v, const FibonacciSet& s);

using PolynomialMatrix = std::vector<std::vector<Polynomial>>;
using RationalMatrix = std::vector<std::vector<mpq_class>>;

/// phi_S(R, L') read off from C_{L,R} C_{L',R'} = phi_S(R, L') C_{L,R'} modulo
/// lower cells. Rows follow R and columns follow L', both in index-set order.
/// The extraction pair (L, R') defaults to the first element of M_S.
PolynomialMatrix gram_matrix(const FibonacciSet& s);
PolynomialMatrix gram_matrix(const FibonacciSet& s, const HalfArcDiagram& left, const HalfArcDiagram& right);

/// Fraction-free elimination (Bareiss) with exact polynomial division.
Polynomial determinant(const PolynomialMatrix& m);
/// Gaussian elimination over the rationals.
mpq_class determinant(const RationalMatrix& m);
RationalMatrix evaluate(const PolynomialMatrix& m, const ParameterValues<mpq_class>& values);

}  // namespace okada
