#include "okada/cellular.hpp"

#include "okada/errors.hpp"
#include "okada/rewrite.hpp"

#include <stdexcept>

namespace okada {

CellDatum::CellDatum(int rank) : rank_(rank), poset_(rank) {
  for (const FibonacciSet& s : enumerate_yfs(rank)) index_sets_[s];
  for (HalfArcDiagram& h : enumerate_half(rank)) index_sets_[prop_lab(h)].push_back(std::move(h));
}

const std::vector<HalfArcDiagram>& CellDatum::index_set(const FibonacciSet& s) const {
  auto it = index_sets_.find(s);
  if (it == index_sets_.end()) throw std::invalid_argument("no cell for " + s.to_string());
  return it->second;
}

ArcDiagram CellDatum::basis(const FibonacciSet& s, const HalfArcDiagram& left, const HalfArcDiagram& right) const {
  if (prop_lab(left) != s || prop_lab(right) != s) throw std::invalid_argument("half diagrams outside the cell");
  return glue(left, right);
}

CellVector cell_action(const Permutation& sigma, const HalfArcDiagram& h, const FibonacciSet& s) {
  if (prop_lab(h) != s) throw std::invalid_argument("half diagram " + h.to_string() + " is not in the cell of " + s.to_string());
  const Permutation pair = diagram_to_perm(glue(h, h));
  NormalizationResult r = multiply_permutations(sigma, pair);
  const ArcDiagram product = perm_to_diagram(r.permutation);
  CellVector out;
  if (prop_lab(product) == s) out.emplace(bra(product), Polynomial(r.coefficient));
  return out;
}

CellVector cell_action(const AlgebraElement& a, const CellVector& v, const FibonacciSet& s) {
  CellVector out;
  for (const auto& [sigma, ca] : a.terms()) {
    for (const auto& [h, cv] : v) {
      for (const auto& [image, c] : cell_action(sigma, h, s)) {
        Polynomial& slot = out[image];
        slot += ca * cv * c;
        if (slot.is_zero()) out.erase(image);
      }
    }
  }
  return out;
}

PolynomialMatrix gram_matrix(const FibonacciSet& s, const HalfArcDiagram& left, const HalfArcDiagram& right) {
  const auto halves = enumerate_half(s.rank(), s);
  const ArcDiagram expected = glue(left, right);
  PolynomialMatrix g(halves.size(), std::vector<Polynomial>(halves.size()));
  for (std::size_t i = 0; i < halves.size(); ++i) {
    const Permutation first = diagram_to_perm(glue(left, halves[i]));
    for (std::size_t j = 0; j < halves.size(); ++j) {
      const Permutation second = diagram_to_perm(glue(halves[j], right));
      NormalizationResult r = multiply_permutations(first, second);
      const ArcDiagram product = perm_to_diagram(r.permutation);
      if (prop_lab(product) != s) continue;
      if (product != expected)
        throw InvariantViolation("cell product left the cell: " + product.to_string());
      g[i][j] = Polynomial(r.coefficient);
    }
  }
  return g;
}

PolynomialMatrix gram_matrix(const FibonacciSet& s) {
  const auto halves = enumerate_half(s.rank(), s);
  return gram_matrix(s, halves.front(), halves.front());
}

Polynomial determinant(const PolynomialMatrix& input) {
  PolynomialMatrix m = input;
  const std::size_t n = m.size();
  if (n == 0) return Polynomial(1);
  Polynomial sign(1), previous(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
      if (swap_row == n) return Polynomial();
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        const Polynomial numerator = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = numerator.exact_quotient(previous);
        if (!q) throw InvariantViolation("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = Polynomial();
    }
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

mpq_class determinant(const RationalMatrix& input) {
  RationalMatrix m = input;
  const std::size_t n = m.size();
  mpq_class det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      std::swap(m[k], m[pivot]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      const mpq_class factor = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= factor * m[k][j];
    }
  }
  return det;
}

RationalMatrix evaluate(const PolynomialMatrix& m, const ParameterValues<mpq_class>& values) {
  RationalMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const Polynomial& p : m[i]) out[i].push_back(p.evaluate(values));
  return out;
}

}  // namespace okada
