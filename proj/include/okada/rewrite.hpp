#pragma once

// Generator words modulo commutation (heaps drawn as diamond diagrams), their
// reduction to normal form with exact x/y coefficients, the fully packed loop
// configuration of a heap, and the dictionary between permutations and arc
// diagrams.

#include "okada/arc_diagram.hpp"
#include "okada/permutation.hpp"
#include "okada/polynomial.hpp"

#include <compare>
#include <random>
#include <utility>
#include <vector>

namespace okada {

/// Black boxes of a diamond diagram. Diagonal d holds the rows
/// min(d, N-1), ..., 1; the reading visits diagonals left to right and each
/// diagonal top to bottom.
class Heap {
 public:
  struct Cell {
    int diagonal = 0;
    int row = 0;
    auto operator<=>(const Cell&) const = default;
  };

  Heap() = default;
  explicit Heap(int rank) : rank_(rank), rows_(rank > 1 ? rank - 1 : 0) {}
  /// Throws std::invalid_argument for a cell outside the trapezoid or a repeated cell.
  Heap(int rank, std::vector<Cell> cells);

  int rank() const noexcept { return rank_; }
  /// rows()[i-1] lists the occupied diagonals of row i in increasing order.
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  /// Cells in reading order.
  std::vector<Cell> cells() const;
  bool occupied(int diagonal, int row) const;
  /// Last occupied diagonal, or 0.
  int diagonal_count() const;
  std::size_t size() const;

  auto operator<=>(const Heap&) const = default;

 private:
  int rank_ = 0;
  std::vector<std::vector<int>> rows_;
};

/// Places each letter on the leftmost diagonal allowed by the earlier
/// letters it does not commute with; commutation-equivalent words give the
/// same heap.
Heap heap_from_word(std::span<const int> word, int rank);
Word reading(const Heap& heap);
bool commutation_equivalent(std::span<const int> a, std::span<const int> b, int rank);

/// Arcs and loops of the loop configuration of a heap: a black box in row i
/// joins its two left edges and its two right edges at level i, a white box
/// carries strands at levels i and i+1.
Composition trace_fplc(const Heap& heap);

struct NormalizationResult {
  Monomial coefficient;
  Word normal_word;  // word_from_code(permutation)
  Permutation permutation;
};

/// Reduces E_w using E_iE_i -> x_i E_i and E_{i+1}E_iE_{i+1} -> y_i E_{i+1}
/// modulo commutation, sweeping rows bottom up and each row left to right.
NormalizationResult normalize(std::span<const int> word, int rank);
/// Same reduction, choosing each move uniformly among the applicable ones.
NormalizationResult normalize_random(std::span<const int> word, int rank, std::mt19937_64& rng);
NormalizationResult multiply_words(std::span<const int> a, std::span<const int> b, int rank);
/// E_sigma E_tau = coefficient E_pi.
NormalizationResult multiply_permutations(const Permutation& sigma, const Permutation& tau);

ArcDiagram perm_to_diagram(const Permutation& sigma);
Permutation diagram_to_perm(const ArcDiagram& d);

/// (chain of the left half, chain of the right half) of the diagram of sigma.
std::pair<Chain, Chain> rs(const Permutation& sigma);
/// Throws std::invalid_argument unless both chains end at the same set.
Permutation rs_inverse(const Chain& p, const Chain& q);

}  // namespace okada
