#pragma once

// The Okada monoid: arc diagrams multiplied with every parameter set to 1.

#include "okada/arc_diagram.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace okada {

/// [e o f], loops discarded. Throws std::invalid_argument on a rank mismatch.
ArcDiagram mproduct(const ArcDiagram& e, const ArcDiagram& f);
ArcDiagram mpower(const ArcDiagram& e, int k);
bool is_idempotent(const ArcDiagram& e);
bool is_involutive(const ArcDiagram& e);
/// Least K >= 1 with e^K = e^(K+1).
int aperiodicity_index(const ArcDiagram& e);

/// Worker count from OKADA_THREADS, else the hardware concurrency.
unsigned default_threads();
/// Idempotents among all rank-N diagrams, streamed over `threads` shards.
std::uint64_t idempotent_count(int rank, unsigned threads = 0);

/// Elements in enumeration order, with R-, L- and J-class ids computed as
/// strongly connected components of the right, left and two-sided Cayley
/// graphs over the generators.
class GreenClasses {
 public:
  explicit GreenClasses(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<ArcDiagram>& elements() const noexcept { return elements_; }
  std::size_t index_of(const ArcDiagram& e) const;

  std::size_t r_class(std::size_t i) const { return r_[i]; }
  std::size_t l_class(std::size_t i) const { return l_[i]; }
  std::size_t j_class(std::size_t i) const { return j_[i]; }
  std::size_t r_class_count() const noexcept { return r_count_; }
  std::size_t l_class_count() const noexcept { return l_count_; }
  std::size_t j_class_count() const noexcept { return j_count_; }
  std::vector<std::size_t> r_class_members(std::size_t i) const;
  std::vector<std::size_t> j_class_members(std::size_t i) const;

  /// f lies in the two-sided ideal generated by e.
  bool j_below(std::size_t f, std::size_t e) const;

 private:
  int rank_;
  std::vector<ArcDiagram> elements_;
  std::unordered_map<ArcDiagram, std::size_t> index_;
  std::vector<std::vector<std::size_t>> right_, left_;
  std::vector<std::size_t> r_, l_, j_;
  std::size_t r_count_ = 0, l_count_ = 0, j_count_ = 0;
};

/// The unique involutive element R-equivalent to e. Throws InvariantViolation
/// if the class does not contain exactly one.
ArcDiagram r_class_rep(const GreenClasses& classes, const ArcDiagram& e);
/// The free element with the same propagating labels as e.
ArcDiagram j_class_rep(const ArcDiagram& e);

}  // namespace okada
