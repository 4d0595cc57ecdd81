#pragma once

// Fibonacci sets, the Young-Fibonacci covering relation, Stanley's word
// encoding, saturated chains, the dominance lattice and free sets.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace okada {

/// A subset {s_1 < ... < s_k} of [N] tagged with its rank N, with
/// k = N (mod 2) and s_l = l (mod 2). Two sets with the same elements but
/// different ranks are different objects.
class FibonacciSet {
 public:
  FibonacciSet() = default;  // the empty set of rank 0
  FibonacciSet(int rank, std::vector<int> elements);

  static FibonacciSet interval(int rank);

  int rank() const noexcept { return rank_; }
  std::span<const int> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  int max() const noexcept { return elements_.empty() ? 0 : elements_.back(); }
  bool contains(int value) const noexcept;

  // rank first, then lexicographic on the element sequence
  auto operator<=>(const FibonacciSet&) const = default;

  /// "{1,2,5}_5"; the empty set prints as "{}_4".
  std::string to_string() const;

 private:
  int rank_ = 0;
  std::vector<int> elements_;
};

/// Parity test for a strictly increasing sequence inside [rank].
/// Throws std::invalid_argument if the sequence is not increasing or leaves [rank].
bool is_fibonacci_set(int rank, std::span<const int> elements);

/// All rank-N Fibonacci sets, lexicographic on element sequences.
std::vector<FibonacciSet> enumerate_yfs(int rank);

/// Sets T of rank N+1 covering S.
std::vector<FibonacciSet> yf_covers(const FibonacciSet& s);
/// Sets of rank N-1 covered by S.
std::vector<FibonacciSet> yf_covered_by(const FibonacciSet& s);
/// lower <| upper in the Young-Fibonacci lattice.
bool yf_covering(const FibonacciSet& lower, const FibonacciSet& upper);

/// Binary word over {1,2}; its rank is the sum of its letters.
class FibonacciWord {
 public:
  FibonacciWord() = default;
  explicit FibonacciWord(std::string letters);

  const std::string& letters() const noexcept { return letters_; }
  int rank() const noexcept;

  auto operator<=>(const FibonacciWord&) const = default;

 private:
  std::string letters_;
};

FibonacciSet word_to_set(const FibonacciWord& w);
FibonacciWord set_to_word(const FibonacciSet& s);

/// Saturated chain C_0 <| C_1 <| ... <| C_N starting at the empty set of rank 0.
class Chain {
 public:
  Chain();  // the single-element chain of rank 0
  explicit Chain(std::vector<FibonacciSet> sets);

  int rank() const noexcept { return static_cast<int>(sets_.size()) - 1; }
  const FibonacciSet& operator[](std::size_t i) const { return sets_.at(i); }
  const FibonacciSet& top() const noexcept { return sets_.back(); }
  const std::vector<FibonacciSet>& sets() const noexcept { return sets_; }

  auto operator<=>(const Chain&) const = default;

 private:
  std::vector<FibonacciSet> sets_;
};

/// Every saturated chain from the rank-0 empty set up to S.
std::vector<Chain> saturated_chains(const FibonacciSet& s);
/// Number of saturated chains ending at S (the dimension of V_S).
std::uint64_t chain_count(const FibonacciSet& s);

/// S is dominated by T: |S| <= |T| and the aligned largest elements of S are
/// bounded by those of T. Throws std::invalid_argument on a rank mismatch.
bool dominance_leq(const FibonacciSet& s, const FibonacciSet& t);
bool dominance_less(const FibonacciSet& s, const FibonacciSet& t);

/// The finite lattice (YFS_N, dominance), with meets and joins found by
/// exhaustive search. Construction throws InvariantViolation if a bound is
/// missing or not unique, or if the poset is not graded.
class DominanceLattice {
 public:
  explicit DominanceLattice(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<FibonacciSet>& elements() const noexcept { return elements_; }
  std::size_t index_of(const FibonacciSet& s) const;

  bool leq(std::size_t a, std::size_t b) const { return leq_[a * elements_.size() + b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * elements_.size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * elements_.size() + b]; }
  int level(std::size_t a) const { return level_[a]; }

  FibonacciSet meet(const FibonacciSet& s, const FibonacciSet& t) const;
  FibonacciSet join(const FibonacciSet& s, const FibonacciSet& t) const;
  int level(const FibonacciSet& s) const;

  const FibonacciSet& bottom() const { return elements_[bottom_]; }
  const FibonacciSet& top() const { return elements_[top_]; }

  /// Cover pairs (lower, upper) as element indices.
  const std::vector<std::pair<std::size_t, std::size_t>>& hasse_edges() const noexcept {
    return hasse_;
  }

 private:
  int rank_;
  std::vector<FibonacciSet> elements_;
  std::vector<char> leq_;
  std::vector<std::size_t> meet_, join_;
  std::vector<int> level_;
  std::vector<std::pair<std::size_t, std::size_t>> hasse_;
  std::size_t bottom_ = 0, top_ = 0;
};

FibonacciSet dominance_meet(const FibonacciSet& s, const FibonacciSet& t);
FibonacciSet dominance_join(const FibonacciSet& s, const FibonacciSet& t);
/// Length of a maximal chain from the bottom of the lattice to S.
int dominance_rank(const FibonacciSet& s);

/// True if no two elements are adjacent and all lie in [rank-1].
bool is_free_set(std::span<const int> set, int rank);
/// The free set attached to S: i in [N-1] whose distance to the last element
/// of S at or below i (or to 0) is odd.
std::vector<int> free_set(const FibonacciSet& s);
/// Inverse of free_set: [N] minus the pairs {i, i+1}.
FibonacciSet free_set_inverse(std::span<const int> free, int rank);

}  // namespace okada
