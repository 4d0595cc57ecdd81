#pragma once

// Permutations in one-line notation, Lehmer-style codes and the
// lexicographically minimal reduced words built from them.

#include <span>
#include <string>
#include <vector>

namespace okada {

using Word = std::vector<int>;

class Permutation {
 public:
  Permutation() = default;  // the empty permutation
  /// One-line notation; throws std::invalid_argument unless a bijection of [n].
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(one_line_.size()); }
  int operator()(int i) const { return one_line_.at(i - 1); }
  const std::vector<int>& one_line() const noexcept { return one_line_; }

  Permutation inverse() const;
  /// (this * other)(i) = this(other(i))
  Permutation operator*(const Permutation& other) const;
  int length() const;  // number of inversions
  bool is_involution() const;

  auto operator<=>(const Permutation&) const = default;
  std::string to_string() const;

 private:
  std::vector<int> one_line_;
};

/// c_i = #{ j < i : sigma^-1(j) > sigma^-1(i) }, for i = 1..n.
std::vector<int> code(const Permutation& sigma);
/// Inverse of code(); throws std::invalid_argument unless 0 <= c_i < i.
Permutation from_code(std::span<const int> c);
/// Concatenation over i of (i-1, i-2, ..., i-c_i).
Word word_from_code(const Permutation& sigma);
/// Starting from the identity, swap entries at positions w_k, w_k + 1 in turn.
Permutation permutation_of_word(std::span<const int> word, int n);

/// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

}  // namespace okada
