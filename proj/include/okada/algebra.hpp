#pragma once

// The Okada algebra O_N(X, Y) in the basis (E_sigma), with generic
// polynomial coefficients.

#include "okada/arc_diagram.hpp"
#include "okada/permutation.hpp"
#include "okada/polynomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace okada {

class AlgebraElement {
 public:
  using TermMap = std::map<Permutation, Polynomial>;

  explicit AlgebraElement(int rank = 0) : rank_(rank) {}
  static AlgebraElement basis(const Permutation& sigma, const Polynomial& coefficient = Polynomial(1));
  static AlgebraElement one(int rank);
  /// E_i
  static AlgebraElement generator(int i, int rank);

  int rank() const noexcept { return rank_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Polynomial coefficient(const Permutation& sigma) const;

  void add_term(const Permutation& sigma, const Polynomial& coefficient);
  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const Polynomial& scalar);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);

  bool operator==(const AlgebraElement& other) const;

  /// Every y_k set to 1.
  AlgebraElement at_y_one() const;
  std::string to_string() const;

 private:
  void check_rank(const AlgebraElement& other) const;
  int rank_;
  TermMap terms_;
};

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b);

/// sigma_S: the product of the commuting transpositions s_i, i in the free set of S.
Permutation free_involution(const FibonacciSet& s);
/// E_S = E_{sigma_S}.
AlgebraElement free_element(const FibonacciSet& s);

/// Support of the two-sided ideal generated by E_S: the closure of sigma_S
/// under left and right multiplication by generators, sorted.
std::vector<Permutation> ideal_basis(const FibonacciSet& s);

struct TriangularFactorization {
  Permutation left;   // rho
  FibonacciSet label; // S = PropLab(E_sigma)
  Permutation right;  // tau
};

/// The unique (rho, tau) with E_sigma = E_rho E_S E_tau as monoid elements,
/// l(sigma) = |free set of S| + l(rho) + l(tau) and S dominated by the meet of
/// the labels of E_rho and E_tau. Throws InvariantViolation if zero or several
/// pairs qualify.
TriangularFactorization triangular_factorization(const Permutation& sigma);

}  // namespace okada
