#pragma once

// Sparse polynomials with integer coefficients in the parameters
// x_1, x_2, ... and y_1, y_2, ...

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace okada {

/// A monomial x^a y^b stored as dense exponent vectors with trailing zeros trimmed,
/// so equal monomials compare equal regardless of the ambient rank.
class Monomial {
 public:
  Monomial() = default;  // the unit monomial

  static Monomial x(int k, int exponent = 1);
  static Monomial y(int k, int exponent = 1);

  int x_exponent(int k) const noexcept;
  int y_exponent(int k) const noexcept;
  /// exponents of x_1, x_2, ... (index k-1); trailing zeros trimmed
  const std::vector<int>& x_exponents() const noexcept { return x_; }
  const std::vector<int>& y_exponents() const noexcept { return y_; }

  int degree() const noexcept;
  bool is_one() const noexcept { return x_.empty() && y_.empty(); }
  /// true if every exponent of `other` is at most ours
  bool divisible_by(const Monomial& other) const noexcept;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  /// requires divisible_by(other)
  Monomial operator/(const Monomial& other) const;

  bool operator==(const Monomial&) const = default;

  /// "x1^2*y3", or "1"
  std::string to_string() const;

 private:
  void trim();
  std::vector<int> x_, y_;
};

/// Graded lexicographic order with x_1 > x_2 > ... > y_1 > y_2 > ...
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(b, a); }
};

/// Values for the parameters; a missing index leaves the variable symbolic
/// (for substitute) or is an error (for evaluate).
template <typename T>
struct ParameterValues {
  std::map<int, T> x, y;
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class, GradedLexGreater>;

  Polynomial() = default;  // zero
  Polynomial(long constant);
  Polynomial(const mpz_class& constant);
  explicit Polynomial(const Monomial& m, const mpz_class& coefficient = 1);

  static Polynomial x(int k) { return Polynomial(Monomial::x(k)); }
  static Polynomial y(int k) { return Polynomial(Monomial::y(k)); }

  bool is_zero() const noexcept { return terms_.empty(); }
  /// terms in decreasing graded-lex order; the first one is the leading term
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  mpz_class coefficient(const Monomial& m) const;
  int degree() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial operator-() const;
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  bool operator==(const Polynomial& other) const;

  /// Adds coefficient * m in place.
  void add_term(const Monomial& m, const mpz_class& coefficient);

  /// Replace the listed variables by integers.
  Polynomial substitute(const ParameterValues<mpz_class>& values) const;
  /// Evaluate at rationals; every variable occurring must be assigned.
  mpq_class evaluate(const ParameterValues<mpq_class>& values) const;
  /// All y_k set to 1.
  Polynomial at_y_one() const;

  /// The quotient if `divisor` divides this polynomial exactly, else nullopt.
  std::optional<Polynomial> exact_quotient(const Polynomial& divisor) const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

}  // namespace okada
