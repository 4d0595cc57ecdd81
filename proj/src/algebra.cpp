#include "okada/algebra.hpp"

#include "okada/errors.hpp"
#include "okada/rewrite.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace okada {

AlgebraElement AlgebraElement::basis(const Permutation& sigma, const Polynomial& coefficient) {
  AlgebraElement a(sigma.size());
  a.add_term(sigma, coefficient);
  return a;
}

AlgebraElement AlgebraElement::one(int rank) { return basis(Permutation::identity(rank)); }

AlgebraElement AlgebraElement::generator(int i, int rank) {
  const Word w{i};
  return basis(permutation_of_word(w, rank));
}

Polynomial AlgebraElement::coefficient(const Permutation& sigma) const {
  auto it = terms_.find(sigma);
  return it == terms_.end() ? Polynomial() : it->second;
}

void AlgebraElement::check_rank(const AlgebraElement& other) const {
  if (rank_ != other.rank_) throw std::invalid_argument("algebra elements of different ranks");
}

void AlgebraElement::add_term(const Permutation& sigma, const Polynomial& coefficient) {
  if (sigma.size() != rank_) throw std::invalid_argument("basis permutation of the wrong size");
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(sigma, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  check_rank(other);
  for (const auto& [s, c] : other.terms_) add_term(s, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  check_rank(other);
  for (const auto& [s, c] : other.terms_) add_term(s, -c);
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Polynomial& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, c] : terms_) c *= scalar;
  return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  a.check_rank(b);
  AlgebraElement out(a.rank_);
  for (const auto& [s, cs] : a.terms_) {
    for (const auto& [t, ct] : b.terms_) {
      NormalizationResult r = multiply_permutations(s, t);
      out.add_term(r.permutation, cs * ct * Polynomial(r.coefficient));
    }
  }
  return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) { return a * b; }

bool AlgebraElement::operator==(const AlgebraElement& other) const {
  return rank_ == other.rank_ && terms_ == other.terms_;
}

AlgebraElement AlgebraElement::at_y_one() const {
  AlgebraElement out(rank_);
  for (const auto& [s, c] : terms_) out.add_term(s, c.at_y_one());
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*E" + s.to_string();
  }
  return out;
}

Permutation free_involution(const FibonacciSet& s) {
  const std::vector<int> free = free_set(s);
  return permutation_of_word(free, s.rank());
}

AlgebraElement free_element(const FibonacciSet& s) { return AlgebraElement::basis(free_involution(s)); }

std::vector<Permutation> ideal_basis(const FibonacciSet& s) {
  const int n = s.rank();
  std::set<Permutation> seen{free_involution(s)};
  std::vector<Permutation> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    const Permutation cur = todo.back();
    todo.pop_back();
    const Word w = word_from_code(cur);
    for (int i = 1; i < n; ++i) {
      const Word g{i};
      for (const Permutation& next :
           {multiply_words(g, w, n).permutation, multiply_words(w, g, n).permutation}) {
        if (seen.insert(next).second) todo.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

TriangularFactorization triangular_factorization(const Permutation& sigma) {
  const int n = sigma.size();
  const ArcDiagram target = perm_to_diagram(sigma);
  const FibonacciSet label = prop_lab(target);
  const ArcDiagram free = perm_to_diagram(free_involution(label));
  const int budget = sigma.length() - static_cast<int>(free_set(label).size());
  const HalfArcDiagram left_half = bra(target), right_half = ket(target);

  struct Candidate {
    Permutation perm;
    ArcDiagram diagram;
  };
  std::vector<Candidate> lefts, rights;
  for (const Permutation& p : all_permutations(n)) {
    if (p.length() > budget) continue;
    const ArcDiagram d = perm_to_diagram(p);
    if (bra(compose(d, free).diagram) == left_half) lefts.push_back({p, d});
    if (ket(compose(free, d).diagram) == right_half) rights.push_back({p, d});
  }

  std::vector<TriangularFactorization> found;
  for (const Candidate& l : lefts) {
    const ArcDiagram lf = compose(l.diagram, free).diagram;
    for (const Candidate& r : rights) {
      if (l.perm.length() + r.perm.length() != budget) continue;
      if (compose(lf, r.diagram).diagram != target) continue;
      if (!dominance_leq(label, dominance_meet(prop_lab(l.diagram), prop_lab(r.diagram)))) continue;
      found.push_back({l.perm, label, r.perm});
    }
  }
  if (found.size() != 1) {
    std::string report = "triangular factorization of " + sigma.to_string() + ": " +
                         std::to_string(found.size()) + " candidate pairs";
    for (const auto& f : found) report += " (" + f.left.to_string() + "," + f.right.to_string() + ")";
    throw InvariantViolation(report);
  }
  return found.front();
}

}  // namespace okada
