#include "doctest.h"

#include "okada/errors.hpp"
#include "okada/rewrite.hpp"

#include <queue>
#include <random>
#include <set>

using namespace okada;

namespace {

const Word kDiamondWord{2, 1, 3, 4, 2, 5, 2, 1, 4, 2, 3, 2, 1, 1};

Heap diamond_heap() {
  return Heap(6, {{2, 2}, {2, 1}, {3, 3}, {4, 4}, {4, 2}, {5, 5}, {5, 2}, {5, 1}, {6, 4}, {6, 2}, {7, 3}, {7, 2},
                  {7, 1}, {8, 1}});
}

const ArcDiagram& diamond_arcs() {
  static const ArcDiagram d(6, {{5, -3, 1}, {1, 4, 1}, {-5, -4, 2}, {6, -6, 4}, {2, 3, 2}, {-2, -1, 1}});
  return d;
}

// All words reachable by swapping adjacent letters that differ by at least 2.
std::set<Word> commutation_class(const Word& w) {
  std::set<Word> seen{w};
  std::queue<Word> todo;
  todo.push(w);
  while (!todo.empty()) {
    Word cur = todo.front();
    todo.pop();
    for (std::size_t k = 0; k + 1 < cur.size(); ++k) {
      if (std::abs(cur[k] - cur[k + 1]) < 2) continue;
      Word next = cur;
      std::swap(next[k], next[k + 1]);
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return seen;
}

// Reduced words of sigma found by exhaustive search over words of length l(sigma).
std::vector<Word> reduced_words(const Permutation& sigma) {
  const int n = sigma.size(), len = sigma.length();
  std::vector<Word> out;
  Word w;
  std::function<void()> grow = [&] {
    if (static_cast<int>(w.size()) == len) {
      if (permutation_of_word(w, n) == sigma) out.push_back(w);
      return;
    }
    for (int a = 1; a < n; ++a) {
      w.push_back(a);
      if (permutation_of_word(w, n).length() == static_cast<int>(w.size())) grow();
      w.pop_back();
    }
  };
  grow();
  return out;
}

Word random_word(std::mt19937_64& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(1, rank - 1);
  Word w(len(rng));
  for (int& a : w) a = letter(rng);
  return w;
}

Monomial x_part(const Monomial& m) {
  Monomial out;
  for (std::size_t i = 0; i < m.x_exponents().size(); ++i)
    if (m.x_exponents()[i]) out *= Monomial::x(static_cast<int>(i) + 1, m.x_exponents()[i]);
  return out;
}

Monomial loop_monomial(const std::vector<LoopRecord>& loops) {
  Monomial m;
  for (const LoopRecord& l : loops) m *= Monomial::x(l.height, l.count);
  return m;
}

}  // namespace

TEST_CASE("codes and code words") {
  CHECK(code(Permutation::identity(4)) == std::vector<int>{0, 0, 0, 0});
  CHECK(word_from_code(Permutation::identity(4)).empty());
  CHECK(code(Permutation({2, 1})) == std::vector<int>{0, 1});
  CHECK(word_from_code(Permutation({2, 1})) == Word{1});
  CHECK(code(Permutation({2, 3, 1})) == std::vector<int>{0, 1, 1});
  CHECK(word_from_code(Permutation({2, 3, 1})) == Word{1, 2});
  CHECK_THROWS_AS(Permutation({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(from_code(std::vector<int>{1}), std::invalid_argument);

  for (int n = 0; n <= 7; ++n) {
    for (const Permutation& s : all_permutations(n)) {
      const auto c = code(s);
      CHECK(from_code(c) == s);
      const Word w = word_from_code(s);
      CHECK(static_cast<int>(w.size()) == s.length());
      CHECK(permutation_of_word(w, n) == s);
    }
  }
}

TEST_CASE("code words are the lexicographically least reduced words") {
  for (int n = 1; n <= 5; ++n) {
    for (const Permutation& s : all_permutations(n)) {
      auto words = reduced_words(s);
      REQUIRE(!words.empty());
      CHECK(*std::min_element(words.begin(), words.end()) == word_from_code(s));
    }
  }
}

TEST_CASE("heaps represent commutation classes") {
  CHECK(heap_from_word(Word{}, 5) == Heap(5));
  CHECK(reading(Heap(5)).empty());
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Word w = random_word(rng, 5, 7);
    const auto cls = commutation_class(w);
    const Word r = reading(heap_from_word(w, 5));
    CHECK(cls.count(r) == 1);
    for (const Word& v : cls) CHECK(heap_from_word(v, 5) == heap_from_word(w, 5));
    const Word other = random_word(rng, 5, 7);
    CHECK(commutation_equivalent(w, other, 5) == (cls.count(other) == 1));
  }
  CHECK_THROWS_AS(Heap(4, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Heap(4, {{5, 4}}), std::invalid_argument);
  CHECK_THROWS_AS(heap_from_word(Word{4}, 4), std::out_of_range);
}

TEST_CASE("diamond diagram: reading, loops and arcs") {
  const Heap figure = diamond_heap();
  CHECK(reading(figure) == kDiamondWord);
  CHECK(commutation_equivalent(reading(figure), kDiamondWord, 6));
  Composition traced = trace_fplc(figure);
  CHECK(traced.diagram == diamond_arcs());
  Composition greedy = trace_fplc(heap_from_word(kDiamondWord, 6));
  CHECK(greedy.diagram == diamond_arcs());
  CHECK(greedy.loops == traced.loops);
  DiagramProduct product = evaluate_word(kDiamondWord, 6);
  CHECK(product.diagram == diamond_arcs());
  CHECK(product.coefficient == loop_monomial(traced.loops));

  // the word ends in E_1 E_1, so it is not a code word
  NormalizationResult r = normalize(kDiamondWord, 6);
  CHECK(r.coefficient.x_exponent(1) >= 1);
  CHECK(x_part(r.coefficient) == product.coefficient);
  CHECK(perm_to_diagram(r.permutation) == diamond_arcs());
}

TEST_CASE("loop configurations agree with the arc product") {
  for (int n = 1; n <= 4; ++n) CHECK(trace_fplc(Heap(n)).diagram == identity(n));
  std::mt19937_64 rng(23);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      const Word w = random_word(rng, n, 3 * n);
      Composition traced = trace_fplc(heap_from_word(w, n));
      DiagramProduct product = evaluate_word(w, n);
      CHECK(traced.diagram == product.diagram);
      CHECK(loop_monomial(traced.loops) == product.coefficient);
    }
  }
}

TEST_CASE("normalization of the defining relations") {
  auto nf = [](Word w, int n) { return normalize(w, n); };
  CHECK(nf({1, 1}, 2).coefficient == Monomial::x(1));
  CHECK(nf({1, 1}, 2).normal_word == Word{1});
  CHECK(nf({2, 1, 2}, 3).coefficient == Monomial::y(1));
  CHECK(nf({2, 1, 2}, 3).normal_word == Word{2});
  CHECK(nf({1, 3}, 4).normal_word == nf({3, 1}, 4).normal_word);
  CHECK(nf({1, 3}, 4).coefficient.is_one());
  for (int n = 2; n <= 8; ++n) {
    for (int i = 1; i < n; ++i) {
      NormalizationResult sq = nf({i, i}, n);
      CHECK(sq.coefficient == Monomial::x(i));
      CHECK(sq.normal_word == Word{i});
      for (int j = i + 2; j < n; ++j) {
        CHECK(nf({i, j}, n).permutation == nf({j, i}, n).permutation);
        CHECK(nf({i, j}, n).coefficient.is_one());
      }
      if (i + 1 < n) {
        NormalizationResult braid = nf({i + 1, i, i + 1}, n);
        CHECK(braid.coefficient == Monomial::y(i));
        CHECK(braid.normal_word == Word{i + 1});
        NormalizationResult other = nf({i, i + 1, i}, n);
        CHECK(other.coefficient.is_one());
        CHECK(other.normal_word.size() == 3);
      }
    }
  }
}

TEST_CASE("code words are exactly the normal forms") {
  for (int n = 1; n <= 7; ++n) {
    std::set<Word> forms;
    for (const Permutation& s : all_permutations(n)) {
      NormalizationResult r = normalize(word_from_code(s), n);
      CHECK(r.coefficient.is_one());
      CHECK(r.permutation == s);
      forms.insert(r.normal_word);
    }
    std::size_t factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    CHECK(forms.size() == factorial);
  }
  // every word of length <= 7 in rank 4 lands on one of the 24 code words
  std::set<Word> reached;
  Word w;
  std::function<void()> grow = [&] {
    reached.insert(normalize(w, 4).normal_word);
    if (w.size() == 7) return;
    for (int a = 1; a <= 3; ++a) {
      w.push_back(a);
      grow();
      w.pop_back();
    }
  };
  grow();
  CHECK(reached.size() == 24);
}

TEST_CASE("normal forms do not depend on the move order") {
  std::mt19937_64 rng(29);
  for (int n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      const Word w = random_word(rng, n, 4 * n);
      NormalizationResult a = normalize(w, n);
      NormalizationResult b = normalize_random(w, n, rng);
      NormalizationResult c = normalize_random(w, n, rng);
      CHECK(a.coefficient == b.coefficient);
      CHECK(b.coefficient == c.coefficient);
      CHECK(a.permutation == b.permutation);
      CHECK(b.permutation == c.permutation);
    }
  }
}

TEST_CASE("normalization is compatible with concatenation") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const Word u = random_word(rng, 6, 12), v = random_word(rng, 6, 12);
    NormalizationResult whole = multiply_words(u, v, 6);
    NormalizationResult left = normalize(u, 6);
    NormalizationResult rest = multiply_words(left.normal_word, v, 6);
    CHECK(whole.permutation == rest.permutation);
    CHECK(whole.coefficient == left.coefficient * rest.coefficient);
    NormalizationResult again = normalize(whole.normal_word, 6);
    CHECK(again.coefficient.is_one());
    CHECK(again.permutation == whole.permutation);
  }
}

TEST_CASE("structure constants match the arc product") {
  for (int n = 1; n <= 5; ++n) {
    auto perms = all_permutations(n);
    for (const Permutation& s : perms) {
      const ArcDiagram ds = perm_to_diagram(s);
      for (const Permutation& t : perms) {
        NormalizationResult r = multiply_permutations(s, t);
        DiagramProduct p = product_y1(ds, perm_to_diagram(t));
        CHECK(perm_to_diagram(r.permutation) == p.diagram);
        CHECK(x_part(r.coefficient) == p.coefficient);
      }
    }
  }
}

TEST_CASE("permutations and diagrams correspond") {
  CHECK(perm_to_diagram(Permutation::identity(5)) == identity(5));
  CHECK(perm_to_diagram(Permutation({2, 1})) == generator(1, 2));
  for (int n = 0; n <= 7; ++n) {
    std::set<ArcDiagram> images;
    for (const Permutation& s : all_permutations(n)) {
      const ArcDiagram d = perm_to_diagram(s);
      images.insert(d);
      CHECK(diagram_to_perm(d) == s);
      if (n <= 6) CHECK(mirror(d) == perm_to_diagram(s.inverse()));
    }
    auto all = enumerate_diagrams(n);
    CHECK(images == std::set<ArcDiagram>(all.begin(), all.end()));
  }
}

TEST_CASE("the RS correspondence") {
  for (int n = 0; n <= 6; ++n) {
    auto [p, q] = rs(Permutation::identity(n));
    CHECK(p == q);
    for (int k = 0; k <= n; ++k) CHECK(p[k] == FibonacciSet::interval(k));
  }
  for (int n = 1; n <= 7; ++n) {
    std::set<std::pair<Chain, Chain>> pairs;
    for (const Permutation& s : all_permutations(n)) {
      auto pq = rs(s);
      CHECK(pq.first.top() == pq.second.top());
      pairs.insert(pq);
      if (n <= 6) {
        CHECK(rs_inverse(pq.first, pq.second) == s);
        CHECK((pq.first == pq.second) == s.is_involution());
        auto inv = rs(s.inverse());
        CHECK(inv.first == pq.second);
        CHECK(inv.second == pq.first);
      }
    }
    std::size_t expected = 0;
    for (const FibonacciSet& t : enumerate_yfs(n)) expected += chain_count(t) * chain_count(t);
    CHECK(pairs.size() == expected);
  }
  auto [p, q] = rs(Permutation::identity(3));
  Chain other = rs(Permutation({2, 1, 3})).first;
  CHECK_THROWS_AS(rs_inverse(p, other), std::invalid_argument);
}
