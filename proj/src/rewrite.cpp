#include "okada/rewrite.hpp"

#include "okada/errors.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <stdexcept>

namespace okada {

Heap::Heap(int rank, std::vector<Cell> cells) : Heap(rank) {
  for (const Cell& c : cells) {
    if (c.row < 1 || c.row > rank - 1 || c.row > c.diagonal)
      throw std::invalid_argument("cell (" + std::to_string(c.diagonal) + "," + std::to_string(c.row) +
                                  ") outside the trapezoid");
    auto& row = rows_[c.row - 1];
    auto it = std::lower_bound(row.begin(), row.end(), c.diagonal);
    if (it != row.end() && *it == c.diagonal) throw std::invalid_argument("repeated cell");
    row.insert(it, c.diagonal);
  }
}

std::vector<Heap::Cell> Heap::cells() const {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (int d : rows_[r]) out.push_back({d, static_cast<int>(r) + 1});
  std::sort(out.begin(), out.end(), [](const Cell& a, const Cell& b) {
    return a.diagonal != b.diagonal ? a.diagonal < b.diagonal : a.row > b.row;
  });
  return out;
}

bool Heap::occupied(int diagonal, int row) const {
  if (row < 1 || row > static_cast<int>(rows_.size())) return false;
  return std::binary_search(rows_[row - 1].begin(), rows_[row - 1].end(), diagonal);
}

int Heap::diagonal_count() const {
  int last = 0;
  for (const auto& row : rows_)
    if (!row.empty()) last = std::max(last, row.back());
  return last;
}

std::size_t Heap::size() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.size();
  return n;
}

Heap heap_from_word(std::span<const int> word, int rank) {
  std::vector<int> last(rank + 1, 0);  // last diagonal used in each row, 0 if none
  std::vector<Heap::Cell> cells;
  for (int a : word) {
    if (a < 1 || a >= rank) throw std::out_of_range("letter " + std::to_string(a) + " outside [1, N-1]");
    int d = std::max(a, last[a] + 1);
    if (a > 1) d = std::max(d, last[a - 1] + 1);
    if (a + 1 < rank) d = std::max(d, last[a + 1]);
    last[a] = d;
    cells.push_back({d, a});
  }
  return Heap(rank, std::move(cells));
}

Word reading(const Heap& heap) {
  Word w;
  for (const Heap::Cell& c : heap.cells()) w.push_back(c.row);
  return w;
}

bool commutation_equivalent(std::span<const int> a, std::span<const int> b, int rank) {
  return heap_from_word(a, rank) == heap_from_word(b, rank);
}

Composition trace_fplc(const Heap& heap) {
  const int n = heap.rank();
  if (n <= 1) return {identity(n), {}};
  const int rows = n - 1;
  const int diagonals = std::max(rows, heap.diagonal_count());
  enum Side { NW = 0, NE = 1, SE = 2, SW = 3 };
  auto id = [&](int d, int r, int side) { return ((d - 1) * rows + (r - 1)) * 4 + side; };
  auto exists = [&](int d, int r) { return d >= 1 && d <= diagonals && r >= 1 && r <= std::min(d, rows); };

  const int total = diagonals * rows * 4;
  constexpr int kFree = INT_MAX;
  std::vector<int> inner(total, -1), inner_level(total, kFree);
  std::vector<int> outer(total, -1), outer_level(total, kFree), boundary(total, 0);

  auto join = [&](int u, int v, int level) {
    outer[u] = v;
    outer[v] = u;
    outer_level[u] = outer_level[v] = level;
  };
  for (int d = 1; d <= diagonals; ++d) {
    for (int r = 1; r <= std::min(d, rows); ++r) {
      if (heap.occupied(d, r)) {
        inner[id(d, r, NW)] = id(d, r, SW);
        inner[id(d, r, SW)] = id(d, r, NW);
        inner[id(d, r, NE)] = id(d, r, SE);
        inner[id(d, r, SE)] = id(d, r, NE);
        for (int s = 0; s < 4; ++s) inner_level[id(d, r, s)] = r;
      } else {
        inner[id(d, r, NW)] = id(d, r, NE);
        inner[id(d, r, NE)] = id(d, r, NW);
        inner[id(d, r, SW)] = id(d, r, SE);
        inner[id(d, r, SE)] = id(d, r, SW);
        inner_level[id(d, r, NW)] = inner_level[id(d, r, NE)] = r + 1;
        inner_level[id(d, r, SW)] = inner_level[id(d, r, SE)] = r;
      }
      // shared edges and completions, each recorded once from its left cell
      if (exists(d + 1, r + 1)) join(id(d, r, NE), id(d + 1, r + 1, SW), kFree);
      if (exists(d, r - 1)) join(id(d, r, SE), id(d, r - 1, NW), kFree);
      if (r == 1 && d < diagonals) join(id(d, 1, SE), id(d + 1, 1, SW), 1);
      if (r == rows && d >= rows && d < diagonals) join(id(d, rows, NE), id(d + 1, rows, NW), n);
      // boundary endpoints
      if (r == 1 && d == 1) boundary[id(1, 1, SW)] = 1;
      if (r == d && d <= rows) boundary[id(d, d, NW)] = d + 1;
      if (d == diagonals) {
        boundary[id(d, r, NE)] = -(r + 1);
        if (r == 1) boundary[id(d, 1, SE)] = -1;
      }
    }
  }

  std::vector<char> seen(total, 0);
  std::vector<Arc> arcs;
  for (int start = 0; start < total; ++start) {
    if (boundary[start] == 0 || seen[start]) continue;
    int node = start, h = kFree;
    while (true) {
      seen[node] = 1;
      const int across = inner[node];
      h = std::min(h, inner_level[node]);
      seen[across] = 1;
      if (boundary[across] != 0) {
        arcs.push_back({boundary[start], boundary[across], h});
        break;
      }
      h = std::min(h, outer_level[across]);
      node = outer[across];
      if (node < 0) throw InvariantViolation("trace_fplc: dangling edge");
    }
  }
  std::map<int, int> loop_counts;
  for (int start = 0; start < total; ++start) {
    if (seen[start] || inner[start] < 0) continue;
    int node = start, h = kFree;
    do {
      seen[node] = 1;
      const int across = inner[node];
      seen[across] = 1;
      h = std::min({h, inner_level[node], outer_level[across]});
      node = outer[across];
      if (node < 0) throw InvariantViolation("trace_fplc: open strand inside the trapezoid");
    } while (node != start);
    ++loop_counts[h];
  }
  Composition out{ArcDiagram(n, arcs), {}};
  for (auto [h, c] : loop_counts) out.loops.push_back({h, c});
  return out;
}

namespace {

struct Move {
  int letter;
  std::size_t drop_second;         // index of the second occurrence
  std::size_t drop_between = 0;    // index of the lone a-1 for the y-move
  bool braid;                      // false: E_aE_a -> x_a E_a, true: E_aE_{a-1}E_a -> y_{a-1} E_a
};

// Moves between consecutive occurrences of each letter; with `first_only`,
// stops at the first one in sweep order (rows bottom up, left to right).
std::vector<Move> find_moves(const Word& w, int rank, bool first_only) {
  std::vector<Move> moves;
  std::vector<std::vector<std::size_t>> at(rank + 1);
  for (std::size_t k = 0; k < w.size(); ++k) at[w[k]].push_back(k);
  for (int a = 1; a < rank; ++a) {
    for (std::size_t j = 0; j + 1 < at[a].size(); ++j) {
      const std::size_t p = at[a][j], q = at[a][j + 1];
      int below = 0, above = 0;
      std::size_t lone = 0;
      for (std::size_t k = p + 1; k < q; ++k) {
        if (w[k] == a - 1) {
          ++below;
          lone = k;
        } else if (w[k] == a + 1) {
          ++above;
        }
      }
      if (above != 0) continue;
      if (below == 0)
        moves.push_back({a, q, 0, false});
      else if (below == 1)
        moves.push_back({a, q, lone, true});
      else
        continue;
      if (first_only) return moves;
    }
  }
  return moves;
}

void apply(Word& w, const Move& m, Monomial& coefficient) {
  if (m.braid) {
    coefficient *= Monomial::y(m.letter - 1);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(m.drop_second));
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(m.drop_between));
  } else {
    coefficient *= Monomial::x(m.letter);
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(m.drop_second));
  }
}

NormalizationResult finish(Word w, int rank, Monomial coefficient) {
  Permutation sigma = permutation_of_word(w, rank);
  Word canonical = word_from_code(sigma);
  if (!commutation_equivalent(w, canonical, rank))
    throw InvariantViolation("irreducible word is not a code word");
  return {std::move(coefficient), std::move(canonical), std::move(sigma)};
}

void check_letters(std::span<const int> word, int rank) {
  for (int a : word)
    if (a < 1 || a >= rank) throw std::out_of_range("letter " + std::to_string(a) + " outside [1, N-1]");
}

}  // namespace

NormalizationResult normalize(std::span<const int> word, int rank) {
  check_letters(word, rank);
  Word w(word.begin(), word.end());
  Monomial coefficient;
  while (true) {
    auto moves = find_moves(w, rank, true);
    if (moves.empty()) break;
    apply(w, moves.front(), coefficient);
  }
  return finish(std::move(w), rank, std::move(coefficient));
}

NormalizationResult normalize_random(std::span<const int> word, int rank, std::mt19937_64& rng) {
  check_letters(word, rank);
  Word w(word.begin(), word.end());
  Monomial coefficient;
  while (true) {
    auto moves = find_moves(w, rank, false);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    apply(w, moves[pick(rng)], coefficient);
  }
  return finish(std::move(w), rank, std::move(coefficient));
}

NormalizationResult multiply_words(std::span<const int> a, std::span<const int> b, int rank) {
  Word w(a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return normalize(w, rank);
}

NormalizationResult multiply_permutations(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) throw std::invalid_argument("permutation size mismatch");
  return multiply_words(word_from_code(sigma), word_from_code(tau), sigma.size());
}

ArcDiagram perm_to_diagram(const Permutation& sigma) {
  const Word w = word_from_code(sigma);
  DiagramProduct p = evaluate_word(w, sigma.size());
  if (!p.coefficient.is_one()) throw InvariantViolation("code word produced loops: " + sigma.to_string());
  return std::move(p.diagram);
}

Permutation diagram_to_perm(const ArcDiagram& d) {
  std::vector<int> c(d.rank(), 0);
  ArcDiagram cur = d;
  while (cur.rank() > 0) {
    const int n = cur.rank();
    if (auto inner = strip_iota(cur)) {
      cur = std::move(*inner);
      continue;
    }
    Peeling p = peel(cur);
    c[n - 1] = n - p.index;
    cur = std::move(p.flat);
  }
  return from_code(c);
}

std::pair<Chain, Chain> rs(const Permutation& sigma) {
  const ArcDiagram d = perm_to_diagram(sigma);
  return {chain_of(bra(d)), chain_of(ket(d))};
}

Permutation rs_inverse(const Chain& p, const Chain& q) {
  if (p.top() != q.top())
    throw std::invalid_argument("chains end at different sets: " + p.top().to_string() + " vs " +
                                q.top().to_string());
  return diagram_to_perm(glue(chain_inverse(p), chain_inverse(q)));
}

}  // namespace okada
