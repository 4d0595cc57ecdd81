#include "okada/fibonacci.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "okada/errors.hpp"

namespace okada {

namespace {

void check_increasing_in_range(int rank, std::span<const int> elements) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  int prev = 0;
  for (int e : elements) {
    if (e <= prev) throw std::invalid_argument("elements must be strictly increasing and positive");
    if (e > rank) throw std::invalid_argument("element " + std::to_string(e) + " exceeds rank " +
                                              std::to_string(rank));
    prev = e;
  }
}

}  // namespace

bool is_fibonacci_set(int rank, std::span<const int> elements) {
  check_increasing_in_range(rank, elements);
  if ((static_cast<int>(elements.size()) - rank) % 2 != 0) return false;
  for (std::size_t l = 0; l < elements.size(); ++l) {
    if ((elements[l] - static_cast<int>(l) - 1) % 2 != 0) return false;
  }
  return true;
}

FibonacciSet::FibonacciSet(int rank, std::vector<int> elements)
    : rank_(rank), elements_(std::move(elements)) {
  if (!is_fibonacci_set(rank_, elements_)) {
    throw std::invalid_argument("not a Fibonacci set: " + to_string());
  }
}

FibonacciSet FibonacciSet::interval(int rank) {
  std::vector<int> all(rank);
  for (int i = 0; i < rank; ++i) all[i] = i + 1;
  return FibonacciSet(rank, std::move(all));
}

bool FibonacciSet::contains(int value) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), value);
}

std::string FibonacciSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elements_[i]);
  }
  out += "}_" + std::to_string(rank_);
  return out;
}

std::vector<FibonacciSet> enumerate_yfs(int rank) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  std::vector<FibonacciSet> out;
  std::vector<int> current;
  // Depth-first in lexicographic order: a prefix is emitted before its extensions.
  auto visit = [&](auto&& self) -> void {
    if ((static_cast<int>(current.size()) - rank) % 2 == 0) out.emplace_back(rank, current);
    const int next_pos = static_cast<int>(current.size()) + 1;
    const int start = current.empty() ? 1 : current.back() + 1;
    for (int t = start; t <= rank; ++t) {
      if ((t - next_pos) % 2 != 0) continue;
      current.push_back(t);
      self(self);
      current.pop_back();
    }
  };
  visit(visit);
  return out;
}

std::vector<FibonacciSet> yf_covers(const FibonacciSet& s) {
  const int n = s.rank();
  std::vector<FibonacciSet> out;
  std::vector<int> elems(s.elements().begin(), s.elements().end());
  if (!elems.empty()) {
    std::vector<int> removed(elems.begin(), elems.end() - 1);
    out.emplace_back(n + 1, std::move(removed));
  }
  const int parity = static_cast<int>(elems.size()) + 1;
  for (int t = s.max() + 1; t <= n + 1; ++t) {
    if ((t - parity) % 2 != 0) continue;
    std::vector<int> added = elems;
    added.push_back(t);
    out.emplace_back(n + 1, std::move(added));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FibonacciSet> yf_covered_by(const FibonacciSet& s) {
  const int n = s.rank();
  std::vector<FibonacciSet> out;
  if (n == 0) return out;
  std::vector<int> elems(s.elements().begin(), s.elements().end());
  if (!elems.empty()) {
    std::vector<int> removed(elems.begin(), elems.end() - 1);
    out.emplace_back(n - 1, std::move(removed));
  }
  const int parity = static_cast<int>(elems.size()) + 1;
  for (int t = s.max() + 1; t <= n - 1; ++t) {
    if ((t - parity) % 2 != 0) continue;
    std::vector<int> added = elems;
    added.push_back(t);
    out.emplace_back(n - 1, std::move(added));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool yf_covering(const FibonacciSet& lower, const FibonacciSet& upper) {
  if (upper.rank() != lower.rank() + 1) return false;
  auto strip = [](const FibonacciSet& x) {
    return std::vector<int>(x.elements().begin(), x.elements().end() - (x.empty() ? 0 : 1));
  };
  auto l = std::vector<int>(lower.elements().begin(), lower.elements().end());
  auto u = std::vector<int>(upper.elements().begin(), upper.elements().end());
  return (!upper.empty() && strip(upper) == l) || (!lower.empty() && strip(lower) == u);
}

FibonacciWord::FibonacciWord(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_) {
    if (c != '1' && c != '2') throw std::invalid_argument("Fibonacci words use letters 1 and 2");
  }
}

int FibonacciWord::rank() const noexcept {
  int r = 0;
  for (char c : letters_) r += c - '0';
  return r;
}

FibonacciSet word_to_set(const FibonacciWord& w) {
  const auto& letters = w.letters();
  std::vector<int> elems;
  int suffix = 0;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    suffix += *it - '0';
    if (*it == '1') elems.push_back(suffix);
  }
  // suffix sums were collected from the shortest suffix up, i.e. increasing
  return FibonacciSet(w.rank(), std::move(elems));
}

FibonacciWord set_to_word(const FibonacciSet& s) {
  std::string letters;
  int remaining = s.rank();
  auto elems = s.elements();
  auto top = elems.rbegin();
  while (remaining > 0) {
    if (top != elems.rend() && *top == remaining) {
      letters += '1';
      remaining -= 1;
      ++top;
    } else {
      letters += '2';
      remaining -= 2;
    }
  }
  if (remaining != 0 || top != elems.rend()) {
    throw InvariantViolation("set_to_word: inconsistent Fibonacci set " + s.to_string());
  }
  return FibonacciWord(std::move(letters));
}

Chain::Chain() : sets_{FibonacciSet{}} {}

Chain::Chain(std::vector<FibonacciSet> sets) : sets_(std::move(sets)) {
  if (sets_.empty()) throw std::invalid_argument("a chain has at least one element");
  if (sets_.front() != FibonacciSet{}) throw std::invalid_argument("a chain starts at the rank-0 empty set");
  for (std::size_t i = 1; i < sets_.size(); ++i) {
    if (!yf_covering(sets_[i - 1], sets_[i])) {
      throw std::invalid_argument("chain step " + sets_[i - 1].to_string() + " -> " +
                                  sets_[i].to_string() + " is not a covering relation");
    }
  }
}

std::vector<Chain> saturated_chains(const FibonacciSet& s) {
  // Walk downward from S; chains are reversed at the end.
  std::vector<FibonacciSet> path{s};
  std::vector<Chain> out;
  auto visit = [&](auto&& self) -> void {
    const FibonacciSet& cur = path.back();
    if (cur.rank() == 0) {
      out.emplace_back(std::vector<FibonacciSet>(path.rbegin(), path.rend()));
      return;
    }
    for (auto& below : yf_covered_by(cur)) {
      path.push_back(below);
      self(self);
      path.pop_back();
    }
  };
  visit(visit);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t chain_count(const FibonacciSet& s) {
  std::map<FibonacciSet, std::uint64_t> memo;
  auto count = [&](auto&& self, const FibonacciSet& x) -> std::uint64_t {
    if (x.rank() == 0) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (auto& below : yf_covered_by(x)) total += self(self, below);
    memo.emplace(x, total);
    return total;
  };
  return count(count, s);
}

bool dominance_leq(const FibonacciSet& s, const FibonacciSet& t) {
  if (s.rank() != t.rank()) {
    throw std::invalid_argument("dominance order compares sets of equal rank: " + s.to_string() +
                                " vs " + t.to_string());
  }
  const std::size_t k = s.size(), l = t.size();
  if (k > l) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (s.elements()[k - 1 - i] > t.elements()[l - 1 - i]) return false;
  }
  return true;
}

bool dominance_less(const FibonacciSet& s, const FibonacciSet& t) {
  return dominance_leq(s, t) && s != t;
}

DominanceLattice::DominanceLattice(int rank) : rank_(rank), elements_(enumerate_yfs(rank)) {
  const std::size_t n = elements_.size();
  leq_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) leq_[a * n + b] = dominance_leq(elements_[a], elements_[b]);

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq(a, b) && leq(b, a)) throw InvariantViolation("dominance is not antisymmetric");
      for (std::size_t c = 0; c < n; ++c) {
        if (leq(a, b) && leq(b, c) && !leq(a, c)) throw InvariantViolation("dominance is not transitive");
      }
    }
  }

  // down_count orders candidates: the greatest lower bound has the largest down-set.
  std::vector<std::size_t> down_count(n, 0), up_count(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (leq(b, a)) ++down_count[a];
      if (leq(a, b)) ++up_count[a];
    }

  meet_.assign(n * n, 0);
  join_.assign(n * n, 0);
  std::vector<std::size_t> bounds;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (leq(c, a) && leq(c, b)) bounds.push_back(c);
      if (bounds.empty()) throw InvariantViolation("no lower bound in dominance lattice");
      auto best = *std::max_element(bounds.begin(), bounds.end(), [&](auto x, auto y) {
        return down_count[x] < down_count[y];
      });
      for (auto c : bounds)
        if (!leq(c, best)) throw InvariantViolation("no greatest lower bound for " + elements_[a].to_string() +
                                                    ", " + elements_[b].to_string());
      meet_[a * n + b] = best;

      bounds.clear();
      for (std::size_t c = 0; c < n; ++c)
        if (leq(a, c) && leq(b, c)) bounds.push_back(c);
      if (bounds.empty()) throw InvariantViolation("no upper bound in dominance lattice");
      best = *std::max_element(bounds.begin(), bounds.end(), [&](auto x, auto y) {
        return up_count[x] < up_count[y];
      });
      for (auto c : bounds)
        if (!leq(best, c)) throw InvariantViolation("no least upper bound for " + elements_[a].to_string() +
                                                    ", " + elements_[b].to_string());
      join_[a * n + b] = best;
    }
  }

  bool found_bottom = false;
  for (std::size_t a = 0; a < n; ++a) {
    if (down_count[a] == 1) {
      if (found_bottom || up_count[a] != n) throw InvariantViolation("dominance lattice bottom not unique");
      bottom_ = a;
      found_bottom = true;
    }
    if (up_count[a] == 1) top_ = a;
  }

  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) cover = false;
      if (cover) hasse_.emplace_back(a, b);
    }
  }

  // Longest-path level from the bottom; graded iff every cover raises it by one.
  level_.assign(n, -1);
  level_[bottom_] = 0;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) { return down_count[x] < down_count[y]; });
  for (auto v : order) {
    for (auto& [lo, hi] : hasse_) {
      if (hi == v && level_[lo] >= 0) level_[v] = std::max(level_[v], level_[lo] + 1);
    }
  }
  for (auto& [lo, hi] : hasse_) {
    if (level_[hi] != level_[lo] + 1) {
      throw InvariantViolation("dominance lattice of rank " + std::to_string(rank) + " is not graded");
    }
  }
}

std::size_t DominanceLattice::index_of(const FibonacciSet& s) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
  if (it == elements_.end() || *it != s) throw std::invalid_argument("set not in lattice: " + s.to_string());
  return static_cast<std::size_t>(it - elements_.begin());
}

FibonacciSet DominanceLattice::meet(const FibonacciSet& s, const FibonacciSet& t) const {
  return elements_[meet(index_of(s), index_of(t))];
}

FibonacciSet DominanceLattice::join(const FibonacciSet& s, const FibonacciSet& t) const {
  return elements_[join(index_of(s), index_of(t))];
}

int DominanceLattice::level(const FibonacciSet& s) const { return level(index_of(s)); }

namespace {

const DominanceLattice& cached_lattice(int rank) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<DominanceLattice>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[rank];
  if (!slot) slot = std::make_unique<DominanceLattice>(rank);
  return *slot;
}

void require_same_rank(const FibonacciSet& s, const FibonacciSet& t) {
  if (s.rank() != t.rank()) throw std::invalid_argument("rank mismatch: " + s.to_string() + " vs " + t.to_string());
}

}  // namespace

FibonacciSet dominance_meet(const FibonacciSet& s, const FibonacciSet& t) {
  require_same_rank(s, t);
  return cached_lattice(s.rank()).meet(s, t);
}

FibonacciSet dominance_join(const FibonacciSet& s, const FibonacciSet& t) {
  require_same_rank(s, t);
  return cached_lattice(s.rank()).join(s, t);
}

int dominance_rank(const FibonacciSet& s) { return cached_lattice(s.rank()).level(s); }

bool is_free_set(std::span<const int> set, int rank) {
  int prev = -1;
  for (int i : set) {
    if (i < 1 || i > rank - 1 || i <= prev) return false;
    if (i == prev + 1) return false;
    prev = i;
  }
  return true;
}

std::vector<int> free_set(const FibonacciSet& s) {
  std::vector<int> out;
  int last = 0;
  for (int i = 1; i < s.rank(); ++i) {
    if (s.contains(i)) last = i;
    if ((i - last) % 2 == 1) out.push_back(i);
  }
  return out;
}

FibonacciSet free_set_inverse(std::span<const int> free, int rank) {
  if (!is_free_set(free, rank)) throw std::invalid_argument("not a free set of rank " + std::to_string(rank));
  std::vector<char> covered(rank + 2, 0);
  for (int i : free) covered[i] = covered[i + 1] = 1;
  std::vector<int> elems;
  for (int i = 1; i <= rank; ++i)
    if (!covered[i]) elems.push_back(i);
  return FibonacciSet(rank, std::move(elems));
}

}  // namespace okada
