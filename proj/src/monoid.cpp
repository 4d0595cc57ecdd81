#include "okada/monoid.hpp"

#include "okada/algebra.hpp"
#include "okada/errors.hpp"
#include "okada/rewrite.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace okada {

ArcDiagram mproduct(const ArcDiagram& e, const ArcDiagram& f) {
  if (e.rank() != f.rank()) throw std::invalid_argument("monoid product of different ranks");
  return compose(e, f).diagram;
}

ArcDiagram mpower(const ArcDiagram& e, int k) {
  if (k < 0) throw std::invalid_argument("negative power");
  ArcDiagram out = identity(e.rank());
  for (int i = 0; i < k; ++i) out = mproduct(out, e);
  return out;
}

bool is_idempotent(const ArcDiagram& e) { return mproduct(e, e) == e; }
bool is_involutive(const ArcDiagram& e) { return mirror(e) == e; }

int aperiodicity_index(const ArcDiagram& e) {
  ArcDiagram power = e;
  for (int k = 1;; ++k) {
    ArcDiagram next = mproduct(power, e);
    if (next == power) return k;
    if (k > 4 * e.rank() + 4) throw InvariantViolation("no stable power for " + e.to_string());
    power = std::move(next);
  }
}

unsigned default_threads() {
  if (const char* env = std::getenv("OKADA_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("OKADA_THREADS must be a positive integer, got ") + env);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t idempotent_count(int rank, unsigned threads) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  if (threads == 0) threads = default_threads();
  const std::size_t shards = std::min<std::size_t>(threads, std::max<std::size_t>(1, matching_count(rank)));
  std::atomic<std::uint64_t> total{0};
  std::vector<std::thread> workers;
  for (std::size_t shard = 0; shard < shards; ++shard) {
    workers.emplace_back([&, shard] {
      std::uint64_t count = 0;
      for_each_diagram(
          rank, [&](const ArcDiagram& d) { count += is_idempotent(d); }, shard, shards);
      total += count;
    });
  }
  for (auto& w : workers) w.join();
  return total;
}

namespace {

// Tarjan's algorithm, iterative; returns component ids and their count.
std::pair<std::vector<std::size_t>, std::size_t> strongly_connected(
    const std::vector<std::vector<std::size_t>>& graph) {
  const std::size_t n = graph.size(), unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, unset), low(n, 0), component(n, unset), stack;
  std::vector<char> on_stack(n, 0);
  std::size_t counter = 0, components = 0;
  struct Frame {
    std::size_t node, edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != unset) continue;
    std::vector<Frame> calls{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!calls.empty()) {
      Frame& f = calls.back();
      if (f.edge < graph[f.node].size()) {
        const std::size_t next = graph[f.node][f.edge++];
        if (index[next] == unset) {
          index[next] = low[next] = counter++;
          stack.push_back(next);
          on_stack[next] = 1;
          calls.push_back({next, 0});
        } else if (on_stack[next]) {
          low[f.node] = std::min(low[f.node], index[next]);
        }
        continue;
      }
      const std::size_t node = f.node;
      calls.pop_back();
      if (!calls.empty()) low[calls.back().node] = std::min(low[calls.back().node], low[node]);
      if (low[node] == index[node]) {
        std::size_t member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = 0;
          component[member] = components;
        } while (member != node);
        ++components;
      }
    }
  }
  return {component, components};
}

}  // namespace

GreenClasses::GreenClasses(int rank) : rank_(rank), elements_(enumerate_diagrams(rank)) {
  if (rank < 1) throw std::invalid_argument("Green classes need rank >= 1");
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
  std::vector<ArcDiagram> gens;
  for (int i = 1; i < rank; ++i) gens.push_back(generator(i, rank));
  right_.resize(elements_.size());
  left_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (const ArcDiagram& g : gens) {
      right_[i].push_back(index_.at(mproduct(elements_[i], g)));
      left_[i].push_back(index_.at(mproduct(g, elements_[i])));
    }
  }
  std::tie(r_, r_count_) = strongly_connected(right_);
  std::tie(l_, l_count_) = strongly_connected(left_);
  std::vector<std::vector<std::size_t>> both(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    both[i] = right_[i];
    both[i].insert(both[i].end(), left_[i].begin(), left_[i].end());
  }
  std::tie(j_, j_count_) = strongly_connected(both);
}

std::size_t GreenClasses::index_of(const ArcDiagram& e) const {
  auto it = index_.find(e);
  if (it == index_.end()) throw std::invalid_argument("not an element of rank " + std::to_string(rank_));
  return it->second;
}

std::vector<std::size_t> GreenClasses::r_class_members(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (r_[k] == r_[i]) out.push_back(k);
  return out;
}

std::vector<std::size_t> GreenClasses::j_class_members(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < elements_.size(); ++k)
    if (j_[k] == j_[i]) out.push_back(k);
  return out;
}

bool GreenClasses::j_below(std::size_t f, std::size_t e) const {
  std::vector<char> seen(elements_.size(), 0);
  std::vector<std::size_t> todo{e};
  seen[e] = 1;
  while (!todo.empty()) {
    const std::size_t cur = todo.back();
    todo.pop_back();
    if (cur == f) return true;
    for (const auto* edges : {&right_[cur], &left_[cur]})
      for (std::size_t next : *edges)
        if (!seen[next]) {
          seen[next] = 1;
          todo.push_back(next);
        }
  }
  return false;
}

ArcDiagram r_class_rep(const GreenClasses& classes, const ArcDiagram& e) {
  std::vector<ArcDiagram> found;
  for (std::size_t k : classes.r_class_members(classes.index_of(e)))
    if (is_involutive(classes.elements()[k])) found.push_back(classes.elements()[k]);
  if (found.size() != 1)
    throw InvariantViolation("R-class of " + e.to_string() + " has " + std::to_string(found.size()) +
                             " involutive elements");
  return found.front();
}

ArcDiagram j_class_rep(const ArcDiagram& e) { return perm_to_diagram(free_involution(prop_lab(e))); }

}  // namespace okada
