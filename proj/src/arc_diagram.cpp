#include "okada/arc_diagram.hpp"

#include "okada/errors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace okada {

int endpoint_position(int endpoint, int rank) {
  if (endpoint == 0 || endpoint > rank || endpoint < -rank)
    throw std::out_of_range("endpoint " + std::to_string(endpoint) + " outside rank " +
                            std::to_string(rank));
  return endpoint > 0 ? endpoint - 1 : 2 * rank + endpoint;
}

int endpoint_at(int position, int rank) {
  if (position < 0 || position >= 2 * rank) throw std::out_of_range("position outside diagram");
  return position < rank ? position + 1 : position - 2 * rank;
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::none: return "none";
    case Violation::crossing: return "crossing";
    case Violation::height_range: return "height_range";
    case Violation::height_parity: return "height_parity";
    case Violation::nesting: return "nesting";
  }
  return "unknown";
}

namespace {

std::size_t mix_hash(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::size_t hash_vectors(int rank, const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t h = static_cast<std::size_t>(rank);
  for (std::size_t i = 0; i < a.size(); ++i)
    h = mix_hash(h, static_cast<std::size_t>(a[i]) * 131u + static_cast<std::size_t>(b[i]));
  return h;
}

int abs_min(int a, int b) { return std::min(std::abs(a), std::abs(b)); }

Violation label_violation(int height, int bound) {
  if (height < 1 || height > bound) return Violation::height_range;
  if ((height - bound) % 2 != 0) return Violation::height_parity;
  return Violation::none;
}

}  // namespace

ArcDiagram::ArcDiagram(int rank, std::span<const Arc> arcs) : rank_(rank) {
  if (rank < 0) throw StructureError("negative rank");
  partner_.assign(2 * rank, -1);
  height_.assign(2 * rank, 0);
  for (const Arc& arc : arcs) {
    int pa, pb;
    try {
      pa = endpoint_position(arc.a, rank);
      pb = endpoint_position(arc.b, rank);
    } catch (const std::out_of_range& e) {
      throw StructureError(e.what());
    }
    if (pa == pb) throw StructureError("arc joins an endpoint to itself");
    if (partner_[pa] != -1 || partner_[pb] != -1)
      throw StructureError("endpoint used twice in arc (" + std::to_string(arc.a) + "," +
                           std::to_string(arc.b) + ")");
    partner_[pa] = pb;
    partner_[pb] = pa;
    height_[pa] = height_[pb] = arc.height;
  }
  if (std::find(partner_.begin(), partner_.end(), -1) != partner_.end())
    throw StructureError("arcs do not cover every endpoint");
}

ArcDiagram ArcDiagram::from_positions(int rank, std::vector<int> partner, std::vector<int> height) {
  const auto n = static_cast<std::size_t>(2 * rank);
  if (rank < 0 || partner.size() != n || height.size() != n)
    throw StructureError("position arrays have the wrong length");
  for (std::size_t p = 0; p < n; ++p) {
    const int q = partner[p];
    if (q < 0 || static_cast<std::size_t>(q) >= n || static_cast<std::size_t>(q) == p ||
        static_cast<std::size_t>(partner[q]) != p || height[q] != height[p])
      throw StructureError("position arrays are not a labeled perfect matching");
  }
  ArcDiagram d;
  d.rank_ = rank;
  d.partner_ = std::move(partner);
  d.height_ = std::move(height);
  return d;
}

int ArcDiagram::partner(int endpoint) const {
  return endpoint_at(partner_[endpoint_position(endpoint, rank_)], rank_);
}

int ArcDiagram::height(int endpoint) const { return height_[endpoint_position(endpoint, rank_)]; }

std::vector<Arc> ArcDiagram::arcs() const {
  std::vector<Arc> out;
  out.reserve(rank_);
  for (int p = 0; p < 2 * rank_; ++p)
    if (partner_[p] > p) out.push_back({endpoint_at(p, rank_), endpoint_at(partner_[p], rank_), height_[p]});
  return out;
}

int ArcDiagram::propagating_count() const {
  int count = 0;
  for (int p = 0; p < rank_; ++p) count += partner_[p] >= rank_;
  return count;
}

std::size_t ArcDiagram::hash() const noexcept { return hash_vectors(rank_, partner_, height_); }

std::string ArcDiagram::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const Arc& arc : arcs()) {
    if (!first) out += ",";
    first = false;
    out += "(" + std::to_string(arc.a) + "," + std::to_string(arc.b) + ")h" + std::to_string(arc.height);
  }
  return out + "}";
}

Violation check(const ArcDiagram& d) {
  const int n = d.rank();
  std::vector<int> open;
  for (int p = 0; p < 2 * n; ++p) {
    const int q = d.partner_at(p);
    if (q > p) {
      open.push_back(p);
    } else {
      if (open.back() != q) return Violation::crossing;
      open.pop_back();
    }
  }
  for (int p = 0; p < 2 * n; ++p) {
    const int q = d.partner_at(p);
    if (q > p) {
      const int h = d.height_at(p);
      if (auto v = label_violation(h, abs_min(endpoint_at(p, n), endpoint_at(q, n))); v != Violation::none)
        return v;
      if (!open.empty() && h <= d.height_at(open.back())) return Violation::nesting;
      open.push_back(p);
    } else {
      open.pop_back();
    }
  }
  return Violation::none;
}

bool validate(const ArcDiagram& d) { return check(d) == Violation::none; }

ArcDiagram identity(int rank) {
  std::vector<Arc> arcs;
  for (int a = 1; a <= rank; ++a) arcs.push_back({a, -a, a});
  return ArcDiagram(rank, arcs);
}

ArcDiagram generator(int i, int rank) {
  if (i < 1 || i >= rank)
    throw std::out_of_range("generator index " + std::to_string(i) + " outside [1," +
                            std::to_string(rank - 1) + "]");
  std::vector<Arc> arcs;
  for (int a = 1; a <= rank; ++a)
    if (a != i && a != i + 1) arcs.push_back({a, -a, a});
  arcs.push_back({i, i + 1, i});
  arcs.push_back({-(i + 1), -i, i});
  return ArcDiagram(rank, arcs);
}

ArcDiagram iota(const ArcDiagram& d) {
  std::vector<Arc> arcs = d.arcs();
  const int n = d.rank() + 1;
  arcs.push_back({n, -n, n});
  return ArcDiagram(n, arcs);
}

ArcDiagram mirror(const ArcDiagram& d) {
  std::vector<Arc> arcs = d.arcs();
  for (Arc& arc : arcs) arc = {-arc.a, -arc.b, arc.height};
  return ArcDiagram(d.rank(), arcs);
}

HalfArcDiagram::HalfArcDiagram(int rank, std::span<const Arc> full_arcs, std::span<const HalfArc> half_arcs)
    : rank_(rank), partner_(rank, -1), height_(rank, 0) {
  if (rank < 0) throw StructureError("negative rank");
  auto claim = [&](int node, int partner, int height) {
    if (node < 1 || node > rank) throw StructureError("node " + std::to_string(node) + " outside [rank]");
    if (partner_[node - 1] != -1) throw StructureError("node " + std::to_string(node) + " used twice");
    partner_[node - 1] = partner;
    height_[node - 1] = height;
  };
  for (const Arc& arc : full_arcs) {
    if (arc.a == arc.b) throw StructureError("full arc joins a node to itself");
    claim(arc.a, arc.b, arc.height);
    claim(arc.b, arc.a, arc.height);
  }
  for (const HalfArc& half : half_arcs) claim(half.node, 0, half.height);
  if (std::find(partner_.begin(), partner_.end(), -1) != partner_.end())
    throw StructureError("arcs do not cover every node");
}

std::vector<Arc> HalfArcDiagram::full_arcs() const {
  std::vector<Arc> out;
  for (int a = 1; a <= rank_; ++a)
    if (partner_[a - 1] > a) out.push_back({a, partner_[a - 1], height_[a - 1]});
  return out;
}

std::vector<HalfArc> HalfArcDiagram::half_arcs() const {
  std::vector<HalfArc> out;
  for (int a = 1; a <= rank_; ++a)
    if (partner_[a - 1] == 0) out.push_back({a, height_[a - 1]});
  return out;
}

std::size_t HalfArcDiagram::hash() const noexcept { return hash_vectors(rank_, partner_, height_); }

std::string HalfArcDiagram::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int a = 1; a <= rank_; ++a) {
    const int b = partner_[a - 1];
    if (b != 0 && b < a) continue;
    if (!first) out += ",";
    first = false;
    out += b == 0 ? "[" + std::to_string(a) + "]" : "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    out += "h" + std::to_string(height_[a - 1]);
  }
  return out + "}";
}

Violation check_half(const HalfArcDiagram& h) {
  std::vector<int> open;
  for (int i = 1; i <= h.rank(); ++i) {
    const int p = h.partner(i);
    if (p == 0 || p > i) {
      open.push_back(i);
    } else {
      if (open.back() != p) return Violation::crossing;
      open.pop_back();
    }
  }
  open.clear();
  for (int i = 1; i <= h.rank(); ++i) {
    const int p = h.partner(i);
    if (p == 0 || p > i) {
      const int t = h.height(i);
      if (auto v = label_violation(t, i); v != Violation::none) return v;
      if (!open.empty() && t <= h.height(open.back())) return Violation::nesting;
      open.push_back(i);
    } else {
      if (open.empty() || open.back() != p) return Violation::crossing;
      open.pop_back();
    }
  }
  return Violation::none;
}

bool validate_half(const HalfArcDiagram& h) { return check_half(h) == Violation::none; }

HalfArcDiagram bra(const ArcDiagram& d) {
  std::vector<Arc> full;
  std::vector<HalfArc> half;
  for (int a = 1; a <= d.rank(); ++a) {
    const int b = d.partner(a);
    if (b < 0)
      half.push_back({a, d.height(a)});
    else if (b > a)
      full.push_back({a, b, d.height(a)});
  }
  return HalfArcDiagram(d.rank(), full, half);
}

HalfArcDiagram ket(const ArcDiagram& d) { return bra(mirror(d)); }

FibonacciSet prop_lab(const HalfArcDiagram& h) {
  std::vector<int> heights;
  for (const HalfArc& half : h.half_arcs()) heights.push_back(half.height);
  std::sort(heights.begin(), heights.end());
  try {
    return FibonacciSet(h.rank(), std::move(heights));
  } catch (const std::invalid_argument& e) {
    throw StructureError(std::string("half-arc heights: ") + e.what());
  }
}

FibonacciSet prop_lab(const ArcDiagram& d) { return prop_lab(bra(d)); }

ArcDiagram glue(const HalfArcDiagram& left, const HalfArcDiagram& right) {
  if (left.rank() != right.rank()) throw std::invalid_argument("glue: rank mismatch");
  if (prop_lab(left) != prop_lab(right))
    throw std::invalid_argument("glue: propagating labels differ: " + prop_lab(left).to_string() + " vs " +
                                prop_lab(right).to_string());
  std::vector<Arc> arcs = left.full_arcs();
  for (const Arc& arc : right.full_arcs()) arcs.push_back({-arc.a, -arc.b, arc.height});
  auto by_height = [](const HalfArc& x, const HalfArc& y) { return x.height < y.height; };
  auto lh = left.half_arcs(), rh = right.half_arcs();
  std::sort(lh.begin(), lh.end(), by_height);
  std::sort(rh.begin(), rh.end(), by_height);
  for (std::size_t j = 0; j < lh.size(); ++j) arcs.push_back({lh[j].node, -rh[j].node, lh[j].height});
  return ArcDiagram(left.rank(), arcs);
}

HalfArcDiagram restrict(const HalfArcDiagram& h, int r) {
  if (r < 0 || r > h.rank()) throw std::out_of_range("restriction outside [0, rank]");
  std::vector<Arc> full;
  std::vector<HalfArc> half;
  for (int a = 1; a <= r; ++a) {
    const int b = h.partner(a);
    if (b == 0 || b > r)
      half.push_back({a, h.height(a)});
    else if (b > a)
      full.push_back({a, b, h.height(a)});
  }
  return HalfArcDiagram(r, full, half);
}

Chain chain_of(const HalfArcDiagram& h) {
  std::vector<FibonacciSet> sets;
  for (int r = 0; r <= h.rank(); ++r) sets.push_back(prop_lab(restrict(h, r)));
  return Chain(std::move(sets));
}

HalfArcDiagram chain_inverse(const Chain& c) {
  const int n = c.rank();
  std::vector<int> open;  // nodes, heights increasing
  std::vector<int> heights(n + 1, 0);
  std::vector<Arc> full;
  for (int i = 1; i <= n; ++i) {
    const FibonacciSet& before = c[i - 1];
    const FibonacciSet& after = c[i];
    if (after.size() > before.size()) {
      heights[i] = after.max();
      open.push_back(i);
    } else {
      if (open.empty() || heights[open.back()] != before.max())
        throw InvariantViolation("chain_inverse: closing step does not remove the top label");
      const int j = open.back();
      open.pop_back();
      full.push_back({j, i, heights[j]});
    }
  }
  std::vector<HalfArc> half;
  for (int j : open) half.push_back({j, heights[j]});
  return HalfArcDiagram(n, full, half);
}

Composition compose(const ArcDiagram& c, const ArcDiagram& d) {
  const int n = c.rank();
  if (d.rank() != n) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> partner(2 * n, -1), height(2 * n, 0);
  std::vector<char> middle_seen(n + 1, 0);

  // Walk from an outer endpoint through the glued middle column.
  // Position p < n is a left endpoint of c; p >= n a right endpoint of d.
  for (int start = 0; start < 2 * n; ++start) {
    if (partner[start] != -1) continue;
    bool in_c = start < n;
    int cur = start;
    int h = 1 << 30;
    int end;
    while (true) {
      const ArcDiagram& side = in_c ? c : d;
      const int q = side.partner_at(cur);
      h = std::min(h, side.height_at(cur));
      if (in_c) {
        if (q < n) { end = q; break; }
        const int m = 2 * n - q;
        middle_seen[m] = 1;
        cur = m - 1;
        in_c = false;
      } else {
        if (q >= n) { end = q; break; }
        const int m = q + 1;
        middle_seen[m] = 1;
        cur = 2 * n - m;
        in_c = true;
      }
    }
    partner[start] = end;
    partner[end] = start;
    height[start] = height[end] = h;
  }

  std::map<int, int> loop_counts;
  for (int m = 1; m <= n; ++m) {
    if (middle_seen[m]) continue;
    int h = 1 << 30;
    int cur = m;
    do {
      middle_seen[cur] = 1;
      const int dq = d.partner_at(cur - 1);
      h = std::min(h, d.height_at(cur - 1));
      if (dq >= n) throw InvariantViolation("compose: loop walk escaped to the right boundary");
      const int next = dq + 1;
      middle_seen[next] = 1;
      const int cq = c.partner_at(2 * n - next);
      h = std::min(h, c.height_at(2 * n - next));
      if (cq < n) throw InvariantViolation("compose: loop walk escaped to the left boundary");
      cur = 2 * n - cq;
    } while (cur != m);
    ++loop_counts[h];
  }

  Composition out{ArcDiagram::from_positions(n, std::move(partner), std::move(height)), {}};
  for (auto [h, count] : loop_counts) out.loops.push_back({h, count});
  return out;
}

DiagramProduct product_y1(const ArcDiagram& c, const ArcDiagram& d) {
  Composition comp = compose(c, d);
  Monomial coefficient;
  for (const LoopRecord& loop : comp.loops) coefficient *= Monomial::x(loop.height, loop.count);
  return {std::move(coefficient), std::move(comp.diagram)};
}

DiagramProduct evaluate_word(std::span<const int> word, int rank) {
  DiagramProduct acc{Monomial{}, identity(rank)};
  for (int letter : word) {
    DiagramProduct step = product_y1(acc.diagram, generator(letter, rank));
    acc.coefficient *= step.coefficient;
    acc.diagram = std::move(step.diagram);
  }
  return acc;
}

std::optional<ArcDiagram> strip_iota(const ArcDiagram& d) {
  const int n = d.rank();
  if (n == 0 || d.partner(n) != -n || d.height(n) != n) return std::nullopt;
  std::vector<Arc> arcs;
  for (const Arc& arc : d.arcs())
    if (arc.a != n) arcs.push_back(arc);
  return ArcDiagram(n - 1, arcs);
}

Peeling peel(const ArcDiagram& d) {
  const int n = d.rank();
  if (n == 0 || strip_iota(d)) throw std::invalid_argument("peel: diagram contains the arc (N,-N) of height N");
  int index = 0;
  for (int i = n - 1; i >= 1; --i) {
    if (d.partner(-i) == -(i + 1) && d.height(-i) == i) {
      index = i;
      break;
    }
  }
  if (index == 0) throw InvariantViolation("peel: no arc (-i,-(i+1)) of height i in " + d.to_string());

  auto relabel = [&](int e) {
    if (e > 0) return e <= n - 1 ? e : -(n - 1);
    const int j = -e;
    return j < index ? e : -(j - 2);
  };
  std::vector<Arc> arcs;
  for (const Arc& arc : d.arcs()) {
    if (arc.a == -index || arc.b == -index) continue;
    arcs.push_back({relabel(arc.a), relabel(arc.b), arc.height});
  }
  Peeling out{ArcDiagram(n - 1, arcs), index};

  std::vector<int> tail;
  for (int k = n - 1; k >= index; --k) tail.push_back(k);
  DiagramProduct rebuilt = evaluate_word(tail, n);
  DiagramProduct whole = product_y1(iota(out.flat), rebuilt.diagram);
  if (!validate(out.flat) || whole.diagram != d || !whole.coefficient.is_one() || !rebuilt.coefficient.is_one())
    throw InvariantViolation("peel: reconstruction failed for " + d.to_string());
  return out;
}

std::vector<int> factor_word(const ArcDiagram& d) {
  // Letters are produced right to left: each peel contributes a suffix.
  std::vector<std::vector<int>> suffixes;
  ArcDiagram cur = d;
  while (cur.rank() > 0) {
    if (auto inner = strip_iota(cur)) {
      cur = std::move(*inner);
      continue;
    }
    Peeling p = peel(cur);
    std::vector<int> suffix;
    for (int k = cur.rank() - 1; k >= p.index; --k) suffix.push_back(k);
    suffixes.push_back(std::move(suffix));
    cur = std::move(p.flat);
  }
  std::vector<int> word;
  for (auto it = suffixes.rbegin(); it != suffixes.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
  return word;
}

namespace {

struct MatchingArc {
  int open, close, parent, bound;
};

// Labels arcs in preorder; parents come before children.
void label_arcs(int rank, const std::vector<MatchingArc>& arcs, std::size_t k, std::vector<int>& heights,
                std::vector<int>& partner, std::vector<int>& height,
                const std::function<void(const ArcDiagram&)>& visit) {
  if (k == arcs.size()) {
    for (std::size_t j = 0; j < arcs.size(); ++j) height[arcs[j].open] = height[arcs[j].close] = heights[j];
    visit(ArcDiagram::from_positions(rank, partner, height));
    return;
  }
  const MatchingArc& arc = arcs[k];
  const int floor = arc.parent < 0 ? 0 : heights[arc.parent];
  for (int h = arc.bound; h > floor; h -= 2) {
    heights[k] = h;
    label_arcs(rank, arcs, k + 1, heights, partner, height, visit);
  }
}

void dyck_words(int rank, std::vector<char>& word, int opens, int closes, std::size_t& index, std::size_t shard,
                std::size_t shard_count, const std::function<void(const std::vector<char>&)>& emit) {
  if (opens == rank && closes == rank) {
    if (index++ % shard_count == shard) emit(word);
    return;
  }
  if (opens < rank) {
    word.push_back(1);
    dyck_words(rank, word, opens + 1, closes, index, shard, shard_count, emit);
    word.pop_back();
  }
  if (closes < opens) {
    word.push_back(0);
    dyck_words(rank, word, opens, closes + 1, index, shard, shard_count, emit);
    word.pop_back();
  }
}

}  // namespace

void for_each_diagram(int rank, const std::function<void(const ArcDiagram&)>& visit, std::size_t shard,
                      std::size_t shard_count) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  if (shard_count == 0 || shard >= shard_count) throw std::invalid_argument("bad shard");
  std::vector<char> word;
  std::size_t index = 0;
  dyck_words(rank, word, 0, 0, index, shard, shard_count, [&](const std::vector<char>& w) {
    std::vector<int> partner(2 * rank), height(2 * rank, 0);
    std::vector<MatchingArc> arcs;
    std::vector<int> stack;  // arc indices
    for (int p = 0; p < 2 * rank; ++p) {
      if (w[p]) {
        arcs.push_back({p, -1, stack.empty() ? -1 : stack.back(), 0});
        stack.push_back(static_cast<int>(arcs.size()) - 1);
      } else {
        MatchingArc& arc = arcs[stack.back()];
        stack.pop_back();
        arc.close = p;
        partner[arc.open] = p;
        partner[p] = arc.open;
        arc.bound = abs_min(endpoint_at(arc.open, rank), endpoint_at(p, rank));
      }
    }
    std::vector<int> heights(arcs.size(), 0);
    label_arcs(rank, arcs, 0, heights, partner, height, visit);
  });
}

std::vector<ArcDiagram> enumerate_diagrams(int rank) {
  std::vector<ArcDiagram> out;
  for_each_diagram(rank, [&](const ArcDiagram& d) { out.push_back(d); });
  return out;
}

std::size_t matching_count(int rank) {
  std::size_t catalan = 1;
  for (int k = 0; k < rank; ++k) catalan = catalan * 2 * (2 * k + 1) / (k + 2);
  return catalan;
}

namespace {

void grow_half(int rank, int node, std::vector<int>& open, std::vector<int>& partner, std::vector<int>& heights,
               const std::optional<FibonacciSet>& label, std::vector<HalfArcDiagram>& out) {
  if (node > rank) {
    std::vector<Arc> full;
    std::vector<HalfArc> half;
    for (int a = 1; a <= rank; ++a) {
      if (partner[a] == 0)
        half.push_back({a, heights[a]});
      else if (partner[a] > a)
        full.push_back({a, partner[a], heights[a]});
    }
    HalfArcDiagram h(rank, full, half);
    if (!label || prop_lab(h) == *label) out.push_back(std::move(h));
    return;
  }
  if (!open.empty()) {
    const int j = open.back();
    open.pop_back();
    partner[j] = node;
    partner[node] = j;
    heights[node] = heights[j];
    grow_half(rank, node + 1, open, partner, heights, label, out);
    partner[j] = partner[node] = 0;
    open.push_back(j);
  }
  const int floor = open.empty() ? 0 : heights[open.back()];
  for (int t = node; t > floor; t -= 2) {
    heights[node] = t;
    open.push_back(node);
    grow_half(rank, node + 1, open, partner, heights, label, out);
    open.pop_back();
  }
}

}  // namespace

std::vector<HalfArcDiagram> enumerate_half(int rank, const std::optional<FibonacciSet>& label) {
  if (rank < 0) throw std::invalid_argument("negative rank");
  std::vector<HalfArcDiagram> out;
  if (label && label->rank() != rank) return out;
  std::vector<int> open, partner(rank + 1, 0), heights(rank + 1, 0);
  grow_half(rank, 1, open, partner, heights, label, out);
  return out;
}

}  // namespace okada
