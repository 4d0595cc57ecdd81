#pragma once

// Height-labeled non-crossing arc diagrams on 2N endpoints, their half
// diagrams, composition, and the factorization into generators.
//
// Endpoints are nonzero integers in [-N, N]; negative values are the right
// boundary. They are totally ordered 1 < 2 < ... < N < -N < ... < -1, and an
// endpoint's index in that order is its position.

#include "okada/fibonacci.hpp"
#include "okada/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace okada {

int endpoint_position(int endpoint, int rank);
int endpoint_at(int position, int rank);

/// An arc between endpoints a and b (a before b in the endpoint order).
struct Arc {
  int a = 0;
  int b = 0;
  int height = 0;

  bool propagating() const noexcept { return (a > 0) != (b > 0); }
  auto operator<=>(const Arc&) const = default;
};

/// What makes a well-formed diagram fail the labeling rules; the first
/// violation found in a left-to-right scan is reported.
enum class Violation {
  none,
  crossing,
  height_range,   // height < 1 or above the smaller endpoint
  height_parity,  // height and smaller endpoint differ in parity
  nesting,        // a nested arc is not strictly higher than its parent
};

std::string_view to_string(Violation v);

class ArcDiagram {
 public:
  ArcDiagram() = default;  // the empty diagram of rank 0

  /// Throws StructureError unless the arcs form a perfect matching of the
  /// 2N endpoints. Labels are not checked; see validate().
  ArcDiagram(int rank, std::span<const Arc> arcs);
  ArcDiagram(int rank, std::initializer_list<Arc> arcs)
      : ArcDiagram(rank, std::span<const Arc>(arcs.begin(), arcs.size())) {}

  /// Build from position-indexed partner and height arrays (length 2N).
  static ArcDiagram from_positions(int rank, std::vector<int> partner, std::vector<int> height);

  int rank() const noexcept { return rank_; }
  int partner(int endpoint) const;
  int height(int endpoint) const;
  int partner_at(int position) const { return partner_[position]; }
  int height_at(int position) const { return height_[position]; }

  /// Arcs sorted by the position of their first endpoint.
  std::vector<Arc> arcs() const;
  int propagating_count() const;

  auto operator<=>(const ArcDiagram&) const = default;
  std::size_t hash() const noexcept;

  /// "{(1,-3)h1,(2,3)h2,(-1,-2)h1}"
  std::string to_string() const;

 private:
  int rank_ = 0;
  std::vector<int> partner_;  // position -> position
  std::vector<int> height_;   // position -> label of its arc
};

Violation check(const ArcDiagram& d);
bool validate(const ArcDiagram& d);

ArcDiagram identity(int rank);
/// G_i; throws std::out_of_range unless 1 <= i < rank.
ArcDiagram generator(int i, int rank);
/// Adds the arc (N+1, -(N+1)) of height N+1.
ArcDiagram iota(const ArcDiagram& d);
/// Horizontal reflection: every endpoint changes sign.
ArcDiagram mirror(const ArcDiagram& d);

/// A half diagram on nodes 1..N: full arcs between nodes, and half arcs
/// running from a node to the right boundary.
struct HalfArc {
  int node = 0;
  int height = 0;
  auto operator<=>(const HalfArc&) const = default;
};

class HalfArcDiagram {
 public:
  HalfArcDiagram() = default;
  /// Throws StructureError unless the arcs partition [rank].
  HalfArcDiagram(int rank, std::span<const Arc> full_arcs, std::span<const HalfArc> half_arcs);

  int rank() const noexcept { return rank_; }
  /// Other end of the full arc at `node`, or 0 for a half arc.
  int partner(int node) const { return partner_.at(node - 1); }
  int height(int node) const { return height_.at(node - 1); }
  bool is_half(int node) const { return partner(node) == 0; }

  std::vector<Arc> full_arcs() const;
  /// Sorted by node; heights then increase.
  std::vector<HalfArc> half_arcs() const;

  auto operator<=>(const HalfArcDiagram&) const = default;
  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  int rank_ = 0;
  std::vector<int> partner_;
  std::vector<int> height_;
};

Violation check_half(const HalfArcDiagram& h);
bool validate_half(const HalfArcDiagram& h);

HalfArcDiagram bra(const ArcDiagram& d);
HalfArcDiagram ket(const ArcDiagram& d);
/// Heights of the half arcs; throws StructureError if they do not form a Fibonacci set.
FibonacciSet prop_lab(const HalfArcDiagram& h);
FibonacciSet prop_lab(const ArcDiagram& d);

/// The diagram D with bra(D) = left and ket(D) = right; throws
/// std::invalid_argument when the propagating labels differ.
ArcDiagram glue(const HalfArcDiagram& left, const HalfArcDiagram& right);

/// Restriction to the nodes [r]: arcs leaving [r] become half arcs.
HalfArcDiagram restrict(const HalfArcDiagram& h, int r);

Chain chain_of(const HalfArcDiagram& h);
HalfArcDiagram chain_inverse(const Chain& c);

struct LoopRecord {
  int height = 0;
  int count = 0;
  auto operator<=>(const LoopRecord&) const = default;
};

struct Composition {
  ArcDiagram diagram;
  std::vector<LoopRecord> loops;  // sorted by height
};

/// Stack C on the left of D, erase loops, label merged arcs by the minimum
/// fragment height. Throws std::invalid_argument on a rank mismatch.
Composition compose(const ArcDiagram& c, const ArcDiagram& d);

struct DiagramProduct {
  Monomial coefficient;  // prod x_k^(loops at height k)
  ArcDiagram diagram;
};

DiagramProduct product_y1(const ArcDiagram& c, const ArcDiagram& d);
/// Product of the generators G_{w_1} ... G_{w_k}; the empty word gives id_N.
DiagramProduct evaluate_word(std::span<const int> word, int rank);

struct Peeling {
  ArcDiagram flat;  // rank N-1
  int index = 0;    // I with D = iota(flat) G_{N-1} ... G_I
};

/// Throws std::invalid_argument if D contains the arc (N,-N) of height N.
Peeling peel(const ArcDiagram& d);
/// D' with D = iota(D'), if D contains the arc (N,-N) of height N.
std::optional<ArcDiagram> strip_iota(const ArcDiagram& d);
/// Generator word obtained by repeated peeling; evaluates back to D.
std::vector<int> factor_word(const ArcDiagram& d);

/// Every valid rank-N diagram, streamed in a fixed order (by underlying
/// matching, then by labels). With shard_count > 1 only matchings whose
/// index is congruent to `shard` are visited.
void for_each_diagram(int rank, const std::function<void(const ArcDiagram&)>& visit,
                      std::size_t shard = 0, std::size_t shard_count = 1);
std::vector<ArcDiagram> enumerate_diagrams(int rank);
/// Number of non-crossing perfect matchings streamed by for_each_diagram.
std::size_t matching_count(int rank);

std::vector<HalfArcDiagram> enumerate_half(int rank,
                                           const std::optional<FibonacciSet>& label = std::nullopt);

}  // namespace okada

template <>
struct std::hash<okada::ArcDiagram> {
  std::size_t operator()(const okada::ArcDiagram& d) const noexcept { return d.hash(); }
};

template <>
struct std::hash<okada::HalfArcDiagram> {
  std::size_t operator()(const okada::HalfArcDiagram& h) const noexcept { return h.hash(); }
};
