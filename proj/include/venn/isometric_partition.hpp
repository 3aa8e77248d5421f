#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "venn/hypercube.hpp"

namespace venn {

/// Default upper bound on n for anything that materializes all 2^n vertices.
inline constexpr int kDefaultMaterializationCap = 16;
inline constexpr int kMaxMaterializationCap = 20;

/// An ordered list of 2-element subsets of [2^k].
struct Basis {
  int k = 1;
  std::vector<VertexSet> elements;

  int ground() const { return 1 << k; }
  std::size_t size() const { return elements.size(); }
};

/// Ramras' basis: B_1 = {}, B_k = B_{k-1} + {{i, 2^{k-1} + i} : 1 <= i < 2^{k-1}}.
Basis basis_B(int k);
/// {{1,3}, {3,5}, ..., {2^k - 3, 2^k - 1}}.
Basis basis_O(int k);
/// O_k followed by 2 * C_{k-1}.
Basis basis_C(int k);

/// Minimum and maximum of a 2-set.
std::pair<int, int> endpoints(const VertexSet& pair);

/// True iff all minima are pairwise distinct and all maxima are pairwise distinct.
bool check_pairwise_distinct_endpoints(const Basis& basis);
bool check_pairwise_distinct_endpoints(std::span<const VertexSet> pairs);

/// <b1> == <b2>, decided by elimination without materializing either span.
bool spans_equal(const Basis& b1, const Basis& b2);
bool spans_equal(std::span<const VertexSet> b1, std::span<const VertexSet> b2);

/// P(x) = (x, x+{1}, x+{1,2}, ..., x+{1..n-1}) inside Q_{n-1}; x must avoid n.
CubePath ramras_path(const VertexSet& x, int n);

/// C(x) = (P(x), complement(P(x)) + {n}), flips (1..n, 1..n); x must avoid n.
CubeCycle ramras_cycle(const VertexSet& x);

/// Vertex at position j (0 <= j < 2n) of C(x), as a mask over [n].
constexpr Mask cycle_vertex(Mask x, int n, int j) {
  return j <= n ? x ^ prefix_mask(j) : x ^ full_mask(n) ^ prefix_mask(j - n);
}

/// Position of v on C(x), or -1 when v is not on the cycle.
int cycle_position(Mask x, int n, Mask v);

/// The paths P(x) for all x in <C_k>, in span order.
std::vector<CubePath> partition_paths(int k, int cap = kDefaultMaterializationCap);
/// The cycles C(x) for all x in <C_k>, in span order.
std::vector<CubeCycle> partition_cycles(int k, int cap = kDefaultMaterializationCap);

struct CoverCheck {
  bool ok = false;
  std::size_t vertices_covered = 0;
  std::size_t expected = 0;
  /// A vertex hit twice or never, when the check fails.
  std::optional<Mask> witness;
  std::string message;
};

/// Exhaustive check that the paths are vertex-disjoint and cover Q_{n-1}.
CoverCheck check_path_partition(int k, int cap = kDefaultMaterializationCap);
/// Exhaustive check that the cycles are vertex-disjoint and cover Q_n.
CoverCheck check_cycle_partition(int k, int cap = kDefaultMaterializationCap);

enum class CrossKind { E, EDown, EUp, F };

std::string to_string(CrossKind kind);

struct CubeEdge {
  Mask u = 0;
  Mask v = 0;
  Direction direction = 0;

  friend bool operator==(const CubeEdge&, const CubeEdge&) = default;
};

/// Edges between C(x) and C(y), y = x + {a, b}. For E, EDown and EUp every edge
/// has u on C(x) and v on C(y). For F the edges form the 4-cycle
/// (w_{a-1}, w_a, u_{a-1}, u_a) in that order.
struct CrossEdgeSet {
  CrossKind kind = CrossKind::E;
  int n = 0;
  Mask x = 0;
  int a = 0;
  int b = 0;
  std::vector<CubeEdge> edges;
};

/// Builds E(x,{a,b}), E_down(x,a), E_up(x,a) or F(x,{a,b}). EDown and EUp
/// require b = a + 2. Throws std::invalid_argument otherwise.
CrossEdgeSet cross_edge_set(Mask x, int n, int a, int b, CrossKind kind);

}  // namespace venn
