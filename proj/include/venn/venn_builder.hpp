#pragma once

#include <optional>
#include <vector>

#include "venn/gray_runs.hpp"
#include "venn/isometric_partition.hpp"
#include "venn/plane_graph.hpp"

namespace venn {

/// What was added between rings i and i+1 (0-based), and what was removed from ring i.
struct StepAction {
  Direction s = 0;
  CrossKind kind = CrossKind::E;
  int a = 0;
  int b = 0;
  std::vector<CubeEdge> added;
  /// Ring edge of ring i deleted because s_{i-1} and s_i share a run.
  std::optional<CubeEdge> removed;
};

/// Record of one concentric build on Q_n, n = 2^k.
struct BuildTrace {
  int k = 0;
  int n = 0;
  int d = 0;
  int rho = 0;
  /// c_1, ..., c_d: O_k by increasing minimum, then 2 C_{k-1}.
  std::vector<VertexSet> coefficients;
  /// Flip sequence of the Hamiltonian path of Q_d that orders the rings.
  std::vector<Direction> ring_order;
  RunPartition runs{};
  /// x_1, ..., x_{2^d}: the ring base vertices, outermost first.
  std::vector<Mask> ring_base;
  /// One entry per consecutive ring pair.
  std::vector<StepAction> steps;
  std::size_t intermediate_faces = 0;
  /// 2 * 2^n / n - nu - 2 lambda - 2.
  long expected_faces = 0;
};

struct VennBuild {
  PlaneDualGraph graph;
  BuildTrace trace;
};

/// Intermediate stops after the cross edges are added, before any ring edge is removed.
enum class BuildStage { Intermediate, Final };

/// Concentric build of the dual of an n-Venn diagram, n = 2^k, k >= 3.
///
/// The rings C(x_1), ..., C(x_{2^d}) are nested outermost first. Between rings
/// i and i+1 the builder adds E_down/E_up (s_i <= rho, by run orientation) or E
/// (s_i > rho), then deletes the first a-edge of every ring whose two
/// neighbouring steps lie in the same rho-run. Throws std::length_error when
/// n exceeds cap and std::runtime_error when a traced face is not in the
/// face catalog or a merge is not between two 6-faces.
VennBuild build_venn_dual(int k, int cap = kDefaultMaterializationCap, BuildStage stage = BuildStage::Final);

/// The partition cycles of Q_n, n = 2^k, nested in Gray-code order with no
/// cross edges. Traced and laid out; used to preview the ring arrangement.
PlaneDualGraph ring_preview(int k, int cap = kDefaultMaterializationCap);

}  // namespace venn
