#pragma once

#include <optional>

#include "venn/plane_graph.hpp"

namespace venn {

struct ColorfulFace {
  std::size_t face = 0;
  /// Smallest vertex on the face whose antipode is also on the face.
  Mask x = 0;
  Mask x_bar = 0;
};

class NoColorfulFace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A traced face of length 2n holding an antipodal pair, the outer face first.
std::optional<ColorfulFace> find_colorful_face(const PlaneDualGraph& g);

/// Two copies of g on Q_{n+1}: g itself and g + {n+1} with every rotation
/// reversed, joined by {x, x+{n+1}} and {x̄, x̄+{n+1}} inside the colorful face.
/// The returned graph is traced, its outer face contains the dart
/// x+{n+1} -> x and it has exactly twice as many faces.
PlaneDualGraph double_diagram(const PlaneDualGraph& g);

/// build_venn_dual(k) doubled m times.
PlaneDualGraph build_venn_from(int k, int m, int cap = kDefaultMaterializationCap);

/// Dual graph of an n_total-Venn diagram, n_total >= 8: the largest 2^k <= n_total
/// concentric build followed by n_total - 2^k doublings.
PlaneDualGraph build_venn(int n_total, int cap = kDefaultMaterializationCap);

/// Largest k >= 3 with 2^k <= n_total.
int base_exponent(int n_total);

}  // namespace venn
