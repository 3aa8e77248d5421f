#include "venn/doubling.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "venn/venn_builder.hpp"

namespace venn {

namespace {

std::optional<ColorfulFace> colorful(const PlaneDualGraph& g, std::size_t f) {
  const int n = g.dimension();
  const auto& walk = g.faces()[f].walk;
  if (walk.size() != 2 * static_cast<std::size_t>(n)) return std::nullopt;
  const std::unordered_set<Mask> on_face(walk.begin(), walk.end());
  std::optional<Mask> best;
  for (Mask v : walk) {
    if (on_face.contains(~v & full_mask(n)) && (!best || v < *best)) best = v;
  }
  if (!best) return std::nullopt;
  return ColorfulFace{f, *best, ~*best & full_mask(n)};
}

// Neighbour the face walk arrives from at its first visit of v.
Mask incoming(const Face& face, Mask v) {
  const auto& w = face.walk;
  const auto it = std::find(w.begin(), w.end(), v);
  const std::size_t i = static_cast<std::size_t>(it - w.begin());
  return w[(i + w.size() - 1) % w.size()];
}

}  // namespace

std::optional<ColorfulFace> find_colorful_face(const PlaneDualGraph& g) {
  if (auto outer = g.outer_face()) {
    if (auto c = colorful(g, *outer)) return c;
  }
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    if (auto c = colorful(g, f)) return c;
  }
  return std::nullopt;
}

PlaneDualGraph double_diagram(const PlaneDualGraph& g) {
  const int n = g.dimension();
  if (n + 1 > kMaxDimension - 1) throw std::length_error("double_diagram: dimension too large");
  const auto cf = find_colorful_face(g);
  if (!cf) throw NoColorfulFace("double_diagram: no colorful face");

  const Mask lift = direction_bit(n + 1);
  const Face& face = g.faces()[cf->face];
  const Mask x = cf->x;
  const Mask xb = cf->x_bar;

  PlaneDualGraph out(n + 1);
  for (Mask v : g.vertices()) out.add_vertex(v);
  for (Mask v : g.vertices()) out.add_vertex(v | lift);
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Mask v = g.vertices()[i];
    const auto& rot = g.rotation_at(i);
    out.set_rotation(v, rot);
    std::vector<Mask> mirrored(rot.rbegin(), rot.rend());
    for (Mask& w : mirrored) w |= lift;
    out.set_rotation(v | lift, std::move(mirrored));
  }

  // In the mirror copy the face is walked backwards, so the corner at v' is
  // entered from the image of v's outgoing neighbour.
  for (Mask v : {x, xb}) {
    const Mask in = incoming(face, v);
    const auto& rot = g.rotation(v);
    const auto slot = std::find(rot.begin(), rot.end(), in) - rot.begin();
    const Mask out_nb = rot[static_cast<std::size_t>(slot + 1) % rot.size()];
    out.insert_after(v, in, v | lift);
    out.insert_after(v | lift, out_nb | lift, v);
  }

  out.set_outer_dart({x | lift, x});
  out.retrace();
  if (out.face_count() != 2 * g.face_count()) {
    throw std::logic_error("double_diagram: face count " + std::to_string(out.face_count()) +
                           " is not twice " + std::to_string(g.face_count()));
  }
  if (const auto& c = g.construction()) out.set_construction({c->k, c->m + 1});
  return out;
}

int base_exponent(int n_total) {
  if (n_total < 8) throw std::invalid_argument("n >= 8 required");
  int k = 3;
  while ((1 << (k + 1)) <= n_total) ++k;
  return k;
}

PlaneDualGraph build_venn_from(int k, int m, int cap) {
  if (m < 0) throw std::invalid_argument("build_venn_from: m must be nonnegative");
  if (cap > kMaxMaterializationCap) {
    throw std::invalid_argument("materialization cap above " + std::to_string(kMaxMaterializationCap));
  }
  if (k < 3 || k > 4 || (1 << k) + m > cap) {
    throw std::length_error("n = " + std::to_string((1L << std::min(k, 62)) + m) +
                            " exceeds the materialization cap " + std::to_string(cap));
  }
  PlaneDualGraph g = build_venn_dual(k, cap).graph;
  for (int i = 0; i < m; ++i) g = double_diagram(g);
  return g;
}

PlaneDualGraph build_venn(int n_total, int cap) {
  const int k = base_exponent(n_total);
  return build_venn_from(k, n_total - (1 << k), cap);
}

}  // namespace venn
