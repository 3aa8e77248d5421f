#include "venn/venn_builder.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "venn/face_catalog.hpp"

namespace venn {

namespace {

std::uint64_t dart_key(Mask from, Mask to) { return (std::uint64_t{from} << 32) | to; }

// Direction set of a face as a bitmask.
Mask direction_set(const Face& f) {
  Mask out = 0;
  for (Direction d : f.flips) out |= direction_bit(d);
  return out;
}

class ConcentricLayout {
 public:
  ConcentricLayout(int n, const std::vector<Mask>& bases)
      : n_(n), rings_(bases.size()), ring_of_(std::size_t{1} << n, -1),
        pos_of_(std::size_t{1} << n, -1), ring_edge_(bases.size() * 2 * n, true),
        inward_(std::size_t{1} << n), outward_(std::size_t{1} << n), bases_(bases) {
    for (std::size_t r = 0; r < rings_; ++r) {
      for (int j = 0; j < 2 * n; ++j) {
        const Mask v = vertex(r, j);
        if (ring_of_[v] != -1) {
          throw std::logic_error("ring cycles overlap at vertex " + std::to_string(v));
        }
        ring_of_[v] = static_cast<int>(r);
        pos_of_[v] = j;
      }
    }
  }

  Mask vertex(std::size_t ring, int pos) const {
    return cycle_vertex(bases_[ring], n_, ((pos % (2 * n_)) + 2 * n_) % (2 * n_));
  }
  int ring_of(Mask v) const { return ring_of_[v]; }
  int pos_of(Mask v) const { return pos_of_[v]; }

  void add_cross(Mask outer, Mask inner) {
    if (ring_of_[inner] != ring_of_[outer] + 1) {
      throw std::logic_error("cross edge does not join consecutive rings");
    }
    inward_[outer].push_back(inner);
    outward_[inner].push_back(outer);
  }

  // Ring edge between positions j and j+1 of the ring.
  CubeEdge drop_ring_edge(std::size_t ring, int j) {
    ring_edge_[ring * 2 * n_ + static_cast<std::size_t>(j)] = false;
    const Mask u = vertex(ring, j);
    const Mask v = vertex(ring, j + 1);
    return {u, v, edge_direction(u, v)};
  }

  // Counter-clockwise around the vertex: next on ring, inward, previous, outward.
  std::vector<Mask> rotation(Mask v) const {
    const std::size_t ring = static_cast<std::size_t>(ring_of_[v]);
    const int p = pos_of_[v];
    const int len = 2 * n_;
    auto offset = [&](Mask w) { return ((pos_of_[w] - p + len + n_) % len) - n_; };
    std::vector<Mask> in = inward_[v];
    std::vector<Mask> out = outward_[v];
    std::sort(in.begin(), in.end(), [&](Mask x, Mask y) { return offset(x) > offset(y); });
    std::sort(out.begin(), out.end(), [&](Mask x, Mask y) { return offset(x) < offset(y); });

    std::vector<Mask> rot;
    if (ring_edge_[ring * len + static_cast<std::size_t>(p)]) rot.push_back(vertex(ring, p + 1));
    rot.insert(rot.end(), in.begin(), in.end());
    if (ring_edge_[ring * len + static_cast<std::size_t>((p + len - 1) % len)]) {
      rot.push_back(vertex(ring, p - 1));
    }
    rot.insert(rot.end(), out.begin(), out.end());
    return rot;
  }

  PlaneDualGraph to_graph() const {
    PlaneDualGraph g(n_);
    const Mask count = static_cast<Mask>(std::size_t{1} << n_);
    for (Mask v = 0; v < count; ++v) g.add_vertex(v);
    std::vector<LayoutHint> hints;
    hints.reserve(count);
    for (Mask v = 0; v < count; ++v) {
      g.set_rotation(v, rotation(v));
      hints.push_back({ring_of_[v], pos_of_[v]});
    }
    g.set_layout(std::move(hints));
    g.set_outer_dart({vertex(0, 0), vertex(0, 1)});
    return g;
  }

 private:
  int n_;
  std::size_t rings_;
  std::vector<int> ring_of_;
  std::vector<int> pos_of_;
  std::vector<bool> ring_edge_;
  std::vector<std::vector<Mask>> inward_;
  std::vector<std::vector<Mask>> outward_;
  std::vector<Mask> bases_;
};

// The two faces glued by a removal must be 6-faces whose direction sets share
// only the removed direction, the top of one and the bottom of the other.
void check_merge(const std::vector<Face>& faces,
                 const std::unordered_map<std::uint64_t, std::size_t>& face_of, const CubeEdge& e) {
  const auto f1 = face_of.at(dart_key(e.u, e.v));
  const auto f2 = face_of.at(dart_key(e.v, e.u));
  const auto diag = "removed " + std::to_string(e.direction) + "-edge " + std::to_string(e.u) +
                    "-" + std::to_string(e.v);
  if (f1 == f2 || faces[f1].length() != 6 || faces[f2].length() != 6) {
    throw std::runtime_error(diag + " does not separate two 6-faces");
  }
  const Mask s1 = direction_set(faces[f1]);
  const Mask s2 = direction_set(faces[f2]);
  const Mask shared = direction_bit(e.direction);
  const Mask low = std::min(s1, s2);
  const Mask high = std::max(s1, s2);
  const bool top_of_low = (std::bit_floor(low) == shared);
  const bool bottom_of_high = ((high & (~high + 1)) == shared);
  if ((s1 & s2) != shared || !top_of_low || !bottom_of_high) {
    throw std::runtime_error(diag + ": glued 6-faces overlap in more than the removed direction");
  }
}

}  // namespace

VennBuild build_venn_dual(int k, int cap, BuildStage stage) {
  if (k < 3) throw std::invalid_argument("build_venn_dual: k must be at least 3");
  if (cap > kMaxMaterializationCap) {
    throw std::invalid_argument("materialization cap above " + std::to_string(kMaxMaterializationCap));
  }
  if (k > 4 || (1 << k) > cap) {
    throw std::length_error("n = " + std::to_string(std::size_t{1} << k) +
                            " exceeds the materialization cap " + std::to_string(cap));
  }

  BuildTrace trace;
  trace.k = k;
  trace.n = 1 << k;
  trace.d = trace.n - k - 1;
  trace.rho = trace.n / 2 - 1;
  const int n = trace.n;
  const int rho = trace.rho;

  trace.coefficients = basis_C(k).elements;
  const CubePath order = k == 3 ? longrun_path(2) : product_path(k - 1, (1 << (k - 1)) - k - 1);
  if (order.dimension() != trace.d) throw std::logic_error("ring order path has the wrong dimension");
  trace.ring_order = order.flips.entries();
  trace.runs = run_partition(order.flips, rho);
  const auto& seq = trace.ring_order;

  trace.ring_base.push_back(0);
  for (Direction s : seq) {
    trace.ring_base.push_back(trace.ring_base.back() ^ trace.coefficients[static_cast<std::size_t>(s - 1)].bits());
  }
  ConcentricLayout layout(n, trace.ring_base);

  for (std::size_t i = 0; i < seq.size(); ++i) {
    StepAction act;
    act.s = seq[i];
    std::tie(act.a, act.b) = endpoints(trace.coefficients[static_cast<std::size_t>(act.s - 1)]);
    if (act.s <= rho) {
      const auto& run = trace.runs.runs[static_cast<std::size_t>(trace.runs.run_of[i])];
      act.kind = run.orientation == RunOrientation::Increasing ? CrossKind::EDown : CrossKind::EUp;
    } else {
      act.kind = CrossKind::E;
    }
    act.added = cross_edge_set(trace.ring_base[i], n, act.a, act.b, act.kind).edges;
    for (const auto& e : act.added) layout.add_cross(e.u, e.v);
    trace.steps.push_back(std::move(act));
  }

  // Ring r (0-based) loses its first a-edge when s_{r-1} and s_r share a run.
  for (std::size_t r = 1; r < seq.size(); ++r) {
    if (!trace.runs.same_run(r - 1, r)) continue;
    const auto& run = trace.runs.runs[static_cast<std::size_t>(trace.runs.run_of[r])];
    const bool up = run.orientation == RunOrientation::Increasing;
    const int a = up ? 2 * seq[r] - 1 : 2 * seq[r] + 1;
    const int expected_prev = up ? seq[r] - 1 : seq[r] + 1;
    if (seq[r - 1] != expected_prev) throw std::logic_error("run does not step by one");
    trace.steps[r - 1].removed = layout.drop_ring_edge(r, a - 1);
  }

  // Intermediate graph: everything added, nothing removed yet.
  ConcentricLayout full(n, trace.ring_base);
  for (const auto& st : trace.steps) {
    for (const auto& e : st.added) full.add_cross(e.u, e.v);
  }
  PlaneDualGraph mid = full.to_graph();
  mid.set_construction({k, 0});
  mid.retrace();
  trace.intermediate_faces = mid.face_count();
  std::unordered_map<std::uint64_t, std::size_t> face_of;
  for (std::size_t f = 0; f < mid.faces().size(); ++f) {
    const auto& w = mid.faces()[f].walk;
    for (std::size_t i = 0; i < w.size(); ++i) face_of[dart_key(w[i], w[(i + 1) % w.size()])] = f;
  }
  for (const auto& st : trace.steps) {
    if (st.removed) check_merge(mid.faces(), face_of, *st.removed);
  }

  const long cells = 2L * (1L << (n - k));
  trace.expected_faces = cells - trace.runs.nu - 2 * trace.runs.lambda - 2;
  if (stage == BuildStage::Intermediate) return VennBuild{std::move(mid), std::move(trace)};

  PlaneDualGraph g = layout.to_graph();
  g.set_construction({k, 0});
  g.retrace();

  const FaceCatalog catalog(n);
  if (auto bad = find_uncatalogued_face(g.faces(), catalog)) {
    std::string flips;
    for (Direction d : bad->flips) flips += std::to_string(d) + ",";
    throw std::runtime_error("face " + std::to_string(bad->face) +
                             " matches no construction template: (" + flips + ")");
  }
  return VennBuild{std::move(g), std::move(trace)};
}

PlaneDualGraph ring_preview(int k, int cap) {
  if (k < 1 || (1 << std::min(k, 5)) > cap) throw std::length_error("ring_preview: k out of range");
  const int n = 1 << k;
  const auto coeff = basis_C(k).elements;
  std::vector<Mask> bases{0};
  for (Direction s : brgc(n - k - 1)) bases.push_back(bases.back() ^ coeff[static_cast<std::size_t>(s - 1)].bits());
  PlaneDualGraph g = ConcentricLayout(n, bases).to_graph();
  g.retrace();
  return g;
}

}  // namespace venn
