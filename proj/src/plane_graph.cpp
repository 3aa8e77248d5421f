#include "venn/plane_graph.hpp"

#include <algorithm>
#include <string>

namespace venn {

namespace {

std::string show(int n, Mask v) { return VertexSet(n, v).to_string(); }

}  // namespace

PlaneDualGraph::PlaneDualGraph(int n) : n_(n) {
  if (n < 1 || n > kMaxDimension) throw std::invalid_argument("PlaneDualGraph: bad dimension");
}

void PlaneDualGraph::add_vertex(Mask v) {
  if ((v & ~full_mask(n_)) != 0) throw std::invalid_argument("vertex outside Q_n");
  if (!index_.emplace(v, vertices_.size()).second) {
    throw std::invalid_argument("duplicate vertex " + show(n_, v));
  }
  vertices_.push_back(v);
  rotation_.emplace_back();
}

std::size_t PlaneDualGraph::index_of(Mask v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw std::out_of_range("no vertex " + show(n_, v));
  return it->second;
}

void PlaneDualGraph::set_rotation(Mask v, std::vector<Mask> neighbours) {
  rotation_[index_of(v)] = std::move(neighbours);
}

void PlaneDualGraph::insert_after(Mask v, Mask after, Mask w) {
  auto& rot = rotation_[index_of(v)];
  auto it = std::find(rot.begin(), rot.end(), after);
  if (it == rot.end()) throw std::invalid_argument("insert_after: anchor not in rotation");
  rot.insert(it + 1, w);
}

void PlaneDualGraph::remove_edge(Mask v, Mask w) {
  for (auto [p, q] : {std::pair{v, w}, std::pair{w, v}}) {
    auto& rot = rotation_[index_of(p)];
    auto it = std::find(rot.begin(), rot.end(), q);
    if (it == rot.end()) {
      throw std::invalid_argument("remove_edge: no edge " + show(n_, v) + " - " + show(n_, w));
    }
    rot.erase(it);
  }
}

bool PlaneDualGraph::has_edge(Mask v, Mask w) const {
  if (!has_vertex(v)) return false;
  const auto& rot = rotation(v);
  return std::find(rot.begin(), rot.end(), w) != rot.end();
}

std::vector<CubeEdge> PlaneDualGraph::edges() const {
  std::vector<CubeEdge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Mask u = vertices_[i];
    for (Mask v : rotation_[i]) {
      if (u < v) out.push_back({u, v, edge_direction(u, v)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const CubeEdge& a, const CubeEdge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
  return out;
}

std::size_t PlaneDualGraph::edge_count() const {
  std::size_t darts = 0;
  for (const auto& r : rotation_) darts += r.size();
  return darts / 2;
}

void PlaneDualGraph::set_faces(std::vector<Face> faces, std::optional<std::size_t> outer) {
  if (outer && *outer >= faces.size()) throw std::out_of_range("outer face index out of range");
  faces_ = std::move(faces);
  outer_face_ = outer;
  if (outer && faces_[*outer].length() >= 2) {
    const auto& w = faces_[*outer].walk;
    outer_dart_ = Dart{w[0], w[1]};
  }
}

void PlaneDualGraph::retrace() {
  faces_ = trace_faces(*this);
  outer_face_.reset();
  if (outer_dart_) outer_face_ = face_containing(faces_, *outer_dart_);
}

void PlaneDualGraph::set_layout(std::vector<LayoutHint> layout) {
  if (layout.size() != vertices_.size()) throw std::invalid_argument("layout size mismatch");
  layout_ = std::move(layout);
}

std::vector<Face> trace_faces(const PlaneDualGraph& g) {
  const std::size_t nv = g.vertex_count();
  std::vector<std::size_t> offset(nv + 1, 0);
  for (std::size_t i = 0; i < nv; ++i) offset[i + 1] = offset[i] + g.rotation_at(i).size();
  const std::size_t darts = offset[nv];

  // For dart d = (u -> v): the index of v and the slot of u in v's rotation.
  std::vector<std::size_t> head(darts);
  std::vector<std::size_t> back_slot(darts);
  for (std::size_t i = 0; i < nv; ++i) {
    const Mask u = g.vertices()[i];
    const auto& rot = g.rotation_at(i);
    for (std::size_t s = 0; s < rot.size(); ++s) {
      const Mask v = rot[s];
      if (!g.has_vertex(v)) {
        throw InconsistentRotation("edge to missing vertex " + std::to_string(v));
      }
      const std::size_t j = g.index_of(v);
      const auto& vrot = g.rotation_at(j);
      const auto hits = std::count(vrot.begin(), vrot.end(), u);
      if (hits != 1) {
        throw InconsistentRotation("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                   " appears " + std::to_string(hits) + " times at " +
                                   std::to_string(v));
      }
      head[offset[i] + s] = j;
      back_slot[offset[i] + s] = static_cast<std::size_t>(std::find(vrot.begin(), vrot.end(), u) - vrot.begin());
    }
  }

  std::vector<bool> used(darts, false);
  std::vector<std::size_t> tail(darts);
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t d = offset[i]; d < offset[i + 1]; ++d) tail[d] = i;
  }

  std::vector<Face> faces;
  for (std::size_t start = 0; start < darts; ++start) {
    if (used[start]) continue;
    Face face;
    std::size_t d = start;
    do {
      used[d] = true;
      const Mask u = g.vertices()[tail[d]];
      const std::size_t j = head[d];
      const Mask v = g.vertices()[j];
      face.walk.push_back(u);
      face.flips.push_back(edge_direction(u, v));
      const std::size_t deg = offset[j + 1] - offset[j];
      d = offset[j] + (back_slot[d] + 1) % deg;
    } while (d != start);
    faces.push_back(std::move(face));
  }
  return faces;
}

std::optional<std::size_t> face_containing(const std::vector<Face>& faces, Dart d) {
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f].walk;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] == d.from && w[(i + 1) % w.size()] == d.to) return f;
    }
  }
  return std::nullopt;
}

}  // namespace venn
