#pragma once

#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "venn/hypercube.hpp"
#include "venn/isometric_partition.hpp"

namespace venn {

/// Closed walk around a face. walk[i] -> walk[i+1] (cyclically) is flipped by flips[i].
struct Face {
  std::vector<Mask> walk;
  std::vector<Direction> flips;

  std::size_t length() const { return walk.size(); }
  friend bool operator==(const Face&, const Face&) = default;
};

/// Ring index (0 = outermost) and position on the ring of a concentric layout.
struct LayoutHint {
  int ring = 0;
  int position = 0;

  friend bool operator==(const LayoutHint&, const LayoutHint&) = default;
};

/// Parameters of the power-of-two build (n = 2^k) and the number of doublings.
struct Construction {
  int k = 0;
  int m = 0;

  friend bool operator==(const Construction&, const Construction&) = default;
};

/// A directed edge from -> to.
struct Dart {
  Mask from = 0;
  Mask to = 0;

  friend bool operator==(const Dart&, const Dart&) = default;
};

class InconsistentRotation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A spanning subgraph of Q_n with a rotation system: for every vertex the cyclic
/// order of its neighbours. Faces come from tracing the rotation system.
class PlaneDualGraph {
 public:
  explicit PlaneDualGraph(int n);

  int dimension() const { return n_; }

  void add_vertex(Mask v);
  bool has_vertex(Mask v) const { return index_.contains(v); }
  std::size_t index_of(Mask v) const;
  const std::vector<Mask>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }

  const std::vector<Mask>& rotation(Mask v) const { return rotation_[index_of(v)]; }
  const std::vector<Mask>& rotation_at(std::size_t index) const { return rotation_[index]; }
  void set_rotation(Mask v, std::vector<Mask> neighbours);
  /// Inserts w into the rotation at v directly after `after`.
  void insert_after(Mask v, Mask after, Mask w);
  /// Drops w from the rotation at v and v from the rotation at w.
  void remove_edge(Mask v, Mask w);
  bool has_edge(Mask v, Mask w) const;

  /// Undirected edges, each listed once with u < v, sorted.
  std::vector<CubeEdge> edges() const;
  std::size_t edge_count() const;

  const std::vector<Face>& faces() const { return faces_; }
  std::size_t face_count() const { return faces_.size(); }
  /// Replaces the face list without re-tracing (used when loading documents).
  void set_faces(std::vector<Face> faces, std::optional<std::size_t> outer);
  /// Traces faces from the rotation system and locates the outer face.
  void retrace();

  /// A dart lying on the outer face.
  const std::optional<Dart>& outer_dart() const { return outer_dart_; }
  void set_outer_dart(Dart d) { outer_dart_ = d; }
  std::optional<std::size_t> outer_face() const { return outer_face_; }

  const std::optional<std::vector<LayoutHint>>& layout() const { return layout_; }
  void set_layout(std::vector<LayoutHint> layout);
  void clear_layout() { layout_.reset(); }

  const std::optional<Construction>& construction() const { return construction_; }
  void set_construction(Construction c) { construction_ = c; }

 private:
  int n_;
  std::vector<Mask> vertices_;
  std::unordered_map<Mask, std::size_t> index_;
  std::vector<std::vector<Mask>> rotation_;
  std::vector<Face> faces_;
  std::optional<Dart> outer_dart_;
  std::optional<std::size_t> outer_face_;
  std::optional<std::vector<LayoutHint>> layout_;
  std::optional<Construction> construction_;
};

/// Standard face tracing: after arriving at v from u, leave along the neighbour
/// that follows u in the rotation at v. Every dart is used exactly once.
/// Throws InconsistentRotation when an edge is missing from one endpoint.
std::vector<Face> trace_faces(const PlaneDualGraph& g);

/// Index of the face containing dart d, or nullopt.
std::optional<std::size_t> face_containing(const std::vector<Face>& faces, Dart d);

/// Number of crossings of the primal diagram: one per face.
inline std::size_t crossing_count(const PlaneDualGraph& g) { return g.face_count(); }

}  // namespace venn
