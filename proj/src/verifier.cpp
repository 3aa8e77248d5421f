#include "venn/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "venn/face_catalog.hpp"

namespace venn {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t count) : parent_(count) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t dart_key(Mask from, Mask to) { return (std::uint64_t{from} << 32) | to; }

std::unordered_map<std::uint64_t, std::size_t> dart_faces(const std::vector<Face>& faces) {
  std::unordered_map<std::uint64_t, std::size_t> out;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& w = faces[f].walk;
    for (std::size_t i = 0; i < w.size(); ++i) out[dart_key(w[i], w[(i + 1) % w.size()])] = f;
  }
  return out;
}

std::string vertex_name(const PlaneDualGraph& g, Mask v) { return VertexSet(g.dimension(), v).to_string(); }

std::string flip_list(const std::vector<Direction>& flips) {
  std::string s = "(";
  for (std::size_t i = 0; i < flips.size(); ++i) s += (i ? "," : "") + std::to_string(flips[i]);
  return s + ")";
}

CheckResult pass(std::string name) { return {std::move(name), true, {}}; }
CheckResult fail(std::string name, std::string witness) { return {std::move(name), false, std::move(witness)}; }

// Number of components among the vertices whose bit j equals `inside`, and a
// vertex outside the component of the first one.
std::optional<Mask> split_witness(const PlaneDualGraph& g, Direction j, bool inside) {
  const Mask bit = direction_bit(j);
  DisjointSets sets(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Mask u = g.vertices()[i];
    if (((u & bit) != 0) != inside) continue;
    for (Mask v : g.rotation_at(i)) {
      if (((v & bit) != 0) == inside) sets.unite(i, g.index_of(v));
    }
  }
  std::optional<std::size_t> root;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    if (((g.vertices()[i] & bit) != 0) != inside) continue;
    const std::size_t r = sets.find(i);
    if (!root) root = r;
    else if (r != *root) return g.vertices()[i];
  }
  return std::nullopt;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

CheckResult check_rotation(const PlaneDualGraph& g) {
  const char* name = "rotation";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const Mask u = g.vertices()[i];
    auto rot = g.rotation_at(i);
    for (Mask v : rot) {
      if (edge_direction(u, v) == 0) {
        return fail(name, "non-hypercube edge " + vertex_name(g, u) + " - " + vertex_name(g, v));
      }
      if (!g.has_vertex(v)) return fail(name, "edge to missing vertex " + vertex_name(g, v));
      const auto& back = g.rotation(v);
      if (std::count(back.begin(), back.end(), u) != 1) {
        return fail(name, "edge " + vertex_name(g, u) + " - " + vertex_name(g, v) + " not mirrored once");
      }
    }
    std::sort(rot.begin(), rot.end());
    if (std::adjacent_find(rot.begin(), rot.end()) != rot.end()) {
      return fail(name, "repeated neighbour at " + vertex_name(g, u));
    }
  }
  return pass(name);
}

CheckResult check_spanning(const PlaneDualGraph& g) {
  const char* name = "spanning";
  if (g.dimension() > 30) return fail(name, "dimension too large to enumerate");
  const Mask count = Mask{1} << g.dimension();
  for (Mask v = 0; v < count; ++v) {
    if (!g.has_vertex(v)) return fail(name, "missing vertex " + vertex_name(g, v));
  }
  return pass(name);
}

CheckResult check_connected(const PlaneDualGraph& g) {
  const char* name = "connected";
  DisjointSets sets(g.vertex_count());
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    for (Mask v : g.rotation_at(i)) sets.unite(i, g.index_of(v));
  }
  for (std::size_t i = 1; i < g.vertex_count(); ++i) {
    if (sets.find(i) != sets.find(0)) return fail(name, "vertex " + vertex_name(g, g.vertices()[i]) + " unreachable");
  }
  return pass(name);
}

CheckResult check_faces(const PlaneDualGraph& g) {
  const char* name = "faces";
  const int n = g.dimension();
  if (g.face_count() == 0) return fail(name, "no faces traced");
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    const auto& flips = g.faces()[f].flips;
    const std::size_t len = flips.size();
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (Direction d : flips) {
      if (d < 1 || d > n) return fail(name, "face " + std::to_string(f) + " has a non-edge step");
      ++seen[static_cast<std::size_t>(d)];
    }
    const auto distinct = static_cast<std::size_t>(std::count_if(seen.begin(), seen.end(), [](int c) { return c > 0; }));
    const bool pairs = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 0 || c == 2; });
    if (len % 2 != 0 || len < 4 || len > 2 * static_cast<std::size_t>(n) || !pairs || distinct * 2 != len) {
      return fail(name, "face " + std::to_string(f) + " " + flip_list(flips));
    }
  }
  return pass(name);
}

std::optional<std::vector<CurveStep>> curve_cycle(const PlaneDualGraph& g, Direction j) {
  const auto face_of = dart_faces(g.faces());
  std::vector<CubeEdge> jedges;
  for (const auto& e : g.edges()) {
    if (e.direction == j) jedges.push_back(e);
  }
  if (jedges.empty()) return std::nullopt;

  struct Sides {
    std::size_t left;
    std::size_t right;
  };
  std::vector<Sides> sides;
  std::unordered_map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t e = 0; e < jedges.size(); ++e) {
    const auto l = face_of.find(dart_key(jedges[e].u, jedges[e].v));
    const auto r = face_of.find(dart_key(jedges[e].v, jedges[e].u));
    if (l == face_of.end() || r == face_of.end() || l->second == r->second) return std::nullopt;
    sides.push_back({l->second, r->second});
    incident[l->second].push_back(e);
    incident[r->second].push_back(e);
  }
  for (const auto& [f, es] : incident) {
    if (es.size() != 2) return std::nullopt;
  }

  std::vector<CurveStep> steps;
  std::size_t face = sides[0].left;
  std::size_t edge = 0;
  do {
    steps.push_back({face, jedges[edge]});
    face = sides[edge].left == face ? sides[edge].right : sides[edge].left;
    const auto& es = incident[face];
    edge = es[0] == edge ? es[1] : es[0];
    if (steps.size() > jedges.size()) return std::nullopt;
  } while (edge != 0 || face != sides[0].left);
  if (steps.size() != jedges.size()) return std::nullopt;
  return steps;
}

CheckResult check_curves(const PlaneDualGraph& g) {
  const char* name = "curves";
  for (Direction j = 1; j <= g.dimension(); ++j) {
    for (bool inside : {true, false}) {
      if (auto w = split_witness(g, j, inside)) {
        return fail(name, "direction " + std::to_string(j) + ": " + (inside ? "inside" : "outside") +
                              " disconnected at " + vertex_name(g, *w));
      }
    }
    if (!curve_cycle(g, j)) {
      return fail(name, "direction " + std::to_string(j) + ": faces with j-edges are not one cycle");
    }
  }
  return pass(name);
}

CheckResult check_euler(const PlaneDualGraph& g) {
  const long v = static_cast<long>(g.vertex_count());
  const long e = static_cast<long>(g.edge_count());
  const long f = static_cast<long>(g.face_count());
  if (v - e + f == 2) return pass("euler");
  return fail("euler", "V - E + F = " + std::to_string(v) + " - " + std::to_string(e) + " + " +
                           std::to_string(f) + " = " + std::to_string(v - e + f));
}

CheckResult check_darts(const PlaneDualGraph& g) {
  const char* name = "darts";
  std::unordered_map<std::uint64_t, int> used;
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    const auto& w = g.faces()[f].walk;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const Mask u = w[i];
      const Mask v = w[(i + 1) % w.size()];
      if (!g.has_edge(u, v)) return fail(name, "face " + std::to_string(f) + " steps off the graph at " + vertex_name(g, u));
      if (++used[dart_key(u, v)] > 1) return fail(name, "dart " + vertex_name(g, u) + " -> " + vertex_name(g, v) + " used twice");
    }
  }
  if (used.size() != 2 * g.edge_count()) {
    return fail(name, std::to_string(2 * g.edge_count() - used.size()) + " darts on no face");
  }
  return pass(name);
}

CheckResult check_retrace(const PlaneDualGraph& g) {
  const char* name = "retrace";
  std::vector<Face> traced;
  try {
    traced = trace_faces(g);
  } catch (const InconsistentRotation& e) {
    return fail(name, e.what());
  }
  if (traced.size() != g.face_count()) {
    return fail(name, "stored " + std::to_string(g.face_count()) + " faces, traced " + std::to_string(traced.size()));
  }
  const auto face_of = dart_faces(traced);
  std::vector<bool> claimed(traced.size(), false);
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    const auto& w = g.faces()[f].walk;
    if (w.empty()) return fail(name, "face " + std::to_string(f) + " is empty");
    const auto it = face_of.find(dart_key(w[0], w[1 % w.size()]));
    if (it == face_of.end() || claimed[it->second] || traced[it->second].length() != w.size()) {
      return fail(name, "face " + std::to_string(f) + " differs from the traced face");
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto d = face_of.find(dart_key(w[i], w[(i + 1) % w.size()]));
      if (d == face_of.end() || d->second != it->second) {
        return fail(name, "face " + std::to_string(f) + " differs from the traced face");
      }
    }
    claimed[it->second] = true;
  }
  if (g.outer_face() && g.outer_dart() &&
      face_containing(g.faces(), *g.outer_dart()) != g.outer_face()) {
    return fail(name, "outer face does not hold the outer dart");
  }
  return pass(name);
}

CheckResult check_catalog(const PlaneDualGraph& g) {
  const char* name = "catalog";
  if (!g.construction()) return fail(name, "no construction record");
  const FaceCatalog catalog(1 << g.construction()->k);
  if (auto bad = find_uncatalogued_face(g.faces(), catalog)) {
    return fail(name, "face " + std::to_string(bad->face) + " " + flip_list(bad->flips));
  }
  return pass(name);
}

VerificationReport verify(const PlaneDualGraph& g) {
  VerificationReport r;
  r.n = g.dimension();
  r.vertices = g.vertex_count();
  r.crossings = crossing_count(g);
  r.construction = g.construction();
  r.monotone_reference = monotone_reference(r.n);
  for (const auto& f : g.faces()) ++r.face_lengths[f.length()];

  r.checks.push_back(check_rotation(g));
  const bool sane = r.checks.back().passed;
  if (sane) r.edges = g.edge_count();
  r.checks.push_back(check_spanning(g));
  if (sane) {
    r.checks.push_back(check_connected(g));
    r.checks.push_back(check_darts(g));
    r.checks.push_back(check_retrace(g));
    r.checks.push_back(check_faces(g));
    r.checks.push_back(check_curves(g));
    r.checks.push_back(check_euler(g));
  }
  if (r.n >= 2) {
    r.lower_bound = lower_bound(r.n);
    if (r.crossings >= *r.lower_bound) r.checks.push_back(pass("lower_bound"));
    else r.checks.push_back(fail("lower_bound", std::to_string(r.crossings) + " < " + std::to_string(*r.lower_bound)));
  }
  if (const auto& c = r.construction) {
    if (sane) r.checks.push_back(check_catalog(g));
    if (c->k >= 3 && c->m >= 0 && (1 << c->k) + c->m == r.n) {
      r.expected_crossings = expected_crossings(c->k, c->m);
      if (r.crossings == *r.expected_crossings) r.checks.push_back(pass("expected_crossings"));
      else r.checks.push_back(fail("expected_crossings", std::to_string(r.crossings) + " != " + std::to_string(*r.expected_crossings)));
    } else {
      r.checks.push_back(fail("expected_crossings", "construction record does not match n"));
    }
  }
  return r;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream out;
  out << "n = " << r.n << "\n";
  if (r.construction) out << "construction: k = " << r.construction->k << ", m = " << r.construction->m << "\n";
  out << "vertices = " << r.vertices << ", edges = " << r.edges << ", crossings = " << r.crossings << "\n";
  if (r.lower_bound) out << "lower bound L_n = " << *r.lower_bound << "\n";
  if (r.expected_crossings) out << "expected crossings = " << *r.expected_crossings << "\n";
  out << "monotone reference = " << r.monotone_reference;
  if (r.n == 1) out << " (table convention; binom(1,0) = 1)";
  out << "\nface lengths:";
  for (const auto& [len, count] : r.face_lengths) out << " " << len << "x" << count;
  out << "\n";
  for (const auto& c : r.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) out << ": " << c.witness;
    out << "\n";
  }
  out << (r.passed() ? "verified" : "verification failed") << "\n";
  return out.str();
}

std::uint64_t lower_bound(int n) {
  if (n < 2 || n > 63) throw std::invalid_argument("lower_bound: n must be in [2, 63]");
  const std::uint64_t num = (std::uint64_t{1} << n) - 2;
  const auto den = static_cast<std::uint64_t>(n - 1);
  return (num + den - 1) / den;
}

std::uint64_t expected_crossings(int k, int m) {
  if (k < 3 || k > 30 || m < 0 || m >= (1 << k)) throw std::invalid_argument("expected_crossings: need k >= 3, 0 <= m < 2^k");
  if (k == 3) return std::uint64_t{40} << m;
  const int n = 1 << k;
  if (n + m > 120) throw std::overflow_error("expected_crossings: value exceeds 64 bits");
  using Wide = unsigned __int128;
  const Wide big = Wide{1} << (n + m);
  const Wide nn = static_cast<Wide>(n);
  const Wide value = big / nn + 33 * (big / (8 * nn * nn)) - 2 * ((Wide{1} << (n / 2 + m)) / nn) - 2 * (Wide{1} << m);
  if (value > Wide{~std::uint64_t{0}}) throw std::overflow_error("expected_crossings: value exceeds 64 bits");
  return static_cast<std::uint64_t>(value);
}

std::uint64_t monotone_reference(int n) {
  if (n < 1 || n > 62) throw std::invalid_argument("monotone_reference: n must be in [1, 62]");
  if (n == 1) return 0;
  std::uint64_t c = 1;
  for (int i = 1; i <= n / 2; ++i) c = c * static_cast<std::uint64_t>(n - n / 2 + i) / static_cast<std::uint64_t>(i);
  return c;
}

}  // namespace venn
