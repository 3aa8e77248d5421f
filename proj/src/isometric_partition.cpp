#include "venn/isometric_partition.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace venn {

namespace {

void check_level(int k) {
  if (k < 1) throw std::invalid_argument("basis level k must be at least 1");
  if (k > 5) throw std::invalid_argument("basis level k must be at most 5 (ground set [32])");
}

VertexSet pair_set(int n, int a, int b) { return VertexSet::of(n, {a, b}); }

void check_cap(int k, int cap) {
  if (cap > kMaxMaterializationCap) {
    throw std::invalid_argument("materialization cap above " +
                                std::to_string(kMaxMaterializationCap));
  }
  if ((1 << k) > cap) {
    throw std::length_error("n = " + std::to_string(1 << k) +
                            " exceeds the materialization cap " + std::to_string(cap));
  }
}

}  // namespace

Basis basis_B(int k) {
  check_level(k);
  Basis out{k, {}};
  const int n = 1 << k;
  for (int level = 2; level <= k; ++level) {
    const int half = 1 << (level - 1);
    for (int i = 1; i < half; ++i) out.elements.push_back(pair_set(n, i, half + i));
  }
  return out;
}

Basis basis_O(int k) {
  check_level(k);
  Basis out{k, {}};
  const int n = 1 << k;
  for (int a = 1; a + 2 <= n - 1; a += 2) out.elements.push_back(pair_set(n, a, a + 2));
  return out;
}

Basis basis_C(int k) {
  Basis out = basis_O(k);
  if (k == 1) return out;
  const int n = 1 << k;
  for (const auto& e : basis_C(k - 1).elements) out.elements.push_back(e.scaled(2, n));
  return out;
}

std::pair<int, int> endpoints(const VertexSet& pair) {
  if (pair.size() != 2) throw std::invalid_argument("expected a 2-set, got " + pair.to_string());
  return {pair.min_element(), pair.max_element()};
}

bool check_pairwise_distinct_endpoints(std::span<const VertexSet> pairs) {
  std::vector<int> mins, maxs;
  for (const auto& p : pairs) {
    auto [a, b] = endpoints(p);
    mins.push_back(a);
    maxs.push_back(b);
  }
  auto all_distinct = [](std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return std::adjacent_find(v.begin(), v.end()) == v.end();
  };
  return all_distinct(mins) && all_distinct(maxs);
}

bool check_pairwise_distinct_endpoints(const Basis& basis) {
  return check_pairwise_distinct_endpoints(std::span<const VertexSet>(basis.elements));
}

bool spans_equal(std::span<const VertexSet> b1, std::span<const VertexSet> b2) {
  if (rank_gf2(b1) != rank_gf2(b2)) return false;
  return std::all_of(b1.begin(), b1.end(), [&](const VertexSet& v) { return in_span(b2, v); });
}

bool spans_equal(const Basis& b1, const Basis& b2) {
  if (b1.ground() != b2.ground()) throw std::invalid_argument("spans_equal: different ground sets");
  return spans_equal(std::span<const VertexSet>(b1.elements), std::span<const VertexSet>(b2.elements));
}

CubePath ramras_path(const VertexSet& x, int n) {
  if (n < 2 || n > kMaxDimension) throw std::invalid_argument("ramras_path: n out of range");
  if ((x.bits() & ~full_mask(n - 1)) != 0) {
    throw std::invalid_argument("ramras_path: start vertex must be a subset of [n-1]");
  }
  std::vector<Direction> flips(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) flips[static_cast<std::size_t>(j - 1)] = j;
  return CubePath{VertexSet(n - 1, x.bits()), FlipSequence(n - 1, std::move(flips))};
}

CubeCycle ramras_cycle(const VertexSet& x) {
  const int n = x.dimension();
  if (n < 2) throw std::invalid_argument("ramras_cycle: n must be at least 2");
  if (x.contains(n)) throw std::invalid_argument("ramras_cycle: start vertex must avoid n");
  std::vector<Direction> flips;
  flips.reserve(2 * static_cast<std::size_t>(n));
  for (int rep = 0; rep < 2; ++rep) {
    for (int j = 1; j <= n; ++j) flips.push_back(j);
  }
  return CubeCycle(x, FlipSequence(n, std::move(flips)));
}

int cycle_position(Mask x, int n, Mask v) {
  const Mask d = v ^ x;
  const int j = std::popcount(d);
  if (d == prefix_mask(j)) return j;
  const Mask e = d ^ full_mask(n);
  const int i = std::popcount(e);
  if (e == prefix_mask(i) && i >= 1 && i < n) return n + i;
  return -1;
}

std::vector<CubePath> partition_paths(int k, int cap) {
  check_cap(k, cap);
  const int n = 1 << k;
  const Basis c = basis_C(k);
  std::vector<CubePath> out;
  for (const auto& x : span(c.elements, n)) out.push_back(ramras_path(x, n));
  return out;
}

std::vector<CubeCycle> partition_cycles(int k, int cap) {
  check_cap(k, cap);
  const Basis c = basis_C(k);
  std::vector<CubeCycle> out;
  for (const auto& x : span(c.elements, c.ground())) out.push_back(ramras_cycle(x));
  return out;
}

namespace {

template <typename Items>
CoverCheck check_cover(const Items& items, int dim) {
  CoverCheck out;
  out.expected = std::size_t{1} << dim;
  std::vector<bool> seen(out.expected, false);
  for (const auto& item : items) {
    for (const auto& v : walk(item)) {
      if (seen[v.bits()]) {
        out.witness = v.bits();
        out.message = "vertex " + v.to_string() + " covered twice";
        return out;
      }
      seen[v.bits()] = true;
      ++out.vertices_covered;
    }
  }
  for (std::size_t v = 0; v < seen.size(); ++v) {
    if (!seen[v]) {
      out.witness = static_cast<Mask>(v);
      out.message = "vertex " + VertexSet(dim, static_cast<Mask>(v)).to_string() + " not covered";
      return out;
    }
  }
  out.ok = true;
  return out;
}

}  // namespace

CoverCheck check_path_partition(int k, int cap) {
  return check_cover(partition_paths(k, cap), (1 << k) - 1);
}

CoverCheck check_cycle_partition(int k, int cap) {
  return check_cover(partition_cycles(k, cap), 1 << k);
}

std::string to_string(CrossKind kind) {
  switch (kind) {
    case CrossKind::E: return "E";
    case CrossKind::EDown: return "E_down";
    case CrossKind::EUp: return "E_up";
    case CrossKind::F: return "F";
  }
  return "?";
}

CrossEdgeSet cross_edge_set(Mask x, int n, int a, int b, CrossKind kind) {
  if (n < 4 || n > kMaxDimension) throw std::invalid_argument("cross_edge_set: n out of range");
  if ((x & ~full_mask(n - 1)) != 0) {
    throw std::invalid_argument("cross_edge_set: x must be a subset of [n-1]");
  }
  if (!(1 <= a && a < b && b <= n - 1)) {
    throw std::invalid_argument("cross_edge_set: need 1 <= a < b <= n-1");
  }
  if ((kind == CrossKind::EDown || kind == CrossKind::EUp) && b != a + 2) {
    throw std::invalid_argument("cross_edge_set: " + to_string(kind) + " requires b = a + 2");
  }
  const Mask y = x ^ direction_bit(a) ^ direction_bit(b);
  auto w = [&](int j) { return cycle_vertex(x, n, j); };
  auto u = [&](int j) { return cycle_vertex(y, n, j); };

  CrossEdgeSet out{kind, n, x, a, b, {}};
  auto add = [&](Mask p, Mask q) {
    const int dir = edge_direction(p, q);
    if (dir == 0) throw std::logic_error("cross_edge_set produced a non-edge");
    out.edges.push_back({p, q, dir});
  };
  switch (kind) {
    case CrossKind::E:
      add(w(a - 1), u(a));
      add(w(b - 1), u(b));
      add(w(n + a - 1), u(n + a));
      add(w(n + b - 1), u(n + b));
      break;
    case CrossKind::EDown:
      add(w(a - 1), u(a));
      add(w(a + 1), u(a + 2));
      add(w(n + a - 1), u(n + a + 2));
      break;
    case CrossKind::EUp:
      add(w(a), u(a - 1));
      add(w(a + 2), u(a + 1));
      add(w(n + a + 2), u(n + a - 1));
      break;
    case CrossKind::F:
      add(w(a - 1), w(a));
      add(w(a), u(a - 1));
      add(u(a - 1), u(a));
      add(u(a), w(a - 1));
      break;
  }
  return out;
}

}  // namespace venn
