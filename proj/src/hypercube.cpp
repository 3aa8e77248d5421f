#include "venn/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace venn {

int edge_direction(Mask u, Mask v) {
  const Mask diff = u ^ v;
  if (std::popcount(diff) != 1) return 0;
  return std::countr_zero(diff) + 1;
}

namespace {

void check_dimension(int n) {
  if (n < 0 || n > kMaxDimension) {
    throw std::invalid_argument("dimension " + std::to_string(n) + " outside [0, 32]");
  }
}

void check_direction(int n, Direction i) {
  if (i < 1 || i > n) {
    throw std::invalid_argument("direction " + std::to_string(i) + " outside [1, " +
                                std::to_string(n) + "]");
  }
}

}  // namespace

VertexSet::VertexSet(int n, Mask bits) : n_(n), bits_(bits) {
  check_dimension(n);
  if ((bits & ~full_mask(n)) != 0) {
    throw std::invalid_argument("vertex has elements outside [" + std::to_string(n) + "]");
  }
}

VertexSet VertexSet::of(int n, std::initializer_list<int> elements) {
  return of(n, std::span<const int>(elements.begin(), elements.size()));
}

VertexSet VertexSet::of(int n, std::span<const int> elements) {
  check_dimension(n);
  Mask bits = 0;
  for (int e : elements) {
    check_direction(n, e);
    bits |= direction_bit(e);
  }
  return VertexSet(n, bits);
}

bool VertexSet::contains(int i) const {
  return i >= 1 && i <= n_ && (bits_ & direction_bit(i)) != 0;
}

int VertexSet::size() const { return std::popcount(bits_); }

std::vector<int> VertexSet::elements() const {
  std::vector<int> out;
  for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

int VertexSet::min_element() const {
  if (bits_ == 0) throw std::logic_error("min_element of empty set");
  return std::countr_zero(bits_) + 1;
}

int VertexSet::max_element() const {
  if (bits_ == 0) throw std::logic_error("max_element of empty set");
  return 32 - std::countl_zero(bits_);
}

VertexSet VertexSet::flipped(Direction i) const {
  check_direction(n_, i);
  return VertexSet(n_, bits_ ^ direction_bit(i));
}

VertexSet VertexSet::scaled(int factor, int n) const {
  std::vector<int> out;
  for (int e : elements()) out.push_back(e * factor);
  return of(n, out);
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (int e : elements()) {
    if (!first) s += ',';
    s += std::to_string(e);
    first = false;
  }
  return s + "}";
}

VertexSet symm_diff(const VertexSet& x, const VertexSet& y) {
  if (x.dimension() != y.dimension()) {
    throw std::invalid_argument("symmetric difference of sets over different ground sets");
  }
  return VertexSet(x.dimension(), x.bits() ^ y.bits());
}

VertexSet operator^(const VertexSet& x, const VertexSet& y) { return symm_diff(x, y); }

VertexSet antipode(const VertexSet& x) { return x.antipode(); }

FlipSequence::FlipSequence(int n, std::vector<Direction> entries)
    : n_(n), entries_(std::move(entries)) {
  check_dimension(n);
  for (Direction i : entries_) check_direction(n, i);
}

CubeCycle::CubeCycle(VertexSet s, FlipSequence f) : start(s), flips(std::move(f)) {
  if (flips.dimension() != start.dimension()) {
    throw std::invalid_argument("cycle flips and start vertex disagree on dimension");
  }
  Mask acc = 0;
  for (Direction i : flips) acc ^= direction_bit(i);
  if (acc != 0) throw std::invalid_argument("flip sequence does not close the cycle");
}

std::vector<VertexSet> walk(const VertexSet& start, const FlipSequence& flips) {
  if (flips.dimension() != start.dimension()) {
    throw std::invalid_argument("walk: flips and start vertex disagree on dimension");
  }
  std::vector<VertexSet> out;
  out.reserve(flips.size() + 1);
  Mask v = start.bits();
  out.emplace_back(start);
  for (Direction i : flips) {
    v ^= direction_bit(i);
    out.emplace_back(start.dimension(), v);
  }
  return out;
}

std::vector<VertexSet> walk(const CubePath& path) { return walk(path.start, path.flips); }

std::vector<VertexSet> walk(const CubeCycle& cycle) {
  auto out = walk(cycle.start, cycle.flips);
  out.pop_back();
  return out;
}

bool is_isometric(const CubePath& path) {
  Mask seen = 0;
  for (Direction i : path.flips) {
    if (seen & direction_bit(i)) return false;
    seen |= direction_bit(i);
  }
  return true;
}

bool is_isometric(const CubeCycle& cycle) {
  const auto& f = cycle.flips.entries();
  const std::size_t len = f.size();
  if (len % 2 != 0) return false;
  const std::size_t half = len / 2;
  std::vector<int> count(static_cast<std::size_t>(cycle.dimension()) + 1, 0);
  for (std::size_t j = 0; j < len; ++j) {
    if (++count[f[j]] > 2) return false;
    if (f[(j + half) % len] != f[j]) return false;
  }
  return true;
}

namespace {

// Reduced row echelon basis keyed by pivot bit.
struct Gf2Basis {
  std::vector<Mask> rows;

  // Returns the residue of v after reduction.
  Mask reduce(Mask v) const {
    for (Mask r : rows) v = std::min(v, v ^ r);
    return v;
  }

  bool insert(Mask v) {
    v = reduce(v);
    if (v == 0) return false;
    rows.push_back(v);
    std::sort(rows.begin(), rows.end(), std::greater<>());
    return true;
  }
};

}  // namespace

int rank_gf2(std::span<const VertexSet> vectors) {
  Gf2Basis basis;
  int rank = 0;
  for (const auto& v : vectors) rank += basis.insert(v.bits()) ? 1 : 0;
  return rank;
}

bool in_span(std::span<const VertexSet> vectors, const VertexSet& target) {
  Gf2Basis basis;
  for (const auto& v : vectors) basis.insert(v.bits());
  return basis.reduce(target.bits()) == 0;
}

std::vector<VertexSet> span(std::span<const VertexSet> basis) {
  return span(basis, basis.empty() ? 0 : basis.front().dimension());
}

std::vector<VertexSet> span(std::span<const VertexSet> basis, int n) {
  if (basis.size() > static_cast<std::size_t>(kMaxSpanBasis)) {
    throw std::length_error("span of " + std::to_string(basis.size()) +
                            " vectors exceeds the 2^28 element guard");
  }
  for (const auto& b : basis) {
    if (b.dimension() != n) throw std::invalid_argument("span: mixed dimensions");
  }
  const std::size_t count = std::size_t{1} << basis.size();
  std::vector<VertexSet> out;
  out.reserve(count);
  out.emplace_back(n, 0);
  for (std::size_t i = 1; i < count; ++i) {
    // Each coefficient vector differs from its predecessor in the low bits; build
    // element i from element (i with lowest set bit cleared).
    const std::size_t low = std::size_t{1} << std::countr_zero(i);
    out.emplace_back(n, out[i ^ low].bits() ^ basis[std::countr_zero(i)].bits());
  }
  return out;
}

}  // namespace venn
