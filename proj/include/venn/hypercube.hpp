#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace venn {

/// Subset of [n] packed into a word; element i lives in bit (i - 1).
using Mask = std::uint32_t;

/// Edge direction, an element of [n].
using Direction = int;

inline constexpr int kMaxDimension = 32;

/// Mask with the bits of [n] set.
constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

/// Mask of the prefix {1, ..., j}.
constexpr Mask prefix_mask(int j) { return full_mask(j); }

constexpr Mask direction_bit(Direction i) { return Mask{1} << (i - 1); }

/// Direction of the hypercube edge {u, v}, or 0 when u and v are not adjacent.
int edge_direction(Mask u, Mask v);

/// A vertex of Q_n, i.e. a subset of the ground set [n].
class VertexSet {
 public:
  VertexSet(int n, Mask bits);

  static VertexSet empty(int n) { return VertexSet(n, 0); }
  static VertexSet of(int n, std::initializer_list<int> elements);
  static VertexSet of(int n, std::span<const int> elements);

  int dimension() const { return n_; }
  Mask bits() const { return bits_; }

  bool contains(int i) const;
  int size() const;
  std::vector<int> elements() const;

  /// Smallest and largest element; the set must be nonempty.
  int min_element() const;
  int max_element() const;

  /// Complement with respect to [n].
  VertexSet antipode() const { return VertexSet(n_, ~bits_ & full_mask(n_)); }
  VertexSet flipped(Direction i) const;
  /// The same set viewed inside a larger (or smaller) ground set.
  VertexSet embedded(int n) const { return VertexSet(n, bits_); }
  /// k * x = {k i : i in x}.
  VertexSet scaled(int factor, int n) const;

  std::string to_string() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  int n_;
  Mask bits_;
};

/// x (+) y; throws std::invalid_argument on dimension mismatch.
VertexSet symm_diff(const VertexSet& x, const VertexSet& y);
VertexSet operator^(const VertexSet& x, const VertexSet& y);
VertexSet antipode(const VertexSet& x);

/// Ordered list of directions, all in [n].
class FlipSequence {
 public:
  explicit FlipSequence(int n, std::vector<Direction> entries = {});

  int dimension() const { return n_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Direction operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Direction>& entries() const { return entries_; }
  std::span<const Direction> view() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  friend bool operator==(const FlipSequence&, const FlipSequence&) = default;

 private:
  int n_;
  std::vector<Direction> entries_;
};

struct CubePath {
  VertexSet start;
  FlipSequence flips;

  int dimension() const { return start.dimension(); }
};

/// A closed walk; the flipped singletons XOR to the empty set.
struct CubeCycle {
  CubeCycle(VertexSet start, FlipSequence flips);

  VertexSet start;
  FlipSequence flips;

  int dimension() const { return start.dimension(); }
};

/// v_0 = start, v_j = v_{j-1} (+) {flip_j}.
std::vector<VertexSet> walk(const VertexSet& start, const FlipSequence& flips);
std::vector<VertexSet> walk(const CubePath& path);
/// Cycle vertices without repeating the start at the end.
std::vector<VertexSet> walk(const CubeCycle& cycle);

/// Paths: all directions distinct. Cycles: each direction used zero or two
/// times, at positions exactly half the cycle length apart.
bool is_isometric(const CubePath& path);
bool is_isometric(const CubeCycle& cycle);

/// Rank over GF(2) of the characteristic vectors.
int rank_gf2(std::span<const VertexSet> vectors);

/// Whether target is a GF(2) combination of the given vectors.
bool in_span(std::span<const VertexSet> vectors, const VertexSet& target);

inline constexpr int kMaxSpanBasis = 28;

/// All XOR combinations of the basis, in binary-counter order of the
/// coefficient vectors. Throws std::length_error for more than 28 elements.
std::vector<VertexSet> span(std::span<const VertexSet> basis);
/// As above, with the ground set given explicitly (needed for an empty basis).
std::vector<VertexSet> span(std::span<const VertexSet> basis, int n);

}  // namespace venn
