#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "venn/hypercube.hpp"
#include "venn/plane_graph.hpp"

namespace venn {

/// Lexicographically smallest rotation of the sequence or of its reverse.
std::vector<Direction> canonical_cyclic(std::span<const Direction> seq);

/// Flip-sequence templates for the faces of the concentric construction on
/// Q_n, n = 2^k, plus the faces created by repeated doubling.
///
/// Families (all parameters range over every admissible value):
///   ring        (1..n, 1..n)
///   e_short     (a..b-1, a, b, b-1..a+1, b)
///   e_long      (b..n, 1..a-1, b, a, a-1..1, n..b+1, a)
///   six_long_1  (a+2..n, 1..a-1, a+1, a+2..1, n..a+3, a)
///   six_long_2  (a..n, 1..a-1, a+2, a..1, n..a+3, a+1)
///   merged_up   6-faces glued along an increasing run, length 4l+2
///   merged_down 6-faces glued along a decreasing run, length 4l+2
///   colorful    two permutations of [t-1] separated by two t-flips, t > n
class FaceCatalog {
 public:
  explicit FaceCatalog(int n);

  int base_dimension() const { return n_; }
  std::size_t template_count() const { return templates_.size(); }

  /// Template name ("six(a=3)", "e_long(a=2,b=6)", ...) or nullopt.
  std::optional<std::string> classify(std::span<const Direction> flips) const;

  /// The increasing and decreasing merged templates for l glued 6-faces whose
  /// lowest direction is a (exposed for tests).
  static std::vector<Direction> merged_up(int a, int l);
  static std::vector<Direction> merged_down(int a, int l);

 private:
  int n_;
  std::map<std::vector<Direction>, std::string> templates_;
};

struct CatalogMismatch {
  std::size_t face = 0;
  std::vector<Direction> flips;
};

/// First face whose flip sequence matches no template.
std::optional<CatalogMismatch> find_uncatalogued_face(const std::vector<Face>& faces,
                                                      const FaceCatalog& catalog);

}  // namespace venn
