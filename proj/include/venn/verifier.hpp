#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "venn/plane_graph.hpp"

namespace venn {

/// Outcome of one check. A failure carries a witness naming a vertex, face or direction.
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct VerificationReport {
  int n = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t crossings = 0;
  std::optional<Construction> construction;
  /// face length -> number of faces
  std::map<std::size_t, std::size_t> face_lengths;
  std::vector<CheckResult> checks;
  std::optional<std::uint64_t> lower_bound;
  std::optional<std::uint64_t> expected_crossings;
  std::uint64_t monotone_reference = 0;

  bool passed() const;
  const CheckResult* check(const std::string& name) const;
};

/// Rotation lists are symmetric, duplicate-free hypercube adjacencies.
CheckResult check_rotation(const PlaneDualGraph& g);
/// Every subset of [n] is a vertex.
CheckResult check_spanning(const PlaneDualGraph& g);
CheckResult check_connected(const PlaneDualGraph& g);
/// Every face has length 2l, 2 <= l <= n, and flips each of l directions exactly twice.
CheckResult check_faces(const PlaneDualGraph& g);
/// For every j the sets with and without j induce connected subgraphs, and the
/// faces holding j-edges form one cycle through shared j-edges.
CheckResult check_curves(const PlaneDualGraph& g);
CheckResult check_euler(const PlaneDualGraph& g);
/// The stored faces use every dart exactly once.
CheckResult check_darts(const PlaneDualGraph& g);
/// The stored faces equal a fresh trace of the rotation system.
CheckResult check_retrace(const PlaneDualGraph& g);
/// Every face matches a construction template; needs the construction record.
CheckResult check_catalog(const PlaneDualGraph& g);

/// One step of the curve of direction j: the face it passes and the j-edge it
/// crosses next.
struct CurveStep {
  std::size_t face = 0;
  CubeEdge edge;
};

/// The closed sequence of faces and j-edges traversed by curve j, or nullopt
/// when the faces holding j-edges do not form a single cycle.
std::optional<std::vector<CurveStep>> curve_cycle(const PlaneDualGraph& g, Direction j);

/// Runs every check. Catalog and formula checks are added when g records its
/// construction.
VerificationReport verify(const PlaneDualGraph& g);

std::string to_text(const VerificationReport& report);

/// ceil((2^n - 2) / (n - 1)), n >= 2.
std::uint64_t lower_bound(int n);
/// 40 * 2^m for k = 3, otherwise (1 + 33/8n - 2/2^{n/2} - 2n/2^n) 2^{n+m}/n with n = 2^k.
/// Throws std::overflow_error when the value does not fit 64 bits.
std::uint64_t expected_crossings(int k, int m);
/// binom(n, floor(n/2)); 0 for n = 1 by table convention.
std::uint64_t monotone_reference(int n);

}  // namespace venn
