#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "venn/hypercube.hpp"

namespace venn {

enum class RunOrientation { Increasing, Decreasing };

/// A block of consecutive flip-sequence entries stepping by +1 or -1, all <= rho.
/// Length-0 runs are reported as Increasing.
struct Run {
  std::size_t start = 0;
  std::size_t count = 1;
  RunOrientation orientation = RunOrientation::Increasing;

  /// One less than the number of entries.
  std::size_t length() const { return count - 1; }
  std::size_t end() const { return start + count; }
};

/// Which of two overlapping maximal runs keeps the shared entry.
enum class TieBreak { EarlierRun, LaterRun };

struct RunPartition {
  int rho = 0;
  std::vector<Run> runs;
  /// Index into runs for every entry, or -1 for entries above rho.
  std::vector<int> run_of;
  long nu = 0;
  long lambda = 0;

  /// Entries <= rho; always equals nu + lambda.
  long covered() const { return nu + lambda; }
  bool same_run(std::size_t i, std::size_t j) const {
    return run_of[i] >= 0 && run_of[i] == run_of[j];
  }
};

/// Maximal rho-runs of the sequence with overlaps resolved by the tie-break.
RunPartition run_partition(std::span<const Direction> seq, int rho,
                           TieBreak tie_break = TieBreak::EarlierRun);
RunPartition run_partition(const FlipSequence& seq, int rho,
                           TieBreak tie_break = TieBreak::EarlierRun);

/// Number of consecutive entry pairs differing by exactly one.
long mu(std::span<const Direction> seq);

/// Flip sequence of the binary reflected Gray code on Q_n.
FlipSequence brgc(int n);

/// Walking from the empty set visits 2^n distinct vertices.
bool is_hamiltonian_path(std::span<const Direction> seq, int n);

/// Hamiltonian path of Q_n, n = 2^k, with many long (n-1)-runs. Starts at the
/// empty set. Requires 2 <= k <= 4.
CubePath longrun_path(int k);

/// Hamiltonian path of Q_{n+m}: the long-run path of Q_n laid out along the
/// reflected Gray code of Q_m, alternating forward and reversed copies.
CubePath product_path(int k, int m);

}  // namespace venn
