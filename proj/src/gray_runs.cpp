#include "venn/gray_runs.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "venn/isometric_partition.hpp"

namespace venn {

namespace {

// Longest flip sequence we are willing to generate, as a cube dimension.
constexpr int kMaxSequenceDimension = 24;

enum class Step { Break, Up, Down };

}  // namespace

RunPartition run_partition(std::span<const Direction> seq, int rho, TieBreak tie_break) {
  if (rho < 1) throw std::invalid_argument("run_partition: rho must be at least 1");
  RunPartition out;
  out.rho = rho;
  out.run_of.assign(seq.size(), -1);
  const std::size_t len = seq.size();

  auto step = [&](std::size_t i) {
    if (seq[i] > rho || seq[i + 1] > rho) return Step::Break;
    if (seq[i + 1] == seq[i] + 1) return Step::Up;
    if (seq[i + 1] == seq[i] - 1) return Step::Down;
    return Step::Break;
  };

  // Maximal runs in order of their first entry.
  std::vector<Run> maximal;
  std::vector<bool> in_segment(len, false);
  std::size_t i = 0;
  while (i + 1 < len) {
    const Step s = step(i);
    if (s == Step::Break) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < len && step(j) == s) ++j;
    maximal.push_back({i, j - i + 1,
                       s == Step::Up ? RunOrientation::Increasing : RunOrientation::Decreasing});
    for (std::size_t t = i; t <= j; ++t) in_segment[t] = true;
    i = j;  // the turning entry may start the next run
  }
  for (std::size_t t = 0; t < len; ++t) {
    if (seq[t] <= rho && !in_segment[t]) maximal.push_back({t, 1, RunOrientation::Increasing});
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const Run& a, const Run& b) { return a.start < b.start; });

  for (std::size_t r = 0; r + 1 < maximal.size(); ++r) {
    Run& prev = maximal[r];
    Run& next = maximal[r + 1];
    if (prev.end() - 1 != next.start) continue;
    if (tie_break == TieBreak::EarlierRun) {
      ++next.start;
      --next.count;
    } else {
      --prev.count;
    }
  }

  for (auto& run : maximal) {
    if (run.count == 0) throw std::logic_error("run_partition emptied a run");
    if (run.count == 1) run.orientation = RunOrientation::Increasing;
    const int id = static_cast<int>(out.runs.size());
    for (std::size_t t = run.start; t < run.end(); ++t) out.run_of[t] = id;
    out.runs.push_back(run);
    out.nu += 1;
    out.lambda += static_cast<long>(run.length());
  }
  return out;
}

RunPartition run_partition(const FlipSequence& seq, int rho, TieBreak tie_break) {
  return run_partition(seq.view(), rho, tie_break);
}

long mu(std::span<const Direction> seq) {
  long count = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (std::abs(seq[i + 1] - seq[i]) == 1) ++count;
  }
  return count;
}

FlipSequence brgc(int n) {
  if (n < 1 || n > kMaxSequenceDimension) {
    throw std::invalid_argument("brgc: n must be in [1, " +
                                std::to_string(kMaxSequenceDimension) + "]");
  }
  const std::size_t len = (std::size_t{1} << n) - 1;
  std::vector<Direction> flips(len);
  for (std::size_t i = 1; i <= len; ++i) flips[i - 1] = std::countr_zero(i) + 1;
  return FlipSequence(n, std::move(flips));
}

bool is_hamiltonian_path(std::span<const Direction> seq, int n) {
  if (n < 1 || n > kMaxSequenceDimension) return false;
  const std::size_t count = std::size_t{1} << n;
  if (seq.size() != count - 1) return false;
  std::vector<bool> seen(count, false);
  Mask v = 0;
  seen[0] = true;
  for (Direction i : seq) {
    if (i < 1 || i > n) return false;
    v ^= direction_bit(i);
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

CubePath longrun_base() {
  return CubePath{VertexSet::empty(4),
                  FlipSequence(4, {1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 3, 2, 1})};
}

// {1,3}, {3,5}, {2,6}, then the rest of C_k in its natural order.
std::vector<Mask> longrun_coefficients(int k) {
  const int n = 1 << k;
  const std::vector<Mask> head = {VertexSet::of(n, {1, 3}).bits(), VertexSet::of(n, {3, 5}).bits(),
                                  VertexSet::of(n, {2, 6}).bits()};
  std::vector<Mask> out = head;
  for (const auto& e : basis_C(k).elements) {
    if (std::find(head.begin(), head.end(), e.bits()) == head.end()) out.push_back(e.bits());
  }
  return out;
}

}  // namespace

CubePath longrun_path(int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("longrun_path: k must be in [2, 4]");
  if (k == 2) return longrun_base();

  const int n = 1 << k;
  const int d = n - k - 1;
  const auto coeff = longrun_coefficients(k);
  const FlipSequence order = brgc(d);

  // Cycle factor as adjacency lists; every vertex starts with its two ring neighbours.
  const std::size_t vertex_count = std::size_t{1} << n;
  std::vector<std::vector<Mask>> adj(vertex_count);
  auto toggle = [&](Mask p, Mask q) {
    for (auto [from, to] : {std::pair{p, q}, std::pair{q, p}}) {
      auto& list = adj[from];
      auto it = std::find(list.begin(), list.end(), to);
      if (it != list.end()) {
        list.erase(it);
      } else {
        list.push_back(to);
      }
    }
  };

  std::vector<Mask> xs{0};
  for (Direction s : order) xs.push_back(xs.back() ^ coeff[static_cast<std::size_t>(s - 1)]);
  for (Mask x : xs) {
    for (int j = 0; j < 2 * n; ++j) toggle(cycle_vertex(x, n, j), cycle_vertex(x, n, j + 1));
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Mask c = coeff[static_cast<std::size_t>(order[i] - 1)];
    const int a = std::countr_zero(c) + 1;
    const int b = 32 - std::countl_zero(c);
    for (const auto& e : cross_edge_set(xs[i], n, a, b, CrossKind::F).edges) toggle(e.u, e.v);
  }

  // Open the Hamiltonian cycle at the n-edge {{n}, {}} of C({}).
  const Mask last = direction_bit(n);
  toggle(0, last);
  std::vector<Direction> flips;
  flips.reserve(vertex_count - 1);
  Mask prev = 0;
  Mask cur = 0;
  if (adj[0].size() != 1) throw std::logic_error("longrun_path: symmetric difference is not a cycle");
  for (std::size_t step = 0; step + 1 < vertex_count; ++step) {
    const auto& nbrs = adj[cur];
    Mask next = nbrs[0];
    if (step > 0) {
      if (nbrs.size() != 2) throw std::logic_error("longrun_path: vertex of degree != 2");
      next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    }
    flips.push_back(edge_direction(cur, next));
    prev = cur;
    cur = next;
  }
  if (cur != last || !is_hamiltonian_path(flips, n)) {
    throw std::logic_error("longrun_path: symmetric difference is not a Hamiltonian cycle");
  }
  return CubePath{VertexSet::empty(n), FlipSequence(n, std::move(flips))};
}

CubePath product_path(int k, int m) {
  const int n = 1 << k;
  if (k < 2 || m < 0 || m >= n) throw std::invalid_argument("product_path: need k >= 2, 0 <= m < 2^k");
  if (n + m > kMaxSequenceDimension) {
    throw std::length_error("product_path: sequence for Q_" + std::to_string(n + m) + " too long");
  }
  CubePath base = longrun_path(k);
  if (m == 0) return base;

  const auto& fwd = base.flips.entries();
  const std::vector<Direction> rev(fwd.rbegin(), fwd.rend());
  const FlipSequence outer = brgc(m);
  std::vector<Direction> flips;
  flips.reserve((std::size_t{1} << (n + m)) - 1);
  for (std::size_t block = 0; block <= outer.size(); ++block) {
    const auto& part = block % 2 == 0 ? fwd : rev;
    flips.insert(flips.end(), part.begin(), part.end());
    if (block < outer.size()) flips.push_back(outer[block] + n);
  }
  return CubePath{VertexSet::empty(n + m), FlipSequence(n + m, std::move(flips))};
}

}  // namespace venn
