#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "venn/gray_runs.hpp"

using namespace venn;

namespace {

// Reference: reflected code g(i) = i ^ (i >> 1); flip i+1 toggles one bit.
std::vector<Direction> gray_oracle(int n) {
  std::vector<Direction> out;
  for (Mask i = 1; i < (Mask{1} << n); ++i) {
    const Mask diff = (i ^ (i >> 1)) ^ ((i - 1) ^ ((i - 1) >> 1));
    out.push_back(std::countr_zero(diff) + 1);
  }
  return out;
}

// Reference run analysis by brute force: every maximal window of constant
// +-1 step with entries <= rho, each window losing its first entry when it
// starts where the previous window ends; uncovered entries <= rho are runs of
// their own.
std::pair<long, long> runs_oracle(const std::vector<Direction>& s, int rho) {
  const std::size_t len = s.size();
  auto is_window = [&](std::size_t i, std::size_t j) {
    if (j <= i || j >= len) return false;
    const int step = s[i + 1] - s[i];
    if (step != 1 && step != -1) return false;
    for (std::size_t t = i; t <= j; ++t) {
      if (s[t] > rho) return false;
      if (t > i && s[t] - s[t - 1] != step) return false;
    }
    return true;
  };
  std::vector<std::pair<std::size_t, std::size_t>> windows;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = i + 1; j < len; ++j) {
      if (!is_window(i, j)) continue;
      const bool left = i > 0 && is_window(i - 1, j);
      const bool right = is_window(i, j + 1);
      if (!left && !right) windows.emplace_back(i, j);
    }
  }
  long nu = 0;
  long lambda = 0;
  std::vector<bool> covered(len, false);
  for (std::size_t w = 0; w < windows.size(); ++w) {
    auto [i, j] = windows[w];
    for (std::size_t t = i; t <= j; ++t) covered[t] = true;
    if (w > 0 && windows[w - 1].second == i) ++i;
    ++nu;
    lambda += static_cast<long>(j - i);
  }
  for (std::size_t t = 0; t < len; ++t) {
    if (!covered[t] && s[t] <= rho) ++nu;
  }
  return {nu, lambda};
}

long count_at_most(const std::vector<Direction>& s, int rho) {
  return std::count_if(s.begin(), s.end(), [rho](Direction d) { return d <= rho; });
}

}  // namespace

TEST_CASE("run partition on worked sequences") {
  const std::vector<Direction> p{1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 3, 2, 1};
  const auto r = run_partition(p, 3);
  CHECK(r.nu == 6);
  CHECK(r.lambda == 8);

  const std::vector<Direction> q{3, 1, 2, 3, 2, 1, 2, 4, 3, 2, 4};
  const auto rq = run_partition(q, 3);
  CHECK(rq.nu == 5);
  CHECK(rq.lambda == 4);
  CHECK(static_cast<long>(q.size()) - rq.nu - rq.lambda == 2);

  const auto empty = run_partition(std::vector<Direction>{}, 3);
  CHECK(empty.nu == 0);
  CHECK(empty.lambda == 0);
}

TEST_CASE("run structure") {
  const std::vector<Direction> s{1, 2, 3, 2, 5, 1};
  const auto r = run_partition(s, 3);
  REQUIRE(r.runs.size() == 3);
  CHECK(r.runs[0].start == 0);
  CHECK(r.runs[0].count == 3);
  CHECK(r.runs[0].orientation == RunOrientation::Increasing);
  CHECK(r.runs[1].count == 1);
  CHECK(r.run_of[4] == -1);
  CHECK(r.same_run(0, 2));
  CHECK_FALSE(r.same_run(2, 3));
  CHECK_FALSE(r.same_run(4, 4));
}

TEST_CASE("random sequences: identity, oracle and tie-break invariance") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int rho = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    std::vector<Direction> s(rng() % 40);
    for (auto& d : s) d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto early = run_partition(s, rho, TieBreak::EarlierRun);
    const auto late = run_partition(s, rho, TieBreak::LaterRun);
    REQUIRE(early.covered() == count_at_most(s, rho));
    REQUIRE(late.nu == early.nu);
    REQUIRE(late.lambda == early.lambda);
    const auto [nu, lambda] = runs_oracle(s, rho);
    REQUIRE(early.nu == nu);
    REQUIRE(early.lambda == lambda);
  }
}

TEST_CASE("mu") {
  CHECK(mu(std::vector<Direction>{1, 2, 1}) == 2);
  CHECK(mu(std::vector<Direction>{1, 3, 1}) == 0);
  CHECK(mu(longrun_path(2).flips.view()) == 14);
}

TEST_CASE("reflected Gray code") {
  CHECK(brgc(2).entries() == std::vector<Direction>{1, 2, 1});
  CHECK(brgc(4).entries() == std::vector<Direction>{1, 2, 1, 3, 1, 2, 1, 4, 1, 2, 1, 3, 1, 2, 1});
  for (int n = 1; n <= 12; ++n) {
    CHECK(brgc(n).entries() == gray_oracle(n));
    CHECK(is_hamiltonian_path(brgc(n).view(), n));
  }
  CHECK_FALSE(is_hamiltonian_path(std::vector<Direction>{1, 1, 1}, 2));
}

TEST_CASE("long-run paths") {
  CHECK(longrun_path(2).flips.entries() == std::vector<Direction>{1, 2, 3, 2, 1, 2, 3, 4, 3, 2, 1, 2, 3, 2, 1});
  const struct {
    int k;
    long nu;
    long lambda;
  } expected[] = {{2, 6, 8}, {3, 64, 160}, {4, 8700, 52740}};
  for (const auto& e : expected) {
    const int n = 1 << e.k;
    const auto p = longrun_path(e.k);
    CHECK(p.start == VertexSet::empty(n));
    CHECK(is_hamiltonian_path(p.flips.view(), n));
    const auto r = run_partition(p.flips, n - 1);
    CHECK(r.nu == e.nu);
    CHECK(r.lambda == e.lambda);
    CHECK(mu(p.flips.view()) >= r.lambda);
    // Closed forms 17/8 2^n/n - 4 and 2^n - 25/8 2^n/n + 4 (exact for k >= 3).
    if (e.k >= 3) {
      const long q = (1L << n) / n;
      CHECK(r.nu == 17 * q / 8 - 4);
      CHECK(r.lambda == (1L << n) - 25 * q / 8 + 4);
      CHECK(r.nu >= q);
    }
  }
}

TEST_CASE("product paths scale the run counts") {
  CHECK(product_path(2, 0).flips == longrun_path(2).flips);
  const auto p = product_path(2, 1);
  CHECK(run_partition(p.flips, 3).nu == 12);
  CHECK(run_partition(p.flips, 3).lambda == 16);
  for (int m = 1; m <= 3; ++m) {
    const auto q = product_path(3, m);
    CHECK(is_hamiltonian_path(q.flips.view(), 8 + m));
    const auto r = run_partition(q.flips, 7);
    CHECK(r.nu == 64L << m);
    CHECK(r.lambda == 160L << m);
    CHECK(mu(q.flips.view()) >= r.lambda);
  }
}
