#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "venn/doubling.hpp"
#include "venn/venn_builder.hpp"
#include "venn/verifier.hpp"

using namespace venn;

namespace {

// Pascal's triangle.
std::uint64_t binomial(int n, int r) {
  std::vector<std::uint64_t> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(i) + 1, 1);
    for (int j = 1; j < i; ++j) next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

// Q_n with a single ring C(x) and nothing else.
PlaneDualGraph ring_only(int n, Mask x) {
  PlaneDualGraph g(n);
  for (int j = 0; j < 2 * n; ++j) g.add_vertex(cycle_vertex(x, n, j));
  for (int j = 0; j < 2 * n; ++j) {
    g.set_rotation(cycle_vertex(x, n, j), {cycle_vertex(x, n, j + 1 == 2 * n ? 0 : j + 1), cycle_vertex(x, n, j == 0 ? 2 * n - 1 : j - 1)});
  }
  g.retrace();
  return g;
}

}  // namespace

TEST_CASE("builds pass every check") {
  for (int n = 8; n <= 12; ++n) {
    const auto r = verify(build_venn(n));
    CHECK(r.passed());
    CHECK(r.crossings >= *r.lower_bound);
    CHECK(r.expected_crossings == r.crossings);
  }
  const auto r16 = verify(build_venn(16));
  CHECK(r16.passed());
  CHECK(r16.crossings == 5118);
  CHECK(r16.check("curves")->passed);
}

TEST_CASE("missing vertex") {
  auto g = build_venn_dual(3).graph;
  PlaneDualGraph h(8);
  for (Mask v : g.vertices()) {
    if (v != 0b1) h.add_vertex(v);
  }
  const auto c = check_spanning(h);
  CHECK_FALSE(c.passed);
  CHECK(c.witness.find("{1}") != std::string::npos);
}

TEST_CASE("face multiset check") {
  PlaneDualGraph g(2);
  for (Mask v = 0; v < 4; ++v) g.add_vertex(v);
  g.set_rotation(0, {1, 2});
  g.set_rotation(1, {3, 0});
  g.set_rotation(3, {2, 1});
  g.set_rotation(2, {0, 3});
  g.retrace();
  CHECK(check_faces(g).passed);
  g.set_faces({Face{{0, 1, 0, 1, 0, 1}, {1, 2, 1, 2, 1, 2}}}, std::nullopt);
  CHECK_FALSE(check_faces(g).passed);
  CHECK_FALSE(check_darts(g).passed);
  CHECK_FALSE(check_retrace(g).passed);
}

TEST_CASE("the six-face passes the face check") {
  PlaneDualGraph g(4);
  // The 6-face (1,2,1,3,2,3) walked from the empty set.
  const std::vector<Direction> flips{1, 2, 1, 3, 2, 3};
  std::vector<Mask> walk{0};
  for (std::size_t i = 0; i + 1 < flips.size(); ++i) walk.push_back(walk.back() ^ direction_bit(flips[i]));
  for (Mask v : walk) g.add_vertex(v);
  for (std::size_t i = 0; i < walk.size(); ++i) {
    g.set_rotation(walk[i], {walk[(i + 1) % 6], walk[(i + 5) % 6]});
  }
  g.retrace();
  CHECK(check_faces(g).passed);
}

TEST_CASE("two disjoint rings fail the curve check") {
  PlaneDualGraph g(4);
  for (Mask x : {Mask{0}, Mask{0b0101}}) {
    for (int j = 0; j < 8; ++j) g.add_vertex(cycle_vertex(x, 4, j));
  }
  for (Mask x : {Mask{0}, Mask{0b0101}}) {
    for (int j = 0; j < 8; ++j) {
      g.set_rotation(cycle_vertex(x, 4, j), {cycle_vertex(x, 4, (j + 1) % 8), cycle_vertex(x, 4, (j + 7) % 8)});
    }
  }
  g.retrace();
  CHECK(check_spanning(g).passed);
  CHECK_FALSE(check_curves(g).passed);
  CHECK_FALSE(check_connected(g).passed);
  CHECK_FALSE(check_euler(g).passed);
  CHECK_FALSE(verify(g).passed());
}

TEST_CASE("curve cycles") {
  const auto g = build_venn_dual(3).graph;
  for (Direction j = 1; j <= 8; ++j) {
    const auto cyc = curve_cycle(g, j);
    REQUIRE(cyc);
    std::size_t jedges = 0;
    std::set<std::size_t> faces;
    for (const auto& e : g.edges()) jedges += e.direction == j ? 1 : 0;
    for (std::size_t f = 0; f < g.face_count(); ++f) {
      const auto& fl = g.faces()[f].flips;
      if (std::find(fl.begin(), fl.end(), j) != fl.end()) faces.insert(f);
    }
    CHECK(cyc->size() == jedges);
    CHECK(cyc->size() == faces.size());
    for (const auto& step : *cyc) CHECK(step.edge.direction == j);
  }
  const auto single = ring_only(3, 0);
  CHECK(single.face_count() == 2);
  CHECK(curve_cycle(single, 1)->size() == 2);
}

TEST_CASE("Euler failure carries the numbers") {
  auto g = ring_only(3, 0);
  g.set_faces({g.faces()[0]}, 0);
  const auto c = check_euler(g);
  CHECK_FALSE(c.passed);
  CHECK(c.witness.find("= 1") != std::string::npos);
}

TEST_CASE("lower bound") {
  CHECK(lower_bound(2) == 2);
  CHECK(lower_bound(8) == 37);
  CHECK(lower_bound(16) == 4369);
  const std::uint64_t table[] = {2, 3, 5, 8, 13, 21, 37, 64, 114, 205, 373, 683, 1261, 2341, 4369};
  for (int n = 2; n <= 16; ++n) CHECK(lower_bound(n) == table[n - 2]);
  for (int n = 2; n <= 40; ++n) {
    const auto num = (std::uint64_t{1} << n) - 2;
    const auto l = lower_bound(n);
    CHECK(l * static_cast<std::uint64_t>(n - 1) >= num);
    CHECK((l - 1) * static_cast<std::uint64_t>(n - 1) < num);
  }
  CHECK_THROWS(lower_bound(1));
}

TEST_CASE("expected crossings") {
  CHECK(expected_crossings(3, 0) == 40);
  CHECK(expected_crossings(4, 0) == 5118);
  CHECK(expected_crossings(3, 7) == 5120);
  for (int m = 0; m < 8; ++m) CHECK(expected_crossings(3, m) == (std::uint64_t{40} << m));
  // k >= 4: the formula evaluated in long double agrees once rounded.
  for (int k = 4; k <= 5; ++k) {
    const int n = 1 << k;
    for (int m = 0; m < (k == 4 ? 16 : 20); ++m) {
      const long double nn = n;
      const long double v = (1 + 33 / (8 * nn) - 2 / std::pow(2.0L, nn / 2) - 2 * nn / std::pow(2.0L, nn)) *
                            std::pow(2.0L, nn + m) / nn;
      CHECK(expected_crossings(k, m) == static_cast<std::uint64_t>(std::llround(v)));
    }
  }
  CHECK_THROWS_AS(expected_crossings(7, 0), std::overflow_error);
  CHECK_THROWS(expected_crossings(2, 0));
  CHECK_THROWS(expected_crossings(3, 8));
}

TEST_CASE("monotone reference") {
  CHECK(monotone_reference(1) == 0);
  CHECK(monotone_reference(8) == 70);
  CHECK(monotone_reference(16) == 12870);
  for (int n = 2; n <= 60; ++n) CHECK(monotone_reference(n) == binomial(n, n / 2));
}

TEST_CASE("report text") {
  const auto r = verify(build_venn_dual(3).graph);
  const auto text = to_text(r);
  CHECK(text.find("lower bound L_n = 37") != std::string::npos);
  CHECK(text.find("crossings = 40") != std::string::npos);
  CHECK(text.find("verified") != std::string::npos);
  CHECK(r.face_lengths.size() >= 2);
}
