#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "venn/doubling.hpp"
#include "venn/venn_builder.hpp"
#include "venn/verifier.hpp"

using namespace venn;

TEST_CASE("colorful face of the concentric build") {
  const auto g = build_venn_dual(3).graph;
  const auto c = find_colorful_face(g);
  REQUIRE(c);
  CHECK(c->face == *g.outer_face());
  CHECK(c->x == 0);
  CHECK(c->x_bar == 0xFF);
}

TEST_CASE("short faces are not colorful") {
  auto g = build_venn_dual(4).graph;
  std::size_t six = 0;
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    if (g.faces()[f].length() == 6) {
      six = f;
      break;
    }
  }
  g.set_faces(g.faces(), six);
  const auto c = find_colorful_face(g);
  REQUIRE(c);
  CHECK(c->face != six);
  CHECK(g.faces()[c->face].length() == 32);
}

TEST_CASE("doubling doubles the faces") {
  auto g = build_venn_dual(3).graph;
  for (int m = 1; m <= 7; ++m) {
    const auto next = double_diagram(g);
    CHECK(next.dimension() == g.dimension() + 1);
    CHECK(next.vertex_count() == 2 * g.vertex_count());
    CHECK(next.edge_count() == 2 * g.edge_count() + 2);
    CHECK(next.face_count() == 2 * g.face_count());
    CHECK(next.face_count() == (std::size_t{40} << m));
    CHECK(next.construction() == Construction{3, m});

    const auto c = find_colorful_face(next);
    REQUIRE(c);
    CHECK(c->face == *next.outer_face());
    const auto& outer = next.faces()[c->face];
    const std::set<Mask> on(outer.walk.begin(), outer.walk.end());
    const Mask top = direction_bit(next.dimension());
    CHECK(on.contains(0));
    CHECK(on.contains(top));
    CHECK(on.contains(full_mask(next.dimension())));
    g = next;
  }
}

TEST_CASE("new faces split into two permutations around the new direction") {
  const auto g = double_diagram(build_venn_dual(3).graph);
  std::size_t found = 0;
  for (const auto& f : g.faces()) {
    const auto at = std::find(f.flips.begin(), f.flips.end(), 9);
    if (at == f.flips.end()) continue;
    ++found;
    REQUIRE(f.length() == 18);
    const auto i = static_cast<std::size_t>(at - f.flips.begin());
    CHECK(f.flips[(i + 9) % 18] == 9);
    for (std::size_t h : {i, i + 9}) {
      std::set<Direction> half;
      for (std::size_t j = 1; j < 9; ++j) half.insert(f.flips[(h + j) % 18]);
      CHECK(half == std::set<Direction>{1, 2, 3, 4, 5, 6, 7, 8});
    }
  }
  CHECK(found == 2);
}

TEST_CASE("doubled diagrams verify") {
  auto g = build_venn_dual(3).graph;
  for (int m = 1; m <= 3; ++m) {
    g = double_diagram(g);
    CHECK(verify(g).passed());
  }
}

TEST_CASE("build_venn picks the base power of two") {
  CHECK(base_exponent(8) == 3);
  CHECK(base_exponent(15) == 3);
  CHECK(base_exponent(16) == 4);
  CHECK(build_venn(10).face_count() == 160);
  CHECK(build_venn(13).face_count() == 1280);
  CHECK(build_venn(16).face_count() == 5118);
  CHECK_THROWS_AS(build_venn(7), std::invalid_argument);
  CHECK_THROWS_AS(build_venn(17), std::length_error);
}

TEST_CASE("graphs without a colorful face are rejected") {
  PlaneDualGraph g(2);
  for (Mask v : {0u, 1u}) g.add_vertex(v);
  g.set_rotation(0, {1});
  g.set_rotation(1, {0});
  g.retrace();
  CHECK_FALSE(find_colorful_face(g));
  CHECK_THROWS_AS(double_diagram(g), NoColorfulFace);
}
