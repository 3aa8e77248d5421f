#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "venn/face_catalog.hpp"

using namespace venn;

TEST_CASE("canonical form is invariant under rotation and reflection") {
  const std::vector<Direction> s{3, 4, 3, 5, 4, 5};
  const auto c = canonical_cyclic(s);
  CHECK(c == std::vector<Direction>{3, 4, 3, 5, 4, 5});
  CHECK(canonical_cyclic(std::vector<Direction>{5, 4, 5, 3, 4, 3}) == c);
  CHECK(canonical_cyclic(std::vector<Direction>{4, 5, 3, 4, 3, 5}) == c);
  CHECK(canonical_cyclic(std::vector<Direction>{3, 5, 4, 5, 4, 3}) != std::vector<Direction>{3, 5, 4, 5, 4, 3});
}

TEST_CASE("six-face and ring templates") {
  const FaceCatalog cat(8);
  CHECK(cat.classify(std::vector<Direction>{3, 4, 3, 5, 4, 5}));
  CHECK(cat.classify(std::vector<Direction>{4, 5, 3, 4, 3, 5}));
  CHECK(cat.classify(std::vector<Direction>{1, 2, 3, 4, 5, 6, 7, 8, 1, 2, 3, 4, 5, 6, 7, 8}));
  CHECK_FALSE(cat.classify(std::vector<Direction>{1, 2, 1, 2}));
  CHECK_FALSE(cat.classify(std::vector<Direction>{}));
}

TEST_CASE("merged faces") {
  CHECK(FaceCatalog::merged_up(1, 1) == std::vector<Direction>{1, 2, 1, 3, 2, 3});
  for (int l = 1; l <= 3; ++l) {
    CHECK(FaceCatalog::merged_up(1, l).size() == static_cast<std::size_t>(4 * l + 2));
    CHECK(FaceCatalog::merged_down(1, l).size() == static_cast<std::size_t>(4 * l + 2));
    // Each of the 2l + 1 directions a..a+2l appears exactly twice.
    for (const auto& seq : {FaceCatalog::merged_up(1, l), FaceCatalog::merged_down(1, l)}) {
      for (int d = 1; d <= 1 + 2 * l; ++d) CHECK(std::count(seq.begin(), seq.end(), d) == 2);
    }
  }
  CHECK(canonical_cyclic(FaceCatalog::merged_down(1, 1)) == canonical_cyclic(FaceCatalog::merged_up(1, 1)));
}

TEST_CASE("e templates") {
  const FaceCatalog cat(8);
  // e_short(a=2, b=5): (2,3,4, 2,5, 4,3, 5)
  CHECK(cat.classify(std::vector<Direction>{2, 3, 4, 2, 5, 4, 3, 5}));
  // e_long(a=2, b=5): (5,6,7,8, 1, 5,2, 1, 8,7,6, 2)
  CHECK(cat.classify(std::vector<Direction>{5, 6, 7, 8, 1, 5, 2, 1, 8, 7, 6, 2}));
}

TEST_CASE("colorful faces above the base dimension") {
  const FaceCatalog cat(8);
  // Two 9-flips at distance 9, each half a permutation of [8].
  std::vector<Direction> f{9, 1, 2, 3, 4, 5, 6, 7, 8, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  CHECK(cat.classify(f));
  f[2] = 1;
  CHECK_FALSE(cat.classify(f));
  CHECK_FALSE(cat.classify(std::vector<Direction>{9, 1, 9, 1}));
  CHECK_THROWS(FaceCatalog(2));
}

TEST_CASE("uncatalogued face is reported") {
  const FaceCatalog cat(8);
  std::vector<Face> faces(2);
  faces[0].flips = {3, 4, 3, 5, 4, 5};
  faces[1].flips = {1, 2, 1, 2};
  const auto bad = find_uncatalogued_face(faces, cat);
  REQUIRE(bad);
  CHECK(bad->face == 1);
  faces.pop_back();
  CHECK_FALSE(find_uncatalogued_face(faces, cat));
}
