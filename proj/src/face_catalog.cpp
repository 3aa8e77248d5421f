#include "venn/face_catalog.hpp"

#include <algorithm>

namespace venn {

namespace {

void append_up(std::vector<Direction>& out, int lo, int hi) {
  for (int i = lo; i <= hi; ++i) out.push_back(i);
}

void append_down(std::vector<Direction>& out, int hi, int lo) {
  for (int i = hi; i >= lo; --i) out.push_back(i);
}

// Tail of the decreasing glue: the part of the lower 6-faces that replaces the
// removed ring edge, starting at the lowest face c.
void append_detour(std::vector<Direction>& out, int c, int l) {
  if (l == 1) {
    out.insert(out.end(), {c, c + 1, c, c + 2, c + 1});
    return;
  }
  out.insert(out.end(), {c, c + 1});
  append_detour(out, c - 2, l - 1);
  out.insert(out.end(), {c + 2, c + 1});
}

std::string param(const char* name, int a) { return std::string(name) + "(a=" + std::to_string(a) + ")"; }

std::optional<std::string> classify_colorful(std::span<const Direction> flips) {
  const int top = *std::max_element(flips.begin(), flips.end());
  const std::size_t len = flips.size();
  if (len != 2 * static_cast<std::size_t>(top)) return std::nullopt;
  std::vector<std::size_t> at;
  for (std::size_t i = 0; i < len; ++i) {
    if (flips[i] == top) at.push_back(i);
  }
  if (at.size() != 2 || at[1] - at[0] != static_cast<std::size_t>(top)) return std::nullopt;
  for (std::size_t h = 0; h < 2; ++h) {
    Mask seen = 0;
    for (std::size_t i = 1; i < static_cast<std::size_t>(top); ++i) {
      const Direction d = flips[(at[h] + i) % len];
      if (d < 1 || d >= top || (seen & direction_bit(d))) return std::nullopt;
      seen |= direction_bit(d);
    }
  }
  return "colorful(t=" + std::to_string(top) + ")";
}

}  // namespace

std::vector<Direction> canonical_cyclic(std::span<const Direction> seq) {
  std::vector<Direction> best(seq.begin(), seq.end());
  const std::size_t len = seq.size();
  std::vector<Direction> cand(len);
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (std::size_t r = 0; r < len; ++r) {
      for (std::size_t i = 0; i < len; ++i) {
        cand[i] = reflect ? seq[(r + len - i) % len] : seq[(r + i) % len];
      }
      if (cand < best) best = cand;
    }
  }
  return best;
}

std::vector<Direction> FaceCatalog::merged_up(int a, int l) {
  std::vector<Direction> out{a, a + 1, a};
  for (int j = 1; j < l; ++j) out.insert(out.end(), {a + 2 * j + 1, a + 2 * j});
  out.push_back(a + 2 * l);
  for (int j = l; j >= 1; --j) out.insert(out.end(), {a + 2 * j - 1, a + 2 * j});
  return out;
}

std::vector<Direction> FaceCatalog::merged_down(int a, int l) {
  const int t = a + 2 * (l - 1);
  std::vector<Direction> out{t + 1, t + 2, t, t + 1};
  if (l == 1) {
    out.push_back(t);
  } else {
    append_detour(out, t - 2, l - 1);
  }
  out.push_back(t + 2);
  return out;
}

FaceCatalog::FaceCatalog(int n) : n_(n) {
  if (n < 4) throw std::invalid_argument("FaceCatalog: n must be at least 4");
  auto add = [&](const std::vector<Direction>& seq, std::string name) {
    templates_.emplace(canonical_cyclic(seq), std::move(name));
  };

  std::vector<Direction> ring;
  append_up(ring, 1, n);
  append_up(ring, 1, n);
  add(ring, "ring");

  for (int a = 1; a <= n - 1; ++a) {
    for (int b = a + 1; b <= n - 1; ++b) {
      const std::string ab = "(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ")";
      std::vector<Direction> s;
      append_up(s, a, b - 1);
      s.insert(s.end(), {a, b});
      append_down(s, b - 1, a + 1);
      s.push_back(b);
      add(s, "e_short" + ab);

      std::vector<Direction> t;
      append_up(t, b, n);
      append_up(t, 1, a - 1);
      t.insert(t.end(), {b, a});
      append_down(t, a - 1, 1);
      append_down(t, n, b + 1);
      t.push_back(a);
      add(t, "e_long" + ab);
    }
  }

  for (int a = 1; a + 2 <= n - 1; ++a) {
    std::vector<Direction> g1;
    append_up(g1, a + 2, n);
    append_up(g1, 1, a - 1);
    g1.push_back(a + 1);
    append_down(g1, a + 2, 1);
    append_down(g1, n, a + 3);
    g1.push_back(a);
    add(g1, param("six_long_1", a));

    std::vector<Direction> g2;
    append_up(g2, a, n);
    append_up(g2, 1, a - 1);
    g2.push_back(a + 2);
    append_down(g2, a, 1);
    append_down(g2, n, a + 3);
    g2.push_back(a + 1);
    add(g2, param("six_long_2", a));
  }

  for (int a = 1; a + 2 <= n - 1; ++a) {
    for (int l = 1; a + 2 * l <= n - 1; ++l) {
      const std::string tag = "(a=" + std::to_string(a) + ",l=" + std::to_string(l) + ")";
      add(merged_up(a, l), l == 1 ? param("six", a) : "merged_up" + tag);
      add(merged_down(a, l), l == 1 ? param("six", a) : "merged_down" + tag);
    }
  }
}

std::optional<std::string> FaceCatalog::classify(std::span<const Direction> flips) const {
  if (flips.empty()) return std::nullopt;
  if (*std::max_element(flips.begin(), flips.end()) > n_) return classify_colorful(flips);
  auto it = templates_.find(canonical_cyclic(flips));
  if (it == templates_.end()) return std::nullopt;
  return it->second;
}

std::optional<CatalogMismatch> find_uncatalogued_face(const std::vector<Face>& faces,
                                                      const FaceCatalog& catalog) {
  for (std::size_t f = 0; f < faces.size(); ++f) {
    if (!catalog.classify(faces[f].flips)) return CatalogMismatch{f, faces[f].flips};
  }
  return std::nullopt;
}

}  // namespace venn
