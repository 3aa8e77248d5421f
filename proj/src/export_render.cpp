#include "venn/export_render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace venn {

using nlohmann::json;

namespace {

json edge_json(const CubeEdge& e) { return {{"u", e.u}, {"v", e.v}, {"direction", e.direction}}; }

const char* orientation_name(RunOrientation o) {
  return o == RunOrientation::Increasing ? "increasing" : "decreasing";
}

struct Point {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

class ConcentricPlacement {
 public:
  explicit ConcentricPlacement(const PlaneDualGraph& g) : g_(g) {
    if (!g.layout()) throw FormatError("no concentric layout");
    for (const auto& h : *g.layout()) rings_ = std::max(rings_, h.ring + 1);
    spacing_ = rings_ > 64 ? 4.0 : 24.0;
    outer_ = spacing_ * (rings_ + 1);
  }

  double extent() const { return outer_ + 3 * spacing_; }
  double spacing() const { return spacing_; }
  int rings() const { return rings_; }
  double radius(int ring) const { return spacing_ * (rings_ - ring); }

  Point at(Mask v) const {
    const auto& h = (*g_.layout())[g_.index_of(v)];
    const double angle = 2 * std::numbers::pi * h.position / (2.0 * g_.dimension());
    const double r = radius(h.ring);
    return {r * std::cos(angle), -r * std::sin(angle)};
  }

 private:
  const PlaneDualGraph& g_;
  int rings_ = 0;
  double spacing_ = 24.0;
  double outer_ = 0;
};

std::string svg_open(double extent) {
  const std::string e = num(extent);
  const std::string w = num(2 * extent);
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"-" + e +
         " -" + e + " " + w + " " + w + "\" width=\"" + w + "\" height=\"" + w + "\">\n";
}

std::string curve_colour(int j, int n) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "hsl(%d,75%%,45%%)", (360 * (j - 1)) / n);
  return buf;
}

}  // namespace

json to_json(const PlaneDualGraph& g) {
  json doc;
  doc["n"] = g.dimension();
  if (const auto& c = g.construction()) doc["construction"] = {{"k", c->k}, {"m", c->m}};
  else doc["construction"] = nullptr;
  doc["vertices"] = g.vertices();

  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(e));
  doc["edges"] = std::move(edges);

  json rotation = json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) rotation.push_back(g.rotation_at(i));
  doc["rotation"] = std::move(rotation);

  json faces = json::array();
  for (const auto& f : g.faces()) faces.push_back({{"vertices", f.walk}, {"flips", f.flips}});
  doc["faces"] = std::move(faces);
  doc["outer_face"] = g.outer_face() ? json(*g.outer_face()) : json(nullptr);
  doc["outer_dart"] = g.outer_dart() ? json::array({g.outer_dart()->from, g.outer_dart()->to}) : json(nullptr);
  doc["crossings"] = crossing_count(g);

  if (const auto& layout = g.layout()) {
    json hints = json::array();
    for (const auto& h : *layout) hints.push_back({{"ring", h.ring}, {"position", h.position}});
    doc["layout_hint"] = std::move(hints);
  } else {
    doc["layout_hint"] = nullptr;
  }
  return doc;
}

json to_json(const BuildTrace& t) {
  json coeffs = json::array();
  for (const auto& c : t.coefficients) coeffs.push_back(c.elements());
  json runs = json::array();
  for (const auto& r : t.runs.runs) {
    runs.push_back({{"start", r.start}, {"count", r.count}, {"orientation", orientation_name(r.orientation)}});
  }
  json steps = json::array();
  for (const auto& s : t.steps) {
    json added = json::array();
    for (const auto& e : s.added) added.push_back(edge_json(e));
    steps.push_back({{"s", s.s},
                     {"kind", to_string(s.kind)},
                     {"a", s.a},
                     {"b", s.b},
                     {"added", std::move(added)},
                     {"removed", s.removed ? edge_json(*s.removed) : json(nullptr)}});
  }
  return {{"k", t.k},
          {"n", t.n},
          {"d", t.d},
          {"rho", t.rho},
          {"coefficients", std::move(coeffs)},
          {"ring_order", t.ring_order},
          {"runs", {{"nu", t.runs.nu}, {"lambda", t.runs.lambda}, {"runs", std::move(runs)}}},
          {"ring_base", t.ring_base},
          {"steps", std::move(steps)},
          {"intermediate_faces", t.intermediate_faces},
          {"expected_faces", t.expected_faces}};
}

json to_json(const VerificationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json item = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) item["witness"] = c.witness;
    checks.push_back(std::move(item));
  }
  json lengths = json::object();
  for (const auto& [len, count] : r.face_lengths) lengths[std::to_string(len)] = count;
  return {{"passed", r.passed()},
          {"n", r.n},
          {"vertices", r.vertices},
          {"edges", r.edges},
          {"crossings", r.crossings},
          {"lower_bound", r.lower_bound ? json(*r.lower_bound) : json(nullptr)},
          {"expected_crossings", r.expected_crossings ? json(*r.expected_crossings) : json(nullptr)},
          {"monotone_reference", r.monotone_reference},
          {"face_lengths", std::move(lengths)},
          {"checks", std::move(checks)}};
}

PlaneDualGraph from_json(const json& doc) {
  try {
    const int n = doc.at("n").get<int>();
    if (n < 1 || n > 30) throw FormatError("n out of range");
    PlaneDualGraph g(n);
    const auto vertices = doc.at("vertices").get<std::vector<Mask>>();
    for (Mask v : vertices) g.add_vertex(v);

    const auto& rotation = doc.at("rotation");
    if (!rotation.is_array() || rotation.size() != vertices.size()) throw FormatError("rotation size mismatch");
    for (std::size_t i = 0; i < vertices.size(); ++i) g.set_rotation(vertices[i], rotation[i].get<std::vector<Mask>>());

    std::vector<CubeEdge> listed;
    for (const auto& e : doc.at("edges")) {
      listed.push_back({e.at("u").get<Mask>(), e.at("v").get<Mask>(), e.at("direction").get<int>()});
    }
    std::sort(listed.begin(), listed.end(),
              [](const CubeEdge& a, const CubeEdge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
    const auto derived = g.edges();
    const bool same = listed.size() == derived.size() &&
                      std::equal(listed.begin(), listed.end(), derived.begin(), [](const CubeEdge& a, const CubeEdge& b) {
                        return a.u == b.u && a.v == b.v && a.direction == b.direction;
                      });
    if (!same) throw FormatError("edge list disagrees with rotation");

    std::vector<Face> faces;
    for (const auto& f : doc.at("faces")) {
      faces.push_back({f.at("vertices").get<std::vector<Mask>>(), f.at("flips").get<std::vector<Direction>>()});
    }
    std::optional<std::size_t> outer;
    if (doc.contains("outer_face") && !doc["outer_face"].is_null()) outer = doc["outer_face"].get<std::size_t>();
    g.set_faces(std::move(faces), outer);
    if (doc.contains("outer_dart") && !doc["outer_dart"].is_null()) {
      g.set_outer_dart({doc["outer_dart"].at(0).get<Mask>(), doc["outer_dart"].at(1).get<Mask>()});
    }

    if (doc.contains("construction") && !doc["construction"].is_null()) {
      g.set_construction({doc["construction"].at("k").get<int>(), doc["construction"].at("m").get<int>()});
    }
    if (doc.contains("layout_hint") && !doc["layout_hint"].is_null()) {
      std::vector<LayoutHint> hints;
      for (const auto& h : doc["layout_hint"]) hints.push_back({h.at("ring").get<int>(), h.at("position").get<int>()});
      g.set_layout(std::move(hints));
    }
    if (doc.contains("crossings") && doc["crossings"].get<std::size_t>() != g.face_count()) {
      throw FormatError("crossings field disagrees with face list");
    }
    return g;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  } catch (const std::out_of_range& e) {
    throw FormatError(std::string("malformed document: ") + e.what());
  }
}

std::string to_dot(const PlaneDualGraph& g) {
  std::ostringstream out;
  out << "graph venn_dual {\n  node [shape=circle, fontsize=8];\n";
  for (Mask v : g.vertices()) out << "  v" << v << " [label=\"" << VertexSet(g.dimension(), v).to_string() << "\"];\n";
  for (const auto& e : g.edges()) out << "  v" << e.u << " -- v" << e.v << " [label=\"" << e.direction << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string render_dual_svg(const PlaneDualGraph& g) {
  const ConcentricPlacement place(g);
  const double dot = std::max(1.0, place.spacing() / 6);
  std::ostringstream out;
  out << svg_open(place.extent());
  out << "<g fill=\"none\" stroke=\"#ccc\" stroke-width=\"0.5\">\n";
  for (int r = 0; r < place.rings(); ++r) out << "<circle cx=\"0\" cy=\"0\" r=\"" << num(place.radius(r)) << "\"/>\n";
  out << "</g>\n<g stroke=\"#222\" stroke-width=\"" << num(dot / 2) << "\">\n";
  for (const auto& e : g.edges()) {
    const Point a = place.at(e.u);
    const Point b = place.at(e.v);
    out << "<path d=\"M" << num(a.x) << " " << num(a.y) << " L" << num(b.x) << " " << num(b.y) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#222\">\n";
  for (Mask v : g.vertices()) {
    const Point p = place.at(v);
    out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(dot) << "\"/>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::string render_primal_svg(const PlaneDualGraph& g) {
  const ConcentricPlacement place(g);
  if (!verify(g).passed()) throw FormatError("verification not passed");

  // Bubble at the centroid of each face; the outer bubble sits beyond the outermost ring.
  std::vector<Point> bubble(g.face_count());
  for (std::size_t f = 0; f < g.face_count(); ++f) {
    Point c;
    for (Mask v : g.faces()[f].walk) {
      const Point p = place.at(v);
      c.x += p.x;
      c.y += p.y;
    }
    const double len = static_cast<double>(g.faces()[f].length());
    bubble[f] = {c.x / len, c.y / len};
  }
  if (auto outer = g.outer_face()) bubble[*outer] = {0, -(place.extent() - place.spacing())};

  const double dot = std::max(1.5, place.spacing() / 5);
  std::ostringstream out;
  out << svg_open(place.extent());
  out << "<g fill=\"none\" stroke-width=\"" << num(dot / 2) << "\">\n";
  for (Direction j = 1; j <= g.dimension(); ++j) {
    const auto cycle = curve_cycle(g, j);
    out << "<polyline stroke=\"" << curve_colour(j, g.dimension()) << "\" points=\"";
    for (const auto& step : *cycle) {
      const Point a = place.at(step.edge.u);
      const Point b = place.at(step.edge.v);
      out << num(bubble[step.face].x) << "," << num(bubble[step.face].y) << " " << num((a.x + b.x) / 2) << ","
          << num((a.y + b.y) / 2) << " ";
    }
    const auto& first = bubble[cycle->front().face];
    out << num(first.x) << "," << num(first.y) << "\"/>\n";
  }
  out << "</g>\n<g fill=\"#000\">\n";
  for (const auto& p : bubble) out << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"" << num(dot) << "\"/>\n";
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace venn
