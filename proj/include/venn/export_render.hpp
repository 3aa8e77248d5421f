#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "venn/plane_graph.hpp"
#include "venn/venn_builder.hpp"
#include "venn/verifier.hpp"

namespace venn {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Document with n, construction, vertices, edges, rotation, faces,
/// outer_face, outer_dart, crossings and layout_hint. Vertices are bitmasks.
nlohmann::json to_json(const PlaneDualGraph& g);
nlohmann::json to_json(const BuildTrace& trace);
nlohmann::json to_json(const VerificationReport& report);

/// Inverse of to_json(PlaneDualGraph). Faces are taken as stored, not retraced.
/// Throws FormatError on malformed documents.
PlaneDualGraph from_json(const nlohmann::json& doc);

/// Undirected DOT graph labelled by edge direction.
std::string to_dot(const PlaneDualGraph& g);

/// Rings as concentric circles, ring i at radius proportional to (ring count - i).
/// Throws FormatError("no concentric layout") without layout hints.
std::string render_dual_svg(const PlaneDualGraph& g);

/// Schematic primal drawing: one bubble per face and one closed polyline per
/// curve. Throws FormatError when the graph does not verify.
std::string render_primal_svg(const PlaneDualGraph& g);

}  // namespace venn
