#pragma once

#include <string>

#include "spg/diagram.hpp"

namespace spg {

struct RenderOptions {
  double size = 480.0;  ///< width and height of the SVG canvas
  double gap = 9.0;     ///< how far under-strands stop short of a crossing
};

/// Straight-line drawing: every arc is subdivided twice, the largest face is
/// pinned to a regular polygon and the rest solved as a barycentric (Tutte)
/// embedding. Arcs are <polyline class="arc" data-arc data-from data-to>, nodes
/// are <circle class="vertex|crossing" data-node>. Under-strands stop short of
/// their crossing. Throws std::invalid_argument for an invalid diagram.
std::string render_svg(const Diagram& d, const RenderOptions& options = {});

}  // namespace spg
