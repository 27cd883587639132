#pragma once

#include <string>

#include "curvetopo/diagram.hpp"
#include "curvetopo/winding.hpp"

namespace curvetopo {

struct SvgOptions {
  double width = 800.0;
  double margin = 40.0;
};

/// Annotated drawing of a diagram with geometry: the curve with direction
/// arrows, one label per region (its Alexander number), one marker per
/// crossing labelled with its wind, and the base point.
///
/// Curve coordinates are y-up; the drawing flips y so the picture has the
/// same handedness as the mathematical plane.
std::string render_svg(const Diagram& d, const RegionLabeling& labels, const CrossingWinds& winds,
                       double basepoint_t, const Tolerances& tol, const SvgOptions& options = {});

}  // namespace curvetopo
