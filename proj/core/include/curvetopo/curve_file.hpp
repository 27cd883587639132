#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curvetopo/curvegen.hpp"
#include "curvetopo/polyline.hpp"

namespace curvetopo {

/// Curve interchange file. JSON object holding exactly one of
///   "points":  [[x, y], ...]                   closed implicitly
///   "fourier": {order, a, b, c, d, samples}
/// plus an optional "name".
struct CurveFile {
  std::optional<std::string> name;
  std::variant<std::vector<Point2>, FourierSpec> geometry;

  /// Decodes to a polyline; throws InvalidCurve when the result is invalid.
  ClosedPolyline to_polyline() const;

  static CurveFile from_points(const ClosedPolyline& curve, std::optional<std::string> name = {});
};

/// Throws ParseError on malformed JSON or a schema mismatch.
CurveFile parse_curve_file(std::string_view json_text);
std::string write_curve_file(const CurveFile& file);

CurveFile read_curve_file(const std::string& path);

}  // namespace curvetopo
