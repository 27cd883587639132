#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "curvetopo/geometry.hpp"

namespace curvetopo {

/// An oriented closed curve sampled as a polygon. The traversal order of the
/// vertices is the orientation; the closing segment runs from the last vertex
/// back to the first.
///
/// Points on the curve are addressed by a parameter t in [0, 1), the
/// normalized arc length measured from vertex 0.
class ClosedPolyline {
 public:
  /// Throws InvalidCurve when there are fewer than 3 vertices, a coordinate
  /// is not finite, or two consecutive vertices are within 1e-9 of the
  /// bounding-box diagonal of each other.
  explicit ClosedPolyline(std::vector<Point2> vertices);

  std::span<const Point2> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }

  /// Vertex i modulo size().
  Point2 vertex(std::size_t i) const { return vertices_[i % vertices_.size()]; }
  /// Segment i runs from vertex(i) to vertex(i + 1).
  Vec2 segment_vector(std::size_t i) const { return vertex(i + 1) - vertex(i); }
  double segment_length(std::size_t i) const { return seg_len_[i % vertices_.size()]; }

  double length() const { return length_; }
  /// Diagonal of the axis-aligned bounding box.
  double extent() const { return extent_; }

  /// Curve parameter of the point at fraction s along segment i.
  double param_at(std::size_t segment, double s) const;
  /// (segment, fraction) locating parameter t; t is reduced modulo 1.
  std::pair<std::size_t, double> locate(double t) const;
  Point2 point_at(double t) const;
  /// Unit direction of travel at t.
  Vec2 direction_at(double t) const;

  /// Same point set traversed backwards, still starting at vertex 0, so that
  /// point_at(t) on the result equals point_at(1 - t) on *this.
  ClosedPolyline reversed() const;

  /// Minimum distance from p to the curve.
  double distance_to(Point2 p) const;

 private:
  std::vector<Point2> vertices_;
  std::vector<double> seg_len_;
  std::vector<double> cumulative_;  // arc length at the start of each segment
  double length_ = 0.0;
  double extent_ = 0.0;
};

/// Wraps t into [0, 1).
double wrap_param(double t);

}  // namespace curvetopo
