#pragma once

#include <cstdint>
#include <vector>

#include "curvetopo/diagram.hpp"
#include "curvetopo/geometry.hpp"
#include "curvetopo/polyline.hpp"

namespace curvetopo {

/// Winding number of the curve around p from the total change of argument.
/// Throws PointOnCurve if p is within eps_pos of the curve and
/// NonIntegerWinding if the angle sum misses an integer by more than eps_int.
int wind_point(const ClosedPolyline& curve, Point2 p, const Tolerances& tol);

/// Winding number of the curve around p from signed crossings of a ray:
/// right-to-left crossings count +1, left-to-right crossings -1. When the ray
/// passes too close to a vertex or runs nearly parallel to a segment a fresh
/// direction is drawn; after 64 retries RayRetryExhausted is thrown.
int wind_point_ray(const ClosedPolyline& curve, Point2 p, Vec2 direction, const Tolerances& tol);

/// Alexander numbering: one integer per face, 0 on the unbounded face, and
/// the face left of every arc exceeds the face right of it by one.
struct RegionLabeling {
  std::vector<int> wind_by_face;

  int operator[](int face) const { return wind_by_face[face]; }
  std::int64_t sum() const;
};

RegionLabeling alexander_numbering(const Diagram& d);

/// wind(c) for every crossing: the label shared by two opposite corners.
struct CrossingWinds {
  std::vector<int> wind_by_crossing;

  int operator[](int crossing) const { return wind_by_crossing[crossing]; }
  std::int64_t sum() const;
};

CrossingWinds crossing_winds(const Diagram& d, const RegionLabeling& labels);

/// Labels of the four corner faces at a crossing, in the order of
/// Diagram::darts_around.
std::array<int, 4> corner_labels(const Diagram& d, const RegionLabeling& labels, int crossing);

/// Element of (1/2)Z stored as twice its value.
class HalfInteger {
 public:
  constexpr HalfInteger() = default;
  static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

  constexpr int twice() const { return twice_; }
  constexpr double value() const { return twice_ / 2.0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

  friend constexpr bool operator==(HalfInteger, HalfInteger) = default;

 private:
  constexpr explicit HalfInteger(int twice) : twice_(twice) {}
  int twice_ = 0;
};

/// Average of the labels on either side of edge e.
HalfInteger ind_on_edge(const Diagram& d, const RegionLabeling& labels, int edge);

/// Average of the labels of the two faces flanking the curve at t.
/// Throws OnCrossing when t is at a crossing.
HalfInteger ind_at(const Diagram& d, const RegionLabeling& labels, double t, const Tolerances& tol);

}  // namespace curvetopo
