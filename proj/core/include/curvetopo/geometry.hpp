#pragma once

#include <cmath>
#include <optional>

namespace curvetopo {

struct Vec2 {
  double x{};
  double y{};

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
  friend constexpr Vec2 operator*(double k, Vec2 a) { return {k * a.x, k * a.y}; }
  friend constexpr Vec2 operator*(Vec2 a, double k) { return {k * a.x, k * a.y}; }
  friend constexpr bool operator==(Vec2, Vec2) = default;
};

struct Point2 {
  double x{};
  double y{};

  friend constexpr Vec2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Point2 operator+(Point2 p, Vec2 v) { return {p.x + v.x, p.y + v.y}; }
  friend constexpr Point2 operator-(Point2 p, Vec2 v) { return {p.x - v.x, p.y - v.y}; }
  friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline bool is_finite(Point2 p) { return std::isfinite(p.x) && std::isfinite(p.y); }

/// Rotates `v` by +90 degrees.
constexpr Vec2 perp(Vec2 v) { return {-v.y, v.x}; }

/// Numeric thresholds used by every predicate.
///
/// eps_pos is an absolute distance. The defaults returned by for_extent()
/// scale it with the size of the input so that the same curve behaves the
/// same way at any magnification.
struct Tolerances {
  double eps_pos = 1e-9;
  double eps_angle = 1e-6;
  double eps_int = 1e-6;

  /// eps_pos = 1e-9 * extent (the bounding-box diagonal), other fields default.
  static Tolerances for_extent(double extent);

  /// Throws InvalidTolerances unless every field is finite and nonnegative
  /// and eps_int < 0.5.
  void validate() const;
};

/// Sign of the signed area of triangle pqr: +1 when r lies strictly left of
/// the directed line p->q. Returns 0 when r is within eps_pos of that line.
int orient(Point2 p, Point2 q, Point2 r, double eps_pos = 0.0);

/// Counterclockwise angle rotating u onto v, in (-pi, pi].
/// Throws ZeroVector if either vector is shorter than eps_pos.
double signed_angle(Vec2 u, Vec2 v, double eps_pos = 0.0);

struct SegmentHit {
  Point2 point;
  double s{};      ///< position along the first segment, in (0, 1)
  double t{};      ///< position along the second segment, in (0, 1)
  double angle{};  ///< unsigned angle between the segment directions, in (0, pi)
};

/// Proper interior-interior intersection of segments a1a2 and b1b2.
/// Disjoint, endpoint-touching, parallel and collinear configurations all
/// return nullopt.
std::optional<SegmentHit> segment_intersection(Point2 a1, Point2 a2, Point2 b1, Point2 b2);

double point_segment_distance(Point2 p, Point2 a, Point2 b);

/// Minimum distance between two closed segments.
double segment_segment_distance(Point2 a1, Point2 a2, Point2 b1, Point2 b2);

}  // namespace curvetopo
