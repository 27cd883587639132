#include "curvetopo/geometry.hpp"

#include <algorithm>
#include <numbers>

#include "curvetopo/errors.hpp"

namespace curvetopo {

Tolerances Tolerances::for_extent(double extent) {
  Tolerances tol;
  tol.eps_pos = 1e-9 * extent;
  return tol;
}

void Tolerances::validate() const {
  auto ok = [](double v) { return std::isfinite(v) && v >= 0.0; };
  if (!ok(eps_pos) || !ok(eps_angle) || !ok(eps_int)) {
    throw InvalidTolerances("tolerances must be finite and nonnegative");
  }
  if (eps_int >= 0.5) {
    throw InvalidTolerances("eps_int must be below 0.5");
  }
}

int orient(Point2 p, Point2 q, Point2 r, double eps_pos) {
  const Vec2 pq = q - p;
  const double area2 = cross(pq, r - p);
  // |area2| / |pq| is the distance from r to the line pq.
  if (std::abs(area2) <= eps_pos * norm(pq)) {
    return 0;
  }
  return area2 > 0.0 ? 1 : -1;
}

double signed_angle(Vec2 u, Vec2 v, double eps_pos) {
  const double nu = norm(u);
  const double nv = norm(v);
  if (nu <= eps_pos || nv <= eps_pos || nu == 0.0 || nv == 0.0) {
    throw ZeroVector("signed_angle of a zero-length vector");
  }
  const double a = std::atan2(cross(u, v), dot(u, v));
  return a <= -std::numbers::pi ? std::numbers::pi : a;
}

std::optional<SegmentHit> segment_intersection(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  const Vec2 r = a2 - a1;
  const Vec2 s = b2 - b1;
  const double den = cross(r, s);
  if (den == 0.0 || std::abs(den) <= 1e-15 * norm(r) * norm(s)) {
    return std::nullopt;
  }
  const Vec2 q = b1 - a1;
  const double sa = cross(q, s) / den;
  const double tb = cross(q, r) / den;
  if (!(sa > 0.0 && sa < 1.0 && tb > 0.0 && tb < 1.0)) {
    return std::nullopt;
  }
  SegmentHit hit;
  hit.point = a1 + sa * r;
  hit.s = sa;
  hit.t = tb;
  hit.angle = std::atan2(std::abs(den), dot(r, s));
  return hit;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) {
    return distance(p, a);
  }
  const double u = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return distance(p, a + u * ab);
}

double segment_segment_distance(Point2 a1, Point2 a2, Point2 b1, Point2 b2) {
  if (segment_intersection(a1, a2, b1, b2)) {
    return 0.0;
  }
  return std::min({point_segment_distance(a1, b1, b2), point_segment_distance(a2, b1, b2),
                   point_segment_distance(b1, a1, a2), point_segment_distance(b2, a1, a2)});
}

}  // namespace curvetopo
