#include "curvetopo/winding.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "curvetopo/errors.hpp"

namespace curvetopo {

namespace {

void require_off_curve(const ClosedPolyline& curve, Point2 p, const Tolerances& tol) {
  if (curve.distance_to(p) <= tol.eps_pos) {
    throw PointOnCurve("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                       ") lies on the curve");
  }
}

constexpr int kRayRetries = 64;
constexpr std::uint64_t kRaySeed = 0x9e3779b97f4a7c15ULL;

// Signed count of transverse crossings of the ray; nullopt when the ray comes
// too close to a vertex for the side tests to be trusted.
std::optional<int> count_ray_crossings(const ClosedPolyline& curve, Point2 p, Vec2 dir,
                                       double margin) {
  int count = 0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    const Point2 a = curve.vertex(i);
    const Point2 b = curve.vertex(i + 1);
    const double side_a = cross(dir, a - p);
    const double side_b = cross(dir, b - p);
    if (std::abs(side_a) <= margin && dot(a - p, dir) >= -margin) {
      return std::nullopt;
    }
    if ((side_a > 0.0) == (side_b > 0.0)) {
      continue;
    }
    const double u = side_a / (side_a - side_b);
    const Point2 q = a + u * (b - a);
    if (dot(q - p, dir) <= 0.0) {
      continue;
    }
    count += side_b > 0.0 ? 1 : -1;  // moving right -> left of the ray counts +1
  }
  return count;
}

}  // namespace

int wind_point(const ClosedPolyline& curve, Point2 p, const Tolerances& tol) {
  require_off_curve(curve, p, tol);
  double total = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    total += signed_angle(curve.vertex(i) - p, curve.vertex(i + 1) - p);
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > tol.eps_int) {
    throw NonIntegerWinding("angle sum " + std::to_string(turns) + " is not an integer");
  }
  return static_cast<int>(rounded);
}

int wind_point_ray(const ClosedPolyline& curve, Point2 p, Vec2 direction, const Tolerances& tol) {
  require_off_curve(curve, p, tol);
  const double len = norm(direction);
  if (len == 0.0 || !std::isfinite(len)) {
    throw ZeroVector("ray direction has zero length");
  }
  Vec2 dir = (1.0 / len) * direction;
  const double margin = std::max(4.0 * tol.eps_pos, 1e-12 * curve.extent());

  std::mt19937_64 rng(kRaySeed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (int attempt = 0; attempt <= kRayRetries; ++attempt) {
    if (const auto count = count_ray_crossings(curve, p, dir, margin)) {
      return *count;
    }
    const double a = angle(rng);
    dir = {std::cos(a), std::sin(a)};
  }
  throw RayRetryExhausted("no ray direction avoided the curve's vertices");
}

std::int64_t RegionLabeling::sum() const {
  return std::accumulate(wind_by_face.begin(), wind_by_face.end(), std::int64_t{0});
}

std::int64_t CrossingWinds::sum() const {
  return std::accumulate(wind_by_crossing.begin(), wind_by_crossing.end(), std::int64_t{0});
}

RegionLabeling alexander_numbering(const Diagram& d) {
  const int n_faces = static_cast<int>(d.faces().size());
  std::vector<int> label(n_faces, 0);
  std::vector<bool> known(n_faces, false);
  std::deque<int> queue;
  label[d.unbounded_face()] = 0;
  known[d.unbounded_face()] = true;
  queue.push_back(d.unbounded_face());

  while (!queue.empty()) {
    const int face = queue.front();
    queue.pop_front();
    for (int dart : d.faces()[face].boundary) {
      const Dart& info = d.darts()[dart];
      const int other = d.face_of(info.reverse);
      // The face left of the direction of travel is one higher.
      const int expected = info.along_orientation ? label[face] - 1 : label[face] + 1;
      if (!known[other]) {
        known[other] = true;
        label[other] = expected;
        queue.push_back(other);
      } else if (label[other] != expected) {
        throw InconsistentLabeling("faces " + std::to_string(face) + " and " +
                                   std::to_string(other) + " cannot be numbered consistently");
      }
    }
  }
  for (int f = 0; f < n_faces; ++f) {
    if (!known[f]) {
      throw InconsistentLabeling("face " + std::to_string(f) + " is unreachable");
    }
  }
  return RegionLabeling{std::move(label)};
}

std::array<int, 4> corner_labels(const Diagram& d, const RegionLabeling& labels, int crossing) {
  std::array<int, 4> corners{};
  const std::array<int, 4> around = d.darts_around(crossing);
  for (int k = 0; k < 4; ++k) {
    // The corner between an outgoing dart and its counterclockwise successor
    // is the face on the dart's left.
    corners[k] = labels[d.face_of(around[k])];
  }
  return corners;
}

CrossingWinds crossing_winds(const Diagram& d, const RegionLabeling& labels) {
  CrossingWinds winds;
  winds.wind_by_crossing.resize(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const std::array<int, 4> k = corner_labels(d, labels, c);
    const int total = k[0] + k[1] + k[2] + k[3];
    std::optional<int> repeated;
    if (k[0] == k[2] && std::abs(k[1] - k[3]) == 2 && k[1] + k[3] == 2 * k[0]) {
      repeated = k[0];
    } else if (k[1] == k[3] && std::abs(k[0] - k[2]) == 2 && k[0] + k[2] == 2 * k[1]) {
      repeated = k[1];
    }
    if (!repeated || total % 4 != 0 || total / 4 != *repeated) {
      throw CornerPatternViolation("corners of crossing " + std::to_string(c) + " are " +
                                   std::to_string(k[0]) + "," + std::to_string(k[1]) + "," +
                                   std::to_string(k[2]) + "," + std::to_string(k[3]));
    }
    winds.wind_by_crossing[c] = *repeated;
  }
  return winds;
}

HalfInteger ind_on_edge(const Diagram& d, const RegionLabeling& labels, int edge) {
  return HalfInteger::from_twice(labels[d.left_face(edge)] + labels[d.right_face(edge)]);
}

HalfInteger ind_at(const Diagram& d, const RegionLabeling& labels, double t, const Tolerances& tol) {
  return ind_on_edge(d, labels, edge_at(d, t, tol));
}

}  // namespace curvetopo
