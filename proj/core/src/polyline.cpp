#include "curvetopo/polyline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "curvetopo/errors.hpp"

namespace curvetopo {

double wrap_param(double t) {
  double w = t - std::floor(t);
  if (w >= 1.0) {
    w = 0.0;
  }
  return w;
}

ClosedPolyline::ClosedPolyline(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t m = vertices_.size();
  if (m < 3) {
    throw InvalidCurve("a closed polyline needs at least 3 vertices");
  }
  Point2 lo = vertices_.front();
  Point2 hi = vertices_.front();
  for (const Point2& p : vertices_) {
    if (!is_finite(p)) {
      throw InvalidCurve("polyline vertex has a non-finite coordinate");
    }
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  extent_ = distance(lo, hi);
  const double min_sep = 1e-9 * extent_;

  seg_len_.resize(m);
  cumulative_.resize(m);
  double acc = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double len = distance(vertices_[i], vertices_[(i + 1) % m]);
    if (!(len > min_sep) || len == 0.0) {
      throw InvalidCurve("consecutive vertices " + std::to_string(i) + " and " +
                         std::to_string((i + 1) % m) + " coincide");
    }
    seg_len_[i] = len;
    cumulative_[i] = acc;
    acc += len;
  }
  length_ = acc;
}

double ClosedPolyline::param_at(std::size_t segment, double s) const {
  segment %= vertices_.size();
  return wrap_param((cumulative_[segment] + s * seg_len_[segment]) / length_);
}

std::pair<std::size_t, double> ClosedPolyline::locate(double t) const {
  const double arc = wrap_param(t) * length_;
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), arc);
  std::size_t seg = static_cast<std::size_t>(std::distance(cumulative_.begin(), it)) - 1;
  double s = (arc - cumulative_[seg]) / seg_len_[seg];
  return {seg, std::clamp(s, 0.0, 1.0)};
}

Point2 ClosedPolyline::point_at(double t) const {
  const auto [seg, s] = locate(t);
  return vertex(seg) + s * segment_vector(seg);
}

Vec2 ClosedPolyline::direction_at(double t) const {
  const auto [seg, s] = locate(t);
  return (1.0 / seg_len_[seg]) * segment_vector(seg);
}

ClosedPolyline ClosedPolyline::reversed() const {
  std::vector<Point2> rev;
  rev.reserve(vertices_.size());
  rev.push_back(vertices_.front());
  for (std::size_t i = vertices_.size() - 1; i >= 1; --i) {
    rev.push_back(vertices_[i]);
  }
  return ClosedPolyline(std::move(rev));
}

double ClosedPolyline::distance_to(Point2 p) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    best = std::min(best, point_segment_distance(p, vertex(i), vertex(i + 1)));
  }
  return best;
}

}  // namespace curvetopo
