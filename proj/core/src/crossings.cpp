#include "curvetopo/crossings.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <sstream>
#include <tuple>
#include <utility>

namespace curvetopo {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Tangency: return "Tangency";
    case ViolationKind::TripleOrHigherPoint: return "TripleOrHigherPoint";
    case ViolationKind::CrossingTooCloseToCrossing: return "CrossingTooCloseToCrossing";
    case ViolationKind::CrossingTooCloseToVertexSample: return "CrossingTooCloseToVertexSample";
    case ViolationKind::SelfOverlap: return "SelfOverlap";
  }
  return "Unknown";
}

bool GenericityReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

namespace {

std::string summarize(const GenericityReport& report) {
  std::ostringstream out;
  out << "curve is not generic: " << report.violations.size() << " violation(s)";
  if (!report.violations.empty()) {
    const Violation& v = report.violations.front();
    out << ", first " << to_string(v.kind) << " at (" << v.location.x << ", " << v.location.y
        << "): " << v.detail;
  }
  return out.str();
}

constexpr std::size_t kBruteForceLimit = 64;

class Scanner {
 public:
  Scanner(const ClosedPolyline& curve, const Tolerances& tol)
      : curve_(curve), tol_(tol), m_(curve.size()), near_(4.0 * tol.eps_pos) {}

  GenericityReport run(std::vector<Crossing>& crossings) {
    check_fold_backs();
    if (m_ <= kBruteForceLimit) {
      for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = i + 2; j < m_; ++j) {
          if (i == 0 && j == m_ - 1) {
            continue;
          }
          test_pair(i, j);
        }
      }
    } else {
      for (const auto& [i, j] : grid_candidates()) {
        test_pair(i, j);
      }
    }
    check_crossing_separation();

    std::sort(found_.begin(), found_.end(), [](const Crossing& a, const Crossing& b) {
      return std::tie(a.t_first, a.t_second) < std::tie(b.t_first, b.t_second);
    });
    for (std::size_t k = 0; k < found_.size(); ++k) {
      found_[k].id = static_cast<int>(k);
    }
    std::sort(report_.violations.begin(), report_.violations.end(),
              [](const Violation& a, const Violation& b) {
                return std::tie(a.kind, a.location.x, a.location.y) <
                       std::tie(b.kind, b.location.x, b.location.y);
              });
    report_.ok = report_.violations.empty();
    crossings = std::move(found_);
    return std::move(report_);
  }

 private:
  void flag(ViolationKind kind, Point2 where, std::string detail) {
    report_.violations.push_back({kind, where, std::move(detail)});
  }

  static std::string pair_name(std::size_t i, std::size_t j) {
    return "segments " + std::to_string(i) + " and " + std::to_string(j);
  }

  // Adjacent segments can only overlap by folding back onto each other.
  void check_fold_backs() {
    for (std::size_t i = 0; i < m_; ++i) {
      const Vec2 in = curve_.segment_vector(i + m_ - 1);
      const Vec2 out = curve_.segment_vector(i);
      const double turn = std::abs(std::atan2(cross(in, out), dot(in, out)));
      if (turn > std::numbers::pi - tol_.eps_angle) {
        flag(ViolationKind::SelfOverlap, curve_.vertex(i),
             "curve folds back on itself at vertex " + std::to_string(i));
      }
    }
  }

  void test_pair(std::size_t i, std::size_t j) {
    const Point2 a1 = curve_.vertex(i);
    const Point2 a2 = curve_.vertex(i + 1);
    const Point2 b1 = curve_.vertex(j);
    const Point2 b2 = curve_.vertex(j + 1);
    if (std::min(a1.x, a2.x) - near_ > std::max(b1.x, b2.x) ||
        std::min(b1.x, b2.x) - near_ > std::max(a1.x, a2.x) ||
        std::min(a1.y, a2.y) - near_ > std::max(b1.y, b2.y) ||
        std::min(b1.y, b2.y) - near_ > std::max(a1.y, a2.y)) {
      return;
    }

    if (const auto hit = segment_intersection(a1, a2, b1, b2)) {
      const double transversality = std::min(hit->angle, std::numbers::pi - hit->angle);
      if (transversality < tol_.eps_angle) {
        flag(ViolationKind::Tangency, hit->point, pair_name(i, j) + " meet at a grazing angle");
        return;
      }
      const double to_vertex = std::min({distance(hit->point, a1), distance(hit->point, a2),
                                         distance(hit->point, b1), distance(hit->point, b2)});
      if (to_vertex < near_) {
        flag(ViolationKind::CrossingTooCloseToVertexSample, hit->point,
             pair_name(i, j) + " cross next to a sample vertex");
        return;
      }
      Crossing c;
      c.position = hit->point;
      c.segment_first = i;
      c.segment_second = j;
      c.s_first = hit->s;
      c.s_second = hit->t;
      c.t_first = curve_.param_at(i, hit->s);
      c.t_second = curve_.param_at(j, hit->t);
      c.angle = hit->angle;
      found_.push_back(c);
      return;
    }

    const double gap = segment_segment_distance(a1, a2, b1, b2);
    if (gap > near_) {
      return;
    }
    const Vec2 r = a2 - a1;
    const Vec2 s = b2 - b1;
    const double sine = std::abs(cross(r, s)) / (norm(r) * norm(s));
    const Point2 where = a1 + 0.5 * r;
    if (sine < tol_.eps_angle) {
      // Nearly parallel and touching: measure the shared stretch along r.
      const double len = norm(r);
      const Vec2 dir = (1.0 / len) * r;
      const double p1 = dot(b1 - a1, dir);
      const double p2 = dot(b2 - a1, dir);
      const double overlap = std::min(len, std::max(p1, p2)) - std::max(0.0, std::min(p1, p2));
      if (overlap > near_) {
        flag(ViolationKind::SelfOverlap, where, pair_name(i, j) + " overlap");
      } else {
        flag(ViolationKind::Tangency, where, pair_name(i, j) + " touch while parallel");
      }
      return;
    }
    flag(ViolationKind::CrossingTooCloseToVertexSample, where,
         pair_name(i, j) + " touch at or near a sample vertex");
  }

  void check_crossing_separation() {
    std::vector<std::size_t> order(found_.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      order[k] = k;
    }
    std::sort(order.begin(), order.end(), [this](std::size_t a, std::size_t b) {
      return found_[a].position.x < found_[b].position.x;
    });
    for (std::size_t u = 0; u < order.size(); ++u) {
      const Crossing& a = found_[order[u]];
      for (std::size_t v = u + 1; v < order.size(); ++v) {
        const Crossing& b = found_[order[v]];
        if (b.position.x - a.position.x >= near_) {
          break;
        }
        const double gap = distance(a.position, b.position);
        if (gap < tol_.eps_pos) {
          flag(ViolationKind::TripleOrHigherPoint, a.position,
               "three or more strands pass through one point");
        } else if (gap < near_) {
          flag(ViolationKind::CrossingTooCloseToCrossing, a.position,
               "two crossings are closer than the separation tolerance");
        }
      }
    }
  }

  // Uniform grid broad phase for large inputs. Only occupied cells are
  // stored: (cell, segment) entries sorted by cell.
  std::vector<std::pair<std::size_t, std::size_t>> grid_candidates() const {
    Point2 lo = curve_.vertex(0);
    Point2 hi = lo;
    for (const Point2& p : curve_.vertices()) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
    }
    // About two segment lengths, and never finer than the tolerance halo.
    const double cell = std::max(
        {2.0 * curve_.length() / static_cast<double>(m_), 2.0 * near_, 1e-300});
    const auto cells_for = [&](double span) {
      return std::clamp(static_cast<std::uint64_t>(span / cell) + 1, std::uint64_t{1},
                        std::uint64_t{1} << 24);
    };
    const std::uint64_t nx = cells_for(hi.x - lo.x);
    const std::uint64_t ny = cells_for(hi.y - lo.y);
    const double cx = (hi.x - lo.x) / static_cast<double>(nx) + 1e-300;
    const double cy = (hi.y - lo.y) / static_cast<double>(ny) + 1e-300;
    const auto index = [](double v, double origin, double size, std::uint64_t n) {
      const double k = std::floor((v - origin) / size);
      return static_cast<std::uint64_t>(std::clamp(k, 0.0, static_cast<double>(n - 1)));
    };

    std::vector<std::pair<std::uint64_t, std::size_t>> entries;
    entries.reserve(4 * m_);
    for (std::size_t i = 0; i < m_; ++i) {
      const Point2 a = curve_.vertex(i);
      const Point2 b = curve_.vertex(i + 1);
      const std::uint64_t x0 = index(std::min(a.x, b.x) - near_, lo.x, cx, nx);
      const std::uint64_t x1 = index(std::max(a.x, b.x) + near_, lo.x, cx, nx);
      const std::uint64_t y0 = index(std::min(a.y, b.y) - near_, lo.y, cy, ny);
      const std::uint64_t y1 = index(std::max(a.y, b.y) + near_, lo.y, cy, ny);
      for (std::uint64_t gx = x0; gx <= x1; ++gx) {
        for (std::uint64_t gy = y0; gy <= y1; ++gy) {
          entries.emplace_back(gx * ny + gy, i);
        }
      }
    }
    std::sort(entries.begin(), entries.end());

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t begin = 0; begin < entries.size();) {
      std::size_t end = begin;
      while (end < entries.size() && entries[end].first == entries[begin].first) ++end;
      for (std::size_t u = begin; u < end; ++u) {
        for (std::size_t v = u + 1; v < end; ++v) {
          const std::size_t i = entries[u].second;  // i < j: entries sort by segment
          const std::size_t j = entries[v].second;
          if (j == i + 1 || (i == 0 && j == m_ - 1)) {
            continue;
          }
          pairs.emplace_back(i, j);
        }
      }
      begin = end;
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
  }

  const ClosedPolyline& curve_;
  const Tolerances& tol_;
  std::size_t m_;
  double near_;
  std::vector<Crossing> found_;
  GenericityReport report_;
};

}  // namespace

GenericityViolation::GenericityViolation(GenericityReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

Tolerances default_tolerances(const ClosedPolyline& curve) {
  return Tolerances::for_extent(curve.extent());
}

std::vector<Crossing> find_crossings(const ClosedPolyline& curve, const Tolerances& tol) {
  tol.validate();
  std::vector<Crossing> crossings;
  GenericityReport report = Scanner(curve, tol).run(crossings);
  if (!report.ok) {
    throw GenericityViolation(std::move(report));
  }
  return crossings;
}

GenericityReport validate_generic(const ClosedPolyline& curve, const Tolerances& tol) {
  tol.validate();
  std::vector<Crossing> crossings;
  return Scanner(curve, tol).run(crossings);
}

}  // namespace curvetopo
