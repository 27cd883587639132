#include "curvetopo/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "curvetopo/errors.hpp"

namespace curvetopo {

namespace {

void require(bool condition, const char* message) {
  if (!condition) {
    throw MalformedDiagram(message);
  }
}

// Winding number of a closed polygon around p by summing subtended angles.
int polygon_winding(const std::vector<Point2>& poly, Point2 p) {
  double total = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Vec2 u = poly[i] - p;
    const Vec2 v = poly[(i + 1) % poly.size()] - p;
    total += std::atan2(cross(u, v), dot(u, v));
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

// Shoelace about the first vertex, so a small face far from the origin keeps
// its sign.
double polygon_area(const std::vector<Point2>& poly) {
  if (poly.empty()) return 0.0;
  const Point2 o = poly.front();
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    twice += cross(poly[i] - o, poly[i + 1] - o);
  }
  return 0.5 * twice;
}

struct Passage {
  double t = 0.0;
  int crossing = 0;
  std::size_t segment = 0;
  double s = 0.0;
  Point2 position;
};

}  // namespace

const ClosedPolyline& Diagram::curve() const {
  if (!curve_) {
    throw MalformedDiagram("diagram has no geometry");
  }
  return *curve_;
}

int Diagram::next_in_face(int dart) const { return prev_around_[darts_[dart].reverse]; }

int Diagram::incoming_reverse_dart(int passage) const {
  const int count = passage_count();
  return 2 * ((passage - 1 + count) % count) + 1;
}

std::array<int, 4> Diagram::darts_around(int crossing) const {
  std::array<int, 4> out{};
  int dart = outgoing_dart(vertices_.at(crossing).first_passage);
  for (int k = 0; k < 4; ++k) {
    out[k] = dart;
    dart = darts_[dart].next_around_origin;
  }
  return out;
}

Diagram Diagram::from_code(const DiagramCode& code) {
  const int count = static_cast<int>(code.passages.size());
  require(count % 2 == 0, "passage count must be even");
  const int n = count / 2;
  require(static_cast<int>(code.chirality.size()) == n, "one chirality per crossing expected");

  Diagram d;
  d.code_ = code;
  d.vertices_.resize(n);
  std::vector<int> seen(n, 0);
  int next_new = 0;
  for (int p = 0; p < count; ++p) {
    const int c = code.passages[p];
    require(c >= 0 && c < n, "passage refers to an unknown crossing");
    if (seen[c] == 0) {
      require(c == next_new, "crossing ids must be numbered by first visit");
      ++next_new;
      d.vertices_[c].id = c;
      d.vertices_[c].first_passage = p;
    } else {
      require(seen[c] == 1, "a crossing is visited more than twice");
      d.vertices_[c].second_passage = p;
    }
    ++seen[c];
  }
  for (int c = 0; c < n; ++c) {
    require(seen[c] == 2, "every crossing must be visited exactly twice");
    require(code.chirality[c] == 1 || code.chirality[c] == -1, "chirality must be +1 or -1");
    d.vertices_[c].chirality = code.chirality[c];
  }

  d.assemble_darts();
  require(code.outer_dart >= 0 && code.outer_dart < static_cast<int>(d.darts_.size()),
          "outer dart out of range");
  d.trace_faces();
  d.unbounded_face_ = d.face_of_dart_[code.outer_dart];
  d.faces_[d.unbounded_face_].is_unbounded = true;
  d.check_euler();
  return d;
}

void Diagram::assemble_darts() {
  const int count = passage_count();
  const int n_edges = std::max(count, 1);
  darts_.assign(2 * n_edges, Dart{});
  edges_.assign(n_edges, Edge{});
  for (int k = 0; k < n_edges; ++k) {
    Dart& fwd = darts_[2 * k];
    Dart& bwd = darts_[2 * k + 1];
    fwd.id = 2 * k;
    bwd.id = 2 * k + 1;
    fwd.edge = bwd.edge = k;
    fwd.reverse = bwd.id;
    bwd.reverse = fwd.id;
    fwd.along_orientation = true;
    bwd.along_orientation = false;
    if (count == 0) {
      fwd.origin = bwd.origin = kFreeOrigin;
    } else {
      fwd.origin = code_.passages[k];
      bwd.origin = code_.passages[(k + 1) % count];
    }
    edges_[k].forward_dart = fwd.id;
    edges_[k].backward_dart = bwd.id;
  }

  if (count == 0) {
    darts_[0].next_around_origin = 1;
    darts_[1].next_around_origin = 0;
  } else {
    for (const CrossingVertex& v : vertices_) {
      const int out_a = outgoing_dart(v.first_passage);
      const int in_a = incoming_reverse_dart(v.first_passage);
      const int out_b = outgoing_dart(v.second_passage);
      const int in_b = incoming_reverse_dart(v.second_passage);
      // Counterclockwise rotation; the strands alternate around the vertex.
      const std::array<int, 4> ring = v.chirality > 0 ? std::array{out_a, in_b, in_a, out_b}
                                                      : std::array{out_a, out_b, in_a, in_b};
      for (int k = 0; k < 4; ++k) {
        darts_[ring[k]].next_around_origin = ring[(k + 1) % 4];
      }
    }
  }

  prev_around_.assign(darts_.size(), 0);
  for (const Dart& dart : darts_) {
    prev_around_[dart.next_around_origin] = dart.id;
  }
}

void Diagram::trace_faces() {
  faces_.clear();
  face_of_dart_.assign(darts_.size(), -1);
  for (const Dart& start : darts_) {
    if (face_of_dart_[start.id] != -1) {
      continue;
    }
    Face face;
    face.id = static_cast<int>(faces_.size());
    int dart = start.id;
    do {
      require(face_of_dart_[dart] == -1, "face walk does not close");
      face_of_dart_[dart] = face.id;
      face.boundary.push_back(dart);
      dart = next_in_face(dart);
    } while (dart != start.id);
    faces_.push_back(std::move(face));
  }
}

void Diagram::check_euler() const {
  const EulerStats stats = euler_stats(*this);
  if (stats.euler_characteristic != 2) {
    throw MalformedDiagram("Euler characteristic is " + std::to_string(stats.euler_characteristic) +
                           ", expected 2");
  }
}

Diagram build_diagram(const ClosedPolyline& curve, const std::vector<Crossing>& crossings,
                      const Tolerances& tol) {
  (void)tol;
  const int n = static_cast<int>(crossings.size());
  for (int c = 0; c < n; ++c) {
    require(crossings[c].id == c, "crossings must be numbered densely in order");
    require(crossings[c].t_first < crossings[c].t_second, "crossing passages out of order");
  }

  std::vector<Passage> passages;
  passages.reserve(2 * n);
  for (const Crossing& c : crossings) {
    passages.push_back({c.t_first, c.id, c.segment_first, c.s_first, c.position});
    passages.push_back({c.t_second, c.id, c.segment_second, c.s_second, c.position});
  }
  std::sort(passages.begin(), passages.end(),
            [](const Passage& a, const Passage& b) { return a.t < b.t; });

  Diagram d;
  d.curve_ = curve;
  d.crossings_ = crossings;
  d.code_.passages.resize(passages.size());
  for (std::size_t p = 0; p < passages.size(); ++p) {
    d.code_.passages[p] = passages[p].crossing;
  }
  d.vertices_.resize(n);
  std::vector<int> visits(n, 0);
  for (int p = 0; p < 2 * n; ++p) {
    const int c = d.code_.passages[p];
    CrossingVertex& v = d.vertices_[c];
    v.id = c;
    if (visits[c]++ == 0) {
      v.first_passage = p;
      require(c == 0 || visits[c - 1] > 0, "crossings are not numbered by first visit");
    } else {
      v.second_passage = p;
    }
  }

  // Rotation from the geometric directions of the four stubs around each crossing.
  d.code_.chirality.resize(n);
  for (const Crossing& c : crossings) {
    const Vec2 u = curve.segment_vector(c.segment_first);
    const Vec2 v = curve.segment_vector(c.segment_second);
    struct Stub {
      double angle;
      int role;  // 0 out_first, 1 in_second, 2 in_first, 3 out_second
    };
    std::array<Stub, 4> stubs{{{std::atan2(u.y, u.x), 0},
                               {std::atan2(-v.y, -v.x), 1},
                               {std::atan2(-u.y, -u.x), 2},
                               {std::atan2(v.y, v.x), 3}}};
    std::sort(stubs.begin(), stubs.end(),
              [](const Stub& a, const Stub& b) { return a.angle < b.angle; });
    int at = 0;
    while (stubs[at].role != 0) {
      ++at;
    }
    const int after = stubs[(at + 1) % 4].role;
    const int opposite = stubs[(at + 2) % 4].role;
    require(opposite == 2, "strands do not alternate around a crossing");
    d.code_.chirality[c.id] = after == 1 ? 1 : -1;
    d.vertices_[c.id].chirality = d.code_.chirality[c.id];
  }

  d.assemble_darts();

  // Edge geometry.
  const std::size_t m = curve.size();
  if (n == 0) {
    Edge& e = d.edges_[0];
    e.arc.assign(curve.vertices().begin(), curve.vertices().end());
    e.arc.push_back(curve.vertex(0));
    e.t_start = 0.0;
    e.t_end = 1.0;
  } else {
    for (int k = 0; k < 2 * n; ++k) {
      const Passage& from = passages[k];
      const Passage& to = passages[(k + 1) % (2 * n)];
      Edge& e = d.edges_[k];
      e.t_start = from.t;
      e.t_end = to.t;
      e.arc.push_back(from.position);
      std::size_t steps = (to.segment + m - from.segment) % m;
      if (steps == 0 && !(to.t > from.t)) {
        steps = m;
      }
      for (std::size_t i = 1; i <= steps; ++i) {
        e.arc.push_back(curve.vertex(from.segment + i));
      }
      e.arc.push_back(to.position);
    }
  }

  d.trace_faces();

  int unbounded = -1;
  for (const Face& face : d.faces_) {
    if (polygon_area(face_polygon(d, face.id)) < 0.0) {
      require(unbounded == -1, "more than one face has negative area");
      unbounded = face.id;
    }
  }
  require(unbounded != -1, "no face has negative area");
  d.unbounded_face_ = unbounded;
  d.faces_[unbounded].is_unbounded = true;
  d.code_.outer_dart = d.faces_[unbounded].boundary.front();
  d.check_euler();
  return d;
}

EulerStats euler_stats(const Diagram& d) {
  EulerStats s;
  s.n_vertices = std::max(d.crossing_count(), 1);
  s.n_edges = static_cast<int>(d.edges().size());
  s.n_faces = static_cast<int>(d.faces().size());
  s.euler_characteristic = s.n_faces - s.n_edges + s.n_vertices;
  return s;
}

int edge_at(const Diagram& d, double t, const Tolerances& tol) {
  const ClosedPolyline& curve = d.curve();
  t = wrap_param(t);
  const double reach = tol.eps_pos / curve.length();
  const auto near = [&](double a) {
    const double gap = std::abs(t - a);
    return std::min(gap, 1.0 - gap) <= reach;
  };
  for (const Crossing& c : d.crossings()) {
    if (near(c.t_first) || near(c.t_second)) {
      throw OnCrossing("parameter " + std::to_string(t) + " lies on crossing " +
                       std::to_string(c.id));
    }
  }
  if (d.crossing_count() == 0) {
    return 0;
  }
  const auto& edges = d.edges();
  // Edge k covers (t_start, t_end); the last edge wraps through t = 0.
  int found = static_cast<int>(edges.size()) - 1;
  for (int k = 0; k + 1 < static_cast<int>(edges.size()); ++k) {
    if (t > edges[k].t_start && t < edges[k].t_end) {
      found = k;
      break;
    }
  }
  return found;
}

SideFaces side_faces_of_point(const Diagram& d, double t, const Tolerances& tol) {
  const int e = edge_at(d, t, tol);
  return {d.left_face(e), d.right_face(e)};
}

std::vector<Point2> face_polygon(const Diagram& d, int face) {
  std::vector<Point2> poly;
  for (int dart : d.faces().at(face).boundary) {
    const Dart& info = d.darts()[dart];
    const std::vector<Point2>& arc = d.edges()[info.edge].arc;
    if (arc.empty()) {
      throw MalformedDiagram("diagram has no geometry");
    }
    const auto append = [&poly](Point2 p) {
      if (poly.empty() || !(poly.back() == p)) {
        poly.push_back(p);
      }
    };
    if (info.along_orientation) {
      for (const Point2& p : arc) append(p);
    } else {
      for (auto it = arc.rbegin(); it != arc.rend(); ++it) append(*it);
    }
  }
  if (poly.size() > 1 && poly.front() == poly.back()) {
    poly.pop_back();
  }
  return poly;
}

Point2 face_interior_point(const Diagram& d, int face, const Tolerances& tol) {
  const ClosedPolyline& curve = d.curve();
  const std::vector<Point2> poly = face_polygon(d, face);
  const int inside_winding = d.faces()[face].is_unbounded ? 0 : 1;

  std::vector<std::size_t> order(poly.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&poly](std::size_t a, std::size_t b) {
    return distance(poly[a], poly[(a + 1) % poly.size()]) >
           distance(poly[b], poly[(b + 1) % poly.size()]);
  });

  const double floor_gap = 10.0 * tol.eps_pos;
  for (std::size_t i : order) {
    const Point2 a = poly[i];
    const Point2 b = poly[(i + 1) % poly.size()];
    const double len = distance(a, b);
    if (len <= 100.0 * tol.eps_pos) {
      break;
    }
    const Point2 mid = a + 0.5 * (b - a);
    const Vec2 left = (1.0 / len) * perp(b - a);
    for (double offset = 0.25 * len; offset > floor_gap; offset *= 0.5) {
      const Point2 p = mid + offset * left;
      if (curve.distance_to(p) <= std::max(floor_gap, 0.1 * offset)) {
        continue;
      }
      if (polygon_winding(poly, p) == inside_winding) {
        return p;
      }
    }
  }
  throw MalformedDiagram("no interior sample point found for face " + std::to_string(face));
}

}  // namespace curvetopo
