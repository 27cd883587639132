#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "corpus.hpp"
#include "curvetopo/crossings.hpp"
#include "curvetopo/curvegen.hpp"
#include "curvetopo/diagram.hpp"
#include "curvetopo/errors.hpp"
#include "curvetopo/winding.hpp"
#include "oracles.hpp"

using namespace curvetopo;
using testing_support::random_curves;

namespace {

Diagram diagram_of(const ClosedPolyline& c) {
  const Tolerances tol = default_tolerances(c);
  return build_diagram(c, find_crossings(c, tol), tol);
}

double signed_area(const std::vector<Point2>& poly) {
  double a = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2 p = poly[i], q = poly[(i + 1) % poly.size()];
    a += p.x * q.y - p.y * q.x;
  }
  return a / 2;
}

void expect_dart_invariants(const Diagram& d) {
  const auto& darts = d.darts();
  for (const Dart& x : darts) {
    EXPECT_NE(x.reverse, x.id);
    EXPECT_EQ(darts[x.reverse].reverse, x.id);
    EXPECT_EQ(darts[x.reverse].edge, x.edge);
    EXPECT_NE(darts[x.reverse].along_orientation, x.along_orientation);
  }
  for (const CrossingVertex& v : d.vertices()) {
    const auto around = d.darts_around(v.id);
    for (int k = 0; k < 4; ++k) {
      EXPECT_EQ(darts[around[k]].origin, v.id);
      EXPECT_EQ(darts[around[k]].next_around_origin, around[(k + 1) % 4]);
      EXPECT_EQ(d.prev_around_origin(around[(k + 1) % 4]), around[k]);
    }
    // The two darts of one strand sit opposite each other.
    EXPECT_EQ(around[0], d.outgoing_dart(v.first_passage));
    EXPECT_EQ(around[2], d.incoming_reverse_dart(v.first_passage));
    const std::set<int> other{around[1], around[3]};
    EXPECT_EQ(other, (std::set<int>{d.outgoing_dart(v.second_passage),
                                    d.incoming_reverse_dart(v.second_passage)}));
  }
}

void expect_faces_partition_darts(const Diagram& d) {
  std::vector<int> seen(d.darts().size(), 0);
  int unbounded = 0;
  for (const Face& f : d.faces()) {
    unbounded += f.is_unbounded;
    ASSERT_FALSE(f.boundary.empty());
    for (std::size_t k = 0; k < f.boundary.size(); ++k) {
      const int dart = f.boundary[k];
      ++seen[dart];
      EXPECT_EQ(d.face_of(dart), f.id);
      EXPECT_EQ(d.next_in_face(dart), f.boundary[(k + 1) % f.boundary.size()]);
    }
  }
  EXPECT_EQ(unbounded, 1);
  for (int s : seen) EXPECT_EQ(s, 1);
}

}  // namespace

TEST(BuildDiagram, CircleIsOneLoopAndTwoFaces) {
  const Diagram d = diagram_of(named_curve("circle_ccw", 128));
  EXPECT_EQ(d.crossing_count(), 0);
  EXPECT_EQ(d.edges().size(), 1u);
  EXPECT_EQ(d.faces().size(), 2u);
  EXPECT_EQ(d.darts()[0].origin, kFreeOrigin);
  expect_faces_partition_darts(d);
}

TEST(BuildDiagram, FigureEight) {
  const Diagram d = diagram_of(named_curve("figure_eight"));
  EXPECT_EQ(d.crossing_count(), 1);
  EXPECT_EQ(d.edges().size(), 2u);
  EXPECT_EQ(d.faces().size(), 3u);
  expect_dart_invariants(d);
  expect_faces_partition_darts(d);
}

TEST(BuildDiagram, ExampleCurve) {
  const Diagram d = diagram_of(named_curve("paper_example"));
  EXPECT_EQ(d.crossing_count(), 8);
  EXPECT_EQ(d.edges().size(), 16u);
  EXPECT_EQ(d.faces().size(), 10u);
}

TEST(EulerStats, Examples) {
  const EulerStats circle = euler_stats(diagram_of(named_curve("circle_ccw")));
  EXPECT_EQ(circle.n_vertices, 1);
  EXPECT_EQ(circle.n_edges, 1);
  EXPECT_EQ(circle.n_faces, 2);
  EXPECT_EQ(circle.euler_characteristic, 2);

  const EulerStats f8 = euler_stats(diagram_of(named_curve("figure_eight")));
  EXPECT_EQ(f8.n_vertices, 1);
  EXPECT_EQ(f8.n_edges, 2);
  EXPECT_EQ(f8.n_faces, 3);
  EXPECT_EQ(f8.euler_characteristic, 2);

  const EulerStats pe = euler_stats(diagram_of(named_curve("paper_example")));
  EXPECT_EQ(pe.n_vertices, 8);
  EXPECT_EQ(pe.n_edges, 16);
  EXPECT_EQ(pe.n_faces, 10);
  EXPECT_EQ(pe.euler_characteristic, 2);
}

TEST(BuildDiagram, CountsAndInvariantsOnRandomCurves) {
  for (const ClosedPolyline& c : random_curves(60, 1000, 2, 6)) {
    const Diagram d = diagram_of(c);
    const int n = d.crossing_count();
    const EulerStats s = euler_stats(d);
    EXPECT_EQ(s.euler_characteristic, 2);
    if (n >= 1) {
      EXPECT_EQ(s.n_vertices, n);
      EXPECT_EQ(s.n_edges, 2 * n);
      EXPECT_EQ(s.n_faces, n + 2);
    }
    expect_dart_invariants(d);
    expect_faces_partition_darts(d);
  }
}

TEST(BuildDiagram, OnlyTheUnboundedFaceHasNegativeArea) {
  for (const ClosedPolyline& c : random_curves(30, 1100, 2, 6)) {
    const Diagram d = diagram_of(c);
    for (const Face& f : d.faces()) {
      const double area = signed_area(face_polygon(d, f.id));
      if (f.is_unbounded) {
        EXPECT_LT(area, 0);
      } else {
        EXPECT_GT(area, 0);
      }
    }
  }
}

TEST(BuildDiagram, SmallCurveFarFromOrigin) {
  for (const ClosedPolyline& c : random_curves(40, 9000, 2, 6)) {
    const int faces = static_cast<int>(diagram_of(c).faces().size());
    const ClosedPolyline far = testing_support::map_points(
        c, [](Point2 p) { return Point2{1e-3 * p.x + 1000.0, 1e-3 * p.y - 660.0}; });
    const Diagram d = diagram_of(far);
    EXPECT_EQ(static_cast<int>(d.faces().size()), faces);
    EXPECT_TRUE(d.faces()[d.unbounded_face()].is_unbounded);
  }
}

TEST(BuildDiagram, EdgeArcsRunBetweenCrossings) {
  const Diagram d = diagram_of(named_curve("paper_example"));
  for (const Edge& e : d.edges()) {
    ASSERT_GE(e.arc.size(), 2u);
    const int from = d.darts()[e.forward_dart].origin;
    const int to = d.darts()[e.backward_dart].origin;
    EXPECT_LT(distance(e.arc.front(), d.crossings()[from].position), 1e-12);
    EXPECT_LT(distance(e.arc.back(), d.crossings()[to].position), 1e-12);
  }
}

TEST(SideFaces, CircleOrientations) {
  const ClosedPolyline ccw = named_curve("circle_ccw");
  const Diagram a = diagram_of(ccw);
  const Tolerances tol = default_tolerances(ccw);
  for (double t : {0.0, 0.1, 0.5, 0.77}) {
    const SideFaces s = side_faces_of_point(a, t, tol);
    EXPECT_NE(s.left_face, a.unbounded_face());
    EXPECT_EQ(s.right_face, a.unbounded_face());
  }
  const ClosedPolyline cw = named_curve("circle_cw");
  const Diagram b = diagram_of(cw);
  for (double t : {0.0, 0.1, 0.5, 0.77}) {
    const SideFaces s = side_faces_of_point(b, t, default_tolerances(cw));
    EXPECT_EQ(s.left_face, b.unbounded_face());
    EXPECT_NE(s.right_face, b.unbounded_face());
  }
}

TEST(SideFaces, FigureEightUpperLobe) {
  const ClosedPolyline c = named_curve("figure_eight");
  const Diagram d = diagram_of(c);
  const Tolerances tol = default_tolerances(c);
  // (sin 2s, sin s) lies in the upper half plane for s in (0, pi).
  const double t = 0.25;
  ASSERT_GT(c.point_at(t).y, 0.5);
  const SideFaces s = side_faces_of_point(d, t, tol);
  const bool left_outer = s.left_face == d.unbounded_face();
  const bool right_outer = s.right_face == d.unbounded_face();
  EXPECT_NE(left_outer, right_outer);
  const int lobe = left_outer ? s.right_face : s.left_face;
  const Point2 inside = face_interior_point(d, lobe, tol);
  EXPECT_GT(inside.y, 0);
}

TEST(SideFaces, OnCrossingRejected) {
  const ClosedPolyline c = named_curve("figure_eight");
  const Diagram d = diagram_of(c);
  const Tolerances tol = default_tolerances(c);
  EXPECT_THROW(side_faces_of_point(d, d.crossings()[0].t_first, tol), OnCrossing);
  EXPECT_THROW(edge_at(d, d.crossings()[0].t_second, tol), OnCrossing);
}

TEST(FaceInteriorPoint, LiesInsideItsFace) {
  for (const ClosedPolyline& c : random_curves(20, 1200, 3, 6)) {
    const Tolerances tol = default_tolerances(c);
    const Diagram d = diagram_of(c);
    const RegionLabeling labels = alexander_numbering(d);
    for (const Face& f : d.faces()) {
      const Point2 p = face_interior_point(d, f.id, tol);
      EXPECT_EQ(oracle::winding(c.vertices(), p), labels[f.id]);
      EXPECT_GT(c.distance_to(p), tol.eps_pos);
    }
  }
}

TEST(FromCode, RebuildsGeometricDiagram) {
  for (const ClosedPolyline& c : random_curves(20, 1300, 2, 6)) {
    const Diagram d = diagram_of(c);
    const Diagram e = Diagram::from_code(d.code());
    EXPECT_EQ(e.code(), d.code());
    ASSERT_EQ(e.faces().size(), d.faces().size());
    for (std::size_t i = 0; i < d.darts().size(); ++i) {
      EXPECT_EQ(e.darts()[i].next_around_origin, d.darts()[i].next_around_origin);
      EXPECT_EQ(e.face_of(static_cast<int>(i)), d.face_of(static_cast<int>(i)));
    }
    EXPECT_EQ(e.unbounded_face(), d.unbounded_face());
    EXPECT_FALSE(e.has_geometry());
  }
}

TEST(FromCode, RejectsNonPlanarAndInconsistentCodes) {
  // The Gauss word 0101 has no plane realization whatever the chiralities.
  for (int a : {-1, 1}) {
    for (int b : {-1, 1}) {
      EXPECT_THROW(Diagram::from_code({{0, 1, 0, 1}, {a, b}, 0}), MalformedDiagram);
    }
  }
  EXPECT_THROW(Diagram::from_code({{0, 0, 0}, {1}, 0}), MalformedDiagram);
  EXPECT_THROW(Diagram::from_code({{1, 1}, {1, 1}, 0}), MalformedDiagram);
  EXPECT_THROW(Diagram::from_code({{0, 0}, {2}, 0}), MalformedDiagram);
  EXPECT_THROW(Diagram::from_code({{0, 0}, {1}, 9}), MalformedDiagram);
  EXPECT_NO_THROW(Diagram::from_code({{0, 0}, {1}, 0}));
  EXPECT_NO_THROW(Diagram::from_code({{}, {}, 1}));
}

TEST(Dump, RoundTripsThroughJson) {
  for (const ClosedPolyline& c : random_curves(10, 1400, 2, 6)) {
    const Diagram d = diagram_of(c);
    const std::string text = dump_diagram(d);
    const Diagram e = load_diagram(text);
    EXPECT_EQ(e.code(), d.code());
    EXPECT_EQ(dump_diagram(e).size() > 0, true);
  }
}

TEST(Dump, RejectsBadInput) {
  EXPECT_THROW(load_diagram("{not json"), ParseError);
  EXPECT_THROW(load_diagram("[1, 2]"), ParseError);
  EXPECT_THROW(load_diagram(R"({"format": "curvetopo-diagram", "version": 1})"), ParseError);
  EXPECT_THROW(load_diagram(R"({"format": "curvetopo-diagram", "version": 1,
      "passages": [0, 1, 0, 1], "chirality": [1, 1], "outer_dart": 0})"),
               MalformedDiagram);
}

TEST(Dump, DetectsTamperedTables) {
  const Diagram d = diagram_of(named_curve("figure_eight"));
  std::string text = dump_diagram(d);
  const std::string key = "\"next_around_origin\": ";
  const auto at = text.find(key);
  ASSERT_NE(at, std::string::npos);
  const std::size_t digit = at + key.size();
  text[digit] = text[digit] == '0' ? '1' : '0';
  EXPECT_THROW(load_diagram(text), MalformedDiagram);
}
