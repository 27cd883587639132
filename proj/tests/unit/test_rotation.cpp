#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "corpus.hpp"
#include "curvetopo/crossings.hpp"
#include "curvetopo/curvegen.hpp"
#include "curvetopo/errors.hpp"
#include "curvetopo/rotation.hpp"
#include "oracles.hpp"

using namespace curvetopo;
using testing_support::map_points;
using testing_support::random_curves;

namespace {

Analysis full(const ClosedPolyline& c) { return analyze_full(c, default_tolerances(c)); }

Analysis full_at_documented(std::string_view name) {
  const ClosedPolyline c = named_curve(name);
  return analyze_full(c, default_tolerances(c), documented_basepoint(name));
}

std::vector<int> signs_in_arrival_order(const Analysis& a, const Tolerances& tol) {
  const int edge = edge_at(a.diagram, a.report.basepoint_t, tol);
  const CrossingSigns s = crossing_signs(a.diagram, a.report.basepoint_t, tol);
  std::vector<int> out;
  for (int c : arrival_order(a.diagram, edge)) out.push_back(s.sign_by_crossing[c]);
  return out;
}

int count_of(const std::vector<int>& v, int x) {
  return static_cast<int>(std::count(v.begin(), v.end(), x));
}

}  // namespace

TEST(Turning, CircleOrientations) {
  const ClosedPolyline ccw = named_curve("circle_ccw");
  const ClosedPolyline cw = named_curve("circle_cw");
  EXPECT_EQ(rotation_turning(ccw, default_tolerances(ccw)), 1);
  EXPECT_EQ(rotation_turning(cw, default_tolerances(cw)), -1);
}

TEST(Turning, SquareIsOne) {
  const ClosedPolyline sq({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  EXPECT_EQ(rotation_turning(sq, default_tolerances(sq)), 1);
}

TEST(Turning, FigureEightMatchesOracleAtFineSampling) {
  const ClosedPolyline f8 = named_curve("figure_eight", 1024);
  EXPECT_EQ(rotation_turning(f8, default_tolerances(f8)), 0);
  EXPECT_EQ(oracle::turning(f8.vertices()), 0);
}

TEST(Turning, LimaconIsTwo) {
  const ClosedPolyline c = named_curve("limacon");
  EXPECT_EQ(rotation_turning(c, default_tolerances(c)), 2);
}

TEST(Turning, HairpinIsACusp) {
  const ClosedPolyline hairpin({{0, 0}, {2, 0}, {0, 1e-8}});
  EXPECT_THROW(rotation_turning(hairpin, default_tolerances(hairpin)), CuspDetected);
}

TEST(CrossingSigns, TwoCurlCurve) {
  const ClosedPolyline c = named_curve("paper_sec3_example");
  const Tolerances tol = default_tolerances(c);
  const Analysis a = analyze_full(c, tol, documented_basepoint("paper_sec3_example"));
  EXPECT_EQ(signs_in_arrival_order(a, tol), (std::vector<int>{-1, 1}));
  EXPECT_EQ(a.report.basepoint_ind, HalfInteger::from_twice(1));
  EXPECT_EQ(a.report.rotation_whitney, 1);
}

TEST(CrossingSigns, ExampleCurveSplit) {
  const ClosedPolyline c = named_curve("paper_example");
  const Tolerances tol = default_tolerances(c);
  const Analysis a = analyze_full(c, tol, documented_basepoint("paper_example"));
  const std::vector<int> s = signs_in_arrival_order(a, tol);
  EXPECT_EQ(count_of(s, 1), 5);
  EXPECT_EQ(count_of(s, -1), 3);
  EXPECT_EQ(a.report.basepoint_ind, HalfInteger::from_twice(1));
}

TEST(CrossingSigns, MatchOracleOnRandomCurves) {
  for (const ClosedPolyline& c : random_curves(30, 200, 3, 6)) {
    const Tolerances tol = default_tolerances(c);
    const Analysis a = analyze_full(c, tol);
    const double t = a.report.basepoint_t;
    const auto raw = oracle::crossings(c.vertices());
    ASSERT_EQ(raw.size(), a.diagram.crossings().size());
    const CrossingSigns s = crossing_signs(a.diagram, t, tol);
    for (const Crossing& x : a.diagram.crossings()) {
      const auto nearest = std::min_element(raw.begin(), raw.end(), [&](const auto& p, const auto& q) {
        return distance(p.position, x.position) < distance(q.position, x.position);
      });
      EXPECT_EQ(s.sign_by_crossing[x.id], oracle::whitney_sign(*nearest, t));
    }
  }
}

TEST(CrossingSigns, OnCrossingBasepointRejected) {
  const ClosedPolyline c = named_curve("figure_eight");
  const Tolerances tol = default_tolerances(c);
  const Analysis a = full(c);
  EXPECT_THROW(crossing_signs(a.diagram, a.diagram.crossings()[0].t_second, tol), OnCrossing);
}

TEST(Whitney, NamedCurves) {
  EXPECT_EQ(full_at_documented("circle_ccw").report.rotation_whitney, 1);
  EXPECT_EQ(full_at_documented("circle_cw").report.rotation_whitney, -1);
  EXPECT_EQ(full_at_documented("figure_eight").report.rotation_whitney, 0);
  EXPECT_EQ(full_at_documented("limacon").report.rotation_whitney, 2);
  EXPECT_EQ(full_at_documented("paper_example").report.rotation_whitney, 3);
}

TEST(Whitney, MatchesOracle) {
  for (const ClosedPolyline& c : random_curves(30, 210, 2, 6)) {
    const Analysis a = full(c);
    EXPECT_EQ(oracle::whitney(c.vertices(), a.report.basepoint_t), a.report.rotation_whitney);
  }
}

TEST(NewFormula, ExampleCurve) {
  const Analysis a = full(named_curve("paper_example"));
  EXPECT_EQ(a.labels.sum(), 11);
  EXPECT_EQ(a.winds.sum(), 8);
  EXPECT_EQ(rotation_new(a.labels, a.winds), 3);
}

TEST(NewFormula, TwoCurlCurve) {
  const Analysis a = full(named_curve("paper_sec3_example"));
  EXPECT_EQ(rotation_new(a.labels, a.winds), 1);
  EXPECT_EQ(a.report.euler.n_vertices, 2);
}

TEST(NewFormula, FigureEightAndCircle) {
  EXPECT_EQ(full(named_curve("figure_eight")).report.rotation_new, 0);
  EXPECT_EQ(full(named_curve("circle_cw")).report.rotation_new, -1);
}

TEST(Analyze, ReportTables) {
  const ClosedPolyline c = named_curve("limacon");
  const AnalysisReport r = analyze(c, default_tolerances(c));
  EXPECT_TRUE(r.agreement);
  EXPECT_EQ(r.crossing_table.size(), 1u);
  EXPECT_EQ(r.region_table.size(), 3u);
  EXPECT_EQ(std::count_if(r.region_table.begin(), r.region_table.end(),
                          [](const RegionRow& row) { return row.unbounded; }),
            1);
  EXPECT_EQ(r.euler.euler_characteristic, 2);
  EXPECT_EQ(r.crossing_table[0].wind, 1);
}

TEST(Analyze, DefaultBasepointIsOffCrossings) {
  for (const ClosedPolyline& c : random_curves(20, 220, 1, 6)) {
    const Tolerances tol = default_tolerances(c);
    const Analysis a = analyze_full(c, tol);
    EXPECT_NO_THROW(edge_at(a.diagram, a.report.basepoint_t, tol));
  }
  const Analysis circle = full(named_curve("circle_ccw"));
  EXPECT_DOUBLE_EQ(circle.report.basepoint_t, 0.5);
}

TEST(Analyze, ExplicitBasepointIsWrapped) {
  const ClosedPolyline c = named_curve("circle_ccw");
  EXPECT_DOUBLE_EQ(analyze(c, default_tolerances(c), 1.25).basepoint_t, 0.25);
}

TEST(RotationProperties, ThreeMethodsAgreeWithOracles) {
  for (const ClosedPolyline& c : random_curves(60, 230, 1, 6)) {
    const AnalysisReport r = analyze(c, default_tolerances(c));
    EXPECT_TRUE(r.agreement);
    EXPECT_EQ(r.rotation_turning, r.rotation_whitney);
    EXPECT_EQ(r.rotation_turning, r.rotation_new);
    EXPECT_EQ(oracle::turning(c.vertices()), r.rotation_turning);
  }
}

TEST(RotationProperties, WhitneyIndependentOfBasepointEdge) {
  for (const ClosedPolyline& c : random_curves(30, 240, 2, 6)) {
    const Analysis a = full(c);
    for (int e = 0; e < static_cast<int>(a.diagram.edges().size()); ++e) {
      EXPECT_EQ(rotation_whitney_from_edge(a.diagram, a.labels, e), a.report.rotation_turning);
    }
  }
}

TEST(RotationProperties, ReversalNegates) {
  for (const ClosedPolyline& c : random_curves(20, 250, 1, 6)) {
    const AnalysisReport a = analyze(c, default_tolerances(c));
    const ClosedPolyline r = c.reversed();
    const AnalysisReport b = analyze(r, default_tolerances(r));
    EXPECT_EQ(b.rotation_turning, -a.rotation_turning);
    EXPECT_EQ(b.rotation_new, -a.rotation_new);
    EXPECT_EQ(b.rotation_whitney, -a.rotation_whitney);
  }
}

TEST(RotationProperties, ReflectionNegates) {
  for (const ClosedPolyline& c : random_curves(20, 260, 1, 6)) {
    const ClosedPolyline m = map_points(c, [](Point2 p) { return Point2{p.x, -p.y}; });
    EXPECT_EQ(analyze(m, default_tolerances(m)).rotation_new,
              -analyze(c, default_tolerances(c)).rotation_new);
  }
}

TEST(RotationProperties, RigidMotionAndScaleInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI), shift(-50, 50), logscale(-3, 3);
  for (const ClosedPolyline& c : random_curves(20, 270, 1, 6)) {
    const AnalysisReport base = analyze(c, default_tolerances(c));
    const double th = angle(rng), dx = shift(rng), dy = shift(rng);
    const double k = std::pow(10.0, logscale(rng));
    const ClosedPolyline m = map_points(c, [&](Point2 p) {
      return Point2{k * (std::cos(th) * p.x - std::sin(th) * p.y) + dx,
                    k * (std::sin(th) * p.x + std::cos(th) * p.y) + dy};
    });
    const AnalysisReport r = analyze(m, default_tolerances(m));
    EXPECT_EQ(r.rotation_new, base.rotation_new);
    EXPECT_EQ(r.rotation_whitney, base.rotation_whitney);
    EXPECT_EQ(r.crossing_table.size(), base.crossing_table.size());
  }
}
