// One line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "curvetopo/crossings.hpp"
#include "curvetopo/curve_file.hpp"
#include "curvetopo/curvegen.hpp"
#include "curvetopo/moves.hpp"
#include "curvetopo/rotation.hpp"
#include "curvetopo_cli/cli.hpp"

using namespace curvetopo;
using testing_support::data_path;
using testing_support::sorted;

namespace {

// Pinned limits. Every other comparison is exact integer equality.
constexpr double kCheckSecondsLimit = 60.0;
constexpr int kCheckTrials = 1000;
constexpr int kBasepointCurves = 100;
constexpr int kLabelingCurves = 100;
constexpr int kRayDirections = 16;
constexpr int kMoveCorpusSize = 60;
constexpr int kSymmetryCurves = 40;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Analysis full(const ClosedPolyline& c) { return analyze_full(c, default_tolerances(c)); }

ClosedPolyline fixture(const std::string& name) {
  return read_curve_file(data_path(name)).to_polyline();
}

std::string three(const AnalysisReport& r) {
  return std::to_string(r.rotation_turning) + "/" + std::to_string(r.rotation_whitney) + "/" +
         std::to_string(r.rotation_new);
}

bool all_equal(const AnalysisReport& r, int value) {
  return r.rotation_turning == value && r.rotation_whitney == value && r.rotation_new == value;
}

std::vector<int> arrival_signs(const Analysis& a, const Tolerances& tol) {
  const int edge = edge_at(a.diagram, a.report.basepoint_t, tol);
  const auto signs = crossing_signs(a.diagram, a.report.basepoint_t, tol).sign_by_crossing;
  std::vector<int> out;
  for (int c : arrival_order(a.diagram, edge)) out.push_back(signs[c]);
  return out;
}

std::vector<ClosedPolyline> generated_curves(int count, std::uint64_t seed0) {
  return testing_support::random_curves(count, seed0, 2, 6);
}

Outcome triple_agreement() {
  Outcome o;
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::run({"check", "--trials", std::to_string(kCheckTrials), "--max-order", "6",
                             "--seed", "0"},
                            out, err);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::string expect = "agree: " + std::to_string(kCheckTrials) + "/" +
                             std::to_string(kCheckTrials);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s in %.2f s (limit %.0f s)", expect.c_str(), seconds,
                kCheckSecondsLimit);
  o.detail = buf;
  if (code != cli::kOk) o.fail("check exited " + std::to_string(code) + ": " + err.str());
  if (out.str().find(expect) == std::string::npos) o.fail("summary: " + out.str());
  if (seconds >= kCheckSecondsLimit) o.fail(buf);
  return o;
}

Outcome example_curve_aggregates() {
  Outcome o;
  const ClosedPolyline c = fixture("paper_example.json");
  const Tolerances tol = default_tolerances(c);
  const Analysis a = analyze_full(c, tol, documented_basepoint("paper_example"));
  const std::vector<int> signs = arrival_signs(a, tol);
  const int positive = static_cast<int>(std::count(signs.begin(), signs.end(), 1));
  const int negative = static_cast<int>(std::count(signs.begin(), signs.end(), -1));
  bool winds_one = true;
  for (int w : a.winds.wind_by_crossing) winds_one = winds_one && w == 1;
  o.detail = "n=" + std::to_string(a.diagram.crossing_count()) +
             " sum(region)=" + std::to_string(a.labels.sum()) + " signs +" +
             std::to_string(positive) + "/-" + std::to_string(negative) + " ind=" +
             std::to_string(a.report.basepoint_ind.twice()) + "/2 rotations " + three(a.report);
  if (a.diagram.crossing_count() != 8) o.fail(o.detail);
  if (!winds_one) o.fail("a crossing wind differs from 1");
  if (a.labels.sum() != 11 || a.winds.sum() != 8) o.fail(o.detail);
  if (positive != 5 || negative != 3) o.fail(o.detail);
  if (a.report.basepoint_ind != HalfInteger::from_twice(1)) o.fail(o.detail);
  if (!all_equal(a.report, 3)) o.fail(o.detail);
  return o;
}

Outcome two_curl_aggregates() {
  Outcome o;
  const ClosedPolyline c = fixture("paper_sec3_example.json");
  const Tolerances tol = default_tolerances(c);
  const Analysis a = analyze_full(c, tol, documented_basepoint("paper_sec3_example"));
  const std::vector<int> signs = arrival_signs(a, tol);
  o.detail = "n=" + std::to_string(signs.size()) + " signs (" +
             (signs.size() == 2 ? std::to_string(signs[0]) + ", " + std::to_string(signs[1])
                                : std::string("?")) +
             ") ind=" + std::to_string(a.report.basepoint_ind.twice()) + "/2 rotations " +
             three(a.report);
  if (signs != std::vector<int>{-1, 1}) o.fail(o.detail);
  if (a.report.basepoint_ind != HalfInteger::from_twice(1)) o.fail(o.detail);
  if (!all_equal(a.report, 1)) o.fail(o.detail);
  return o;
}

Outcome named_regression() {
  Outcome o;
  const std::pair<const char*, int> expected[] = {
      {"circle_ccw", 1}, {"circle_cw", -1}, {"figure_eight", 0}, {"limacon", 2}};
  for (const auto& [name, value] : expected) {
    const AnalysisReport r = full(fixture(std::string(name) + ".json")).report;
    o.detail += std::string(o.detail.empty() ? "" : ", ") + name + " " + three(r);
    if (!all_equal(r, value)) o.fail(std::string(name) + " gave " + three(r));
  }
  return o;
}

Outcome basepoint_independence() {
  Outcome o;
  int evaluations = 0;
  for (const ClosedPolyline& c : generated_curves(kBasepointCurves, 5000)) {
    const Analysis a = full(c);
    for (int e = 0; e < static_cast<int>(a.diagram.edges().size()); ++e) {
      ++evaluations;
      const int w = rotation_whitney_from_edge(a.diagram, a.labels, e);
      if (w != a.report.rotation_whitney) {
        o.fail("edge " + std::to_string(e) + " gives " + std::to_string(w));
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(kBasepointCurves) + " curves, " + std::to_string(evaluations) +
               " basepoint edges";
  }
  return o;
}

Outcome labeling_conformance() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  int faces = 0;
  std::vector<ClosedPolyline> curves = generated_curves(kLabelingCurves, 6000);
  for (const std::string& name : named_curve_names()) curves.push_back(named_curve(name));
  for (const ClosedPolyline& c : curves) {
    const Tolerances tol = default_tolerances(c);
    const Analysis a = analyze_full(c, tol);
    if (const std::string v = testing_support::labeling_violation(a.diagram, a.labels); !v.empty()) {
      o.fail(v);
    }
    for (const Face& f : a.diagram.faces()) {
      ++faces;
      const Point2 p = face_interior_point(a.diagram, f.id, tol);
      const int w = wind_point(c, p, tol);
      if (w != a.labels[f.id]) o.fail("wind_point " + std::to_string(w) + " vs label");
      for (int k = 0; k < kRayDirections; ++k) {
        const double t = angle(rng);
        if (wind_point_ray(c, p, {std::cos(t), std::sin(t)}, tol) != w) o.fail("ray disagrees");
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(curves.size()) + " diagrams, " + std::to_string(faces) + " faces, " +
               std::to_string(kRayDirections) + " rays each";
  }
  return o;
}

Outcome euler_counts() {
  Outcome o;
  int checked = 0;
  for (const ClosedPolyline& c : generated_curves(200, 7000)) {
    const Analysis a = full(c);
    const int n = a.diagram.crossing_count();
    if (n == 0) continue;
    ++checked;
    const EulerStats s = euler_stats(a.diagram);
    if (s.n_faces != n + 2 || s.n_edges != 2 * n || s.n_vertices != n ||
        s.euler_characteristic != 2) {
      o.fail("n=" + std::to_string(n) + " gives V,E,F " + std::to_string(s.n_vertices) + "," +
             std::to_string(s.n_edges) + "," + std::to_string(s.n_faces));
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " diagrams with n >= 1";
  return o;
}

Outcome move_deltas() {
  Outcome o;
  const std::vector<Diagram> corpus = testing_support::move_corpus(kMoveCorpusSize, 8000);
  int applied = 0;
  for (const Diagram& d : corpus) {
    const RegionLabeling labels = alexander_numbering(d);
    const int d0 = diagram_d(d);
    for (MoveType t : {MoveType::M1a, MoveType::M1b, MoveType::M2a, MoveType::M3a}) {
      for (MoveDirection dir : {MoveDirection::Forward, MoveDirection::Backward}) {
        const MoveKind kind{t, dir};
        for (const MoveSite& site : find_move_sites(d, labels, kind)) {
          ++applied;
          const MoveOutcome out = apply_move(d, labels, site);
          const std::string name = to_string(kind);
          if (out.delta_d != expected_delta_d(kind) ||
              diagram_d(out.diagram) - d0 != expected_delta_d(kind)) {
            o.fail(name + " delta_d " + std::to_string(out.delta_d));
          }
          if (!testing_support::labeling_violation(out.diagram, out.labels).empty()) {
            o.fail(name + " breaks the labeling");
          }
          if (!out.inverse_site) {
            o.fail(name + " has no inverse site");
            continue;
          }
          const MoveOutcome back = apply_move(out.diagram, out.labels, *out.inverse_site);
          if (diagram_d(back.diagram) != d0 ||
              sorted(back.labels.wind_by_face) != sorted(labels.wind_by_face)) {
            o.fail(name + " round trip does not restore d and labels");
          }
        }
      }
    }
  }
  if (o.pass) {
    o.detail = std::to_string(corpus.size()) + " diagrams, " + std::to_string(applied) +
               " moves with round trips";
  }
  return o;
}

struct Integers {
  std::vector<int> regions, crossings;
  int turning, whitney, rotation_new, n, e, f;

  static Integers of(const Analysis& a) {
    return {sorted(a.labels.wind_by_face),
            sorted(a.winds.wind_by_crossing),
            a.report.rotation_turning,
            a.report.rotation_whitney,
            a.report.rotation_new,
            a.report.euler.n_vertices,
            a.report.euler.n_edges,
            a.report.euler.n_faces};
  }
  bool operator==(const Integers&) const = default;
};

std::vector<int> negated(std::vector<int> v) {
  for (int& x : v) x = -x;
  return sorted(v);
}

Outcome symmetry() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI), shift(-100, 100);
  const double scales[] = {1e-3, 1e-2, 0.5, 7.0, 1e2, 1e3};
  int variants = 0;
  for (const ClosedPolyline& c : generated_curves(kSymmetryCurves, 9000)) {
    const Integers base = Integers::of(full(c));
    const Integers rev = Integers::of(full(c.reversed()));
    ++variants;
    if (rev.regions != negated(base.regions) || rev.crossings != negated(base.crossings) ||
        rev.turning != -base.turning || rev.whitney != -base.whitney ||
        rev.rotation_new != -base.rotation_new) {
      o.fail("reversal does not negate");
    }
    for (double k : scales) {
      const double th = angle(rng), dx = shift(rng), dy = shift(rng);
      const ClosedPolyline m = testing_support::map_points(c, [&](Point2 p) {
        return Point2{k * (std::cos(th) * p.x - std::sin(th) * p.y) + dx,
                      k * (std::sin(th) * p.x + std::cos(th) * p.y) + dy};
      });
      ++variants;
      if (!(Integers::of(full(m)) == base)) o.fail("motion with scale " + std::to_string(k));
    }
  }
  if (o.pass) o.detail = std::to_string(variants) + " transformed curves";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"triple agreement on 1000 random curves", triple_agreement},
      {"example curve aggregates", example_curve_aggregates},
      {"two-curl curve aggregates", two_curl_aggregates},
      {"named-curve regression", named_regression},
      {"basepoint independence", basepoint_independence},
      {"labeling, winding and ray conformance", labeling_conformance},
      {"Euler counts", euler_counts},
      {"move deltas and round trips", move_deltas},
      {"reversal, rigid motion and scaling", symmetry},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += o.pass ? 0 : 1;
    std::printf("[%s] criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
