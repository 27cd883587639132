#include "curvetopo/rotation.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "curvetopo/errors.hpp"

namespace curvetopo {

int rotation_turning(const ClosedPolyline& curve, const Tolerances& tol) {
  const std::size_t m = curve.size();
  double total = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double turn = signed_angle(curve.segment_vector(i + m - 1), curve.segment_vector(i));
    if (std::abs(turn) > std::numbers::pi - tol.eps_angle) {
      throw CuspDetected("the curve reverses direction at vertex " + std::to_string(i));
    }
    total += turn;
  }
  const double turns = total / (2.0 * std::numbers::pi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > tol.eps_int) {
    throw NonIntegerTurning("total turning " + std::to_string(turns) + " is not an integer");
  }
  return static_cast<int>(rounded);
}

int crossing_sign_from_edge(const Diagram& d, int basepoint_edge, int crossing) {
  const int count = d.passage_count();
  const CrossingVertex& v = d.vertices().at(crossing);
  const int start = (basepoint_edge + 1) % count;
  const auto steps = [&](int passage) { return (passage - start + count) % count; };
  const bool a_first = steps(v.first_passage) < steps(v.second_passage);
  const int first = a_first ? v.first_passage : v.second_passage;
  const int second = a_first ? v.second_passage : v.first_passage;
  // The second branch travels from the first branch's left to its right
  // exactly when its incoming arc sits counterclockwise next to the first
  // branch's outgoing arc.
  const int after = d.darts()[d.outgoing_dart(first)].next_around_origin;
  return after == d.incoming_reverse_dart(second) ? 1 : -1;
}

int crossing_sign(const Diagram& d, double basepoint_t, int crossing, const Tolerances& tol) {
  return crossing_sign_from_edge(d, edge_at(d, basepoint_t, tol), crossing);
}

CrossingSigns crossing_signs(const Diagram& d, double basepoint_t, const Tolerances& tol) {
  const int edge = edge_at(d, basepoint_t, tol);
  CrossingSigns signs;
  signs.basepoint_t = basepoint_t;
  signs.sign_by_crossing.resize(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    signs.sign_by_crossing[c] = crossing_sign_from_edge(d, edge, c);
  }
  return signs;
}

std::vector<int> arrival_order(const Diagram& d, int basepoint_edge) {
  const int count = d.passage_count();
  std::vector<int> order;
  std::vector<bool> seen(d.crossing_count(), false);
  for (int k = 1; k <= count; ++k) {
    const int c = d.code().passages[(basepoint_edge + k) % count];
    if (!seen[c]) {
      seen[c] = true;
      order.push_back(c);
    }
  }
  return order;
}

int rotation_whitney_from_edge(const Diagram& d, const RegionLabeling& labels, int basepoint_edge) {
  int total = ind_on_edge(d, labels, basepoint_edge).twice();
  for (int c = 0; c < d.crossing_count(); ++c) {
    total += crossing_sign_from_edge(d, basepoint_edge, c);
  }
  return total;
}

int rotation_whitney(const Diagram& d, const RegionLabeling& labels, double basepoint_t,
                     const Tolerances& tol) {
  return rotation_whitney_from_edge(d, labels, edge_at(d, basepoint_t, tol));
}

int rotation_new(const RegionLabeling& labels, const CrossingWinds& winds) {
  return static_cast<int>(labels.sum() - winds.sum());
}

double default_basepoint(const Diagram& d) {
  if (d.crossing_count() == 0) {
    return 0.5;
  }
  double best_span = -1.0;
  double best_t = 0.0;
  for (const Edge& e : d.edges()) {
    const double span = wrap_param(e.t_end - e.t_start);
    if (span > best_span) {
      best_span = span;
      best_t = wrap_param(e.t_start + 0.5 * span);
    }
  }
  return best_t;
}

namespace {

Analysis run_pipeline(const ClosedPolyline& curve, const Tolerances& tol,
                      std::optional<double> basepoint_t) {
  const std::vector<Crossing> crossings = find_crossings(curve, tol);
  Diagram diagram = build_diagram(curve, crossings, tol);
  RegionLabeling labels = alexander_numbering(diagram);
  CrossingWinds winds = crossing_winds(diagram, labels);

  AnalysisReport report;
  report.basepoint_t = wrap_param(basepoint_t.value_or(default_basepoint(diagram)));
  const int edge = edge_at(diagram, report.basepoint_t, tol);
  report.rotation_turning = rotation_turning(curve, tol);
  report.rotation_whitney = rotation_whitney_from_edge(diagram, labels, edge);
  report.rotation_new = rotation_new(labels, winds);
  report.agreement = report.rotation_turning == report.rotation_whitney &&
                     report.rotation_whitney == report.rotation_new;
  report.basepoint_ind = ind_on_edge(diagram, labels, edge);
  for (const Face& face : diagram.faces()) {
    report.region_table.push_back({face.id, labels[face.id], face.is_unbounded});
  }
  for (const Crossing& c : diagram.crossings()) {
    report.crossing_table.push_back({c.id, c.position, c.t_first, c.t_second, winds[c.id],
                                     crossing_sign_from_edge(diagram, edge, c.id)});
  }
  report.euler = euler_stats(diagram);
  return Analysis{std::move(diagram), std::move(labels), std::move(winds), std::move(report)};
}

}  // namespace

Analysis analyze_full(const ClosedPolyline& curve, const Tolerances& tol) {
  return run_pipeline(curve, tol, std::nullopt);
}

Analysis analyze_full(const ClosedPolyline& curve, const Tolerances& tol, double basepoint_t) {
  return run_pipeline(curve, tol, basepoint_t);
}

AnalysisReport analyze(const ClosedPolyline& curve, const Tolerances& tol) {
  return analyze_full(curve, tol).report;
}

AnalysisReport analyze(const ClosedPolyline& curve, const Tolerances& tol, double basepoint_t) {
  return analyze_full(curve, tol, basepoint_t).report;
}

}  // namespace curvetopo
