#pragma once

#include <vector>

#include "curvetopo/crossings.hpp"
#include "curvetopo/diagram.hpp"
#include "curvetopo/winding.hpp"

namespace curvetopo {

/// Degree of the unit tangent: total exterior angle over 2 pi.
/// Throws CuspDetected when an exterior angle is within eps_angle of pi and
/// NonIntegerTurning when the total misses an integer by more than eps_int.
int rotation_turning(const ClosedPolyline& curve, const Tolerances& tol);

/// Whitney sign of crossing c for a base point on edge `basepoint_edge`.
///
/// Walking from the base point, the strand reaching c first is the first
/// branch. The sign is +1 when the second branch crosses the first from left
/// to right, which in the rotation system means the dart following the first
/// branch's outgoing dart counterclockwise is the reverse of the second
/// branch's incoming arc.
int crossing_sign_from_edge(const Diagram& d, int basepoint_edge, int crossing);

/// Same as crossing_sign_from_edge with the base point at curve parameter t.
int crossing_sign(const Diagram& d, double basepoint_t, int crossing, const Tolerances& tol);

struct CrossingSigns {
  double basepoint_t = 0.0;
  std::vector<int> sign_by_crossing;
};

CrossingSigns crossing_signs(const Diagram& d, double basepoint_t, const Tolerances& tol);

/// Crossings in the order they are first reached walking from the base point.
std::vector<int> arrival_order(const Diagram& d, int basepoint_edge);

/// Sum of crossing signs plus twice the index of the base point.
int rotation_whitney_from_edge(const Diagram& d, const RegionLabeling& labels, int basepoint_edge);
int rotation_whitney(const Diagram& d, const RegionLabeling& labels, double basepoint_t,
                     const Tolerances& tol);

/// Sum of all region labels minus the sum of all crossing winds.
int rotation_new(const RegionLabeling& labels, const CrossingWinds& winds);

/// Midpoint of the longest arc between consecutive crossings
/// (t = 0.5 for a crossing-free curve). Requires geometry.
double default_basepoint(const Diagram& d);

struct RegionRow {
  int face = 0;
  int wind = 0;
  bool unbounded = false;
};

struct CrossingRow {
  int id = 0;
  Point2 position;
  double t_first = 0.0;
  double t_second = 0.0;
  int wind = 0;
  int sign = 0;  ///< relative to the report's base point
};

struct AnalysisReport {
  int rotation_turning = 0;
  int rotation_whitney = 0;
  int rotation_new = 0;
  bool agreement = false;
  double basepoint_t = 0.0;
  HalfInteger basepoint_ind;
  std::vector<RegionRow> region_table;
  std::vector<CrossingRow> crossing_table;
  EulerStats euler;
};

/// find_crossings -> build_diagram -> labeling -> crossing winds -> the three
/// rotation numbers, with the base point from default_basepoint.
AnalysisReport analyze(const ClosedPolyline& curve, const Tolerances& tol);
AnalysisReport analyze(const ClosedPolyline& curve, const Tolerances& tol, double basepoint_t);

/// The pipeline's intermediate products, for callers that need more than the
/// report.
struct Analysis {
  Diagram diagram;
  RegionLabeling labels;
  CrossingWinds winds;
  AnalysisReport report;
};

Analysis analyze_full(const ClosedPolyline& curve, const Tolerances& tol);
Analysis analyze_full(const ClosedPolyline& curve, const Tolerances& tol, double basepoint_t);

}  // namespace curvetopo
