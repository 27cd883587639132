#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "curvetopo/errors.hpp"
#include "curvetopo/geometry.hpp"
#include "curvetopo/polyline.hpp"

namespace curvetopo {

/// A transverse double point of the curve. The two passages are ordered by
/// curve parameter: t_first < t_second.
struct Crossing {
  int id = 0;
  Point2 position;
  double t_first = 0.0;
  double t_second = 0.0;
  double angle = 0.0;  ///< unsigned angle between the two strands, in (0, pi)
  std::size_t segment_first = 0;
  std::size_t segment_second = 0;
  double s_first = 0.0;   ///< fraction along segment_first
  double s_second = 0.0;  ///< fraction along segment_second
};

enum class ViolationKind {
  Tangency,
  TripleOrHigherPoint,
  CrossingTooCloseToCrossing,
  CrossingTooCloseToVertexSample,
  SelfOverlap,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Point2 location;
  std::string detail;
};

struct GenericityReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const;
};

class GenericityViolation : public Error {
 public:
  explicit GenericityViolation(GenericityReport report);
  const GenericityReport& report() const { return report_; }

 private:
  GenericityReport report_;
};

/// Default tolerances for a curve: eps_pos scales with its extent.
Tolerances default_tolerances(const ClosedPolyline& curve);

/// Every proper intersection of two non-adjacent segments, sorted by
/// (t_first, t_second), with ids assigned in that order.
/// Throws GenericityViolation if the curve is not generic.
std::vector<Crossing> find_crossings(const ClosedPolyline& curve, const Tolerances& tol);

/// ok exactly when find_crossings would succeed. Only invalid tolerances
/// (a precondition) raise an exception.
GenericityReport validate_generic(const ClosedPolyline& curve, const Tolerances& tol);

}  // namespace curvetopo
