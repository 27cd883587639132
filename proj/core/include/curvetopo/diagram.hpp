#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvetopo/crossings.hpp"
#include "curvetopo/polyline.hpp"

namespace curvetopo {

/// Origin marker of the two darts of a crossing-free loop.
inline constexpr int kFreeOrigin = -1;

/// Half of an edge. Dart 2k runs along edge k in the direction of travel,
/// dart 2k + 1 runs against it.
struct Dart {
  int id = 0;
  int edge = 0;
  int origin = kFreeOrigin;    ///< crossing id, or kFreeOrigin
  int next_around_origin = 0;  ///< counterclockwise successor at the origin
  int reverse = 0;
  bool along_orientation = true;
};

/// Arc of the curve between two consecutive passages through crossings.
/// Edge k starts at passage k and ends at passage k + 1.
struct Edge {
  int forward_dart = 0;
  int backward_dart = 0;
  std::vector<Point2> arc;  ///< empty for diagrams without geometry
  double t_start = 0.0;
  double t_end = 0.0;  ///< may be smaller than t_start on the edge through t = 0
};

struct Face {
  int id = 0;
  std::vector<int> boundary;  ///< darts with this face on their left, in walk order
  bool is_unbounded = false;
};

/// Crossing as seen from the traversal: the indices of its two passages and
/// its chirality relative to a traversal starting at passage 0.
struct CrossingVertex {
  int id = 0;
  int first_passage = 0;
  int second_passage = 0;
  /// +1 when the later strand crosses the earlier one from left to right.
  int chirality = 0;
};

/// Complete combinatorial description of a plane curve diagram.
///
/// passages[k] is the crossing met at the k-th passage. Crossing ids are
/// dense and numbered by first visit. outer_dart is any dart lying on the
/// unbounded face. With no crossings the diagram is a single loop.
struct DiagramCode {
  std::vector<int> passages;
  std::vector<int> chirality;
  int outer_dart = 0;

  friend bool operator==(const DiagramCode&, const DiagramCode&) = default;
};

struct EulerStats {
  int n_vertices = 0;
  int n_edges = 0;
  int n_faces = 0;
  int euler_characteristic = 0;
};

struct SideFaces {
  int left_face = 0;
  int right_face = 0;
};

/// 4-regular plane multigraph induced by a generic closed curve: crossings
/// are vertices, arcs between consecutive crossings are edges, regions are
/// faces. Immutable once built.
///
/// A curve without crossings is represented by a single loop edge through an
/// artificial vertex at t = 0, giving V = 1, E = 1, F = 2.
class Diagram {
 public:
  /// Builds the diagram described by `code`. Throws MalformedDiagram if the
  /// code is inconsistent or does not describe a plane curve.
  static Diagram from_code(const DiagramCode& code);

  const DiagramCode& code() const { return code_; }
  const std::vector<CrossingVertex>& vertices() const { return vertices_; }
  const std::vector<Dart>& darts() const { return darts_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  int crossing_count() const { return static_cast<int>(vertices_.size()); }
  int passage_count() const { return static_cast<int>(code_.passages.size()); }

  /// Geometric crossings; empty when the diagram was built from a code alone.
  const std::vector<Crossing>& crossings() const { return crossings_; }
  bool has_geometry() const { return curve_.has_value(); }
  /// Source curve. Requires has_geometry().
  const ClosedPolyline& curve() const;

  /// Face on the left of dart d.
  int face_of(int dart) const { return face_of_dart_[dart]; }
  int left_face(int edge) const { return face_of(edges_[edge].forward_dart); }
  int right_face(int edge) const { return face_of(edges_[edge].backward_dart); }
  int unbounded_face() const { return unbounded_face_; }

  /// Successor of d on the boundary of its face.
  int next_in_face(int dart) const;
  int prev_around_origin(int dart) const { return prev_around_[dart]; }

  /// Outgoing darts at crossing c in counterclockwise order, starting with
  /// the dart leaving along the first passage.
  std::array<int, 4> darts_around(int crossing) const;

  /// Dart leaving crossing-passage p in the direction of travel, and the
  /// dart leaving the same crossing back along the arc that arrives at p.
  int outgoing_dart(int passage) const { return 2 * passage; }
  int incoming_reverse_dart(int passage) const;

 private:
  friend Diagram build_diagram(const ClosedPolyline&, const std::vector<Crossing>&,
                               const Tolerances&);

  void assemble_darts();
  void trace_faces();
  void check_euler() const;

  DiagramCode code_;
  std::vector<CrossingVertex> vertices_;
  std::vector<Dart> darts_;
  std::vector<int> prev_around_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<int> face_of_dart_;
  int unbounded_face_ = 0;
  std::vector<Crossing> crossings_;
  std::optional<ClosedPolyline> curve_;
};

/// Builds the diagram of a curve from its crossings (as returned by
/// find_crossings). Rotation at each crossing comes from the directions of
/// the four incident arc stubs; the unbounded face is the unique face whose
/// boundary has negative signed area.
Diagram build_diagram(const ClosedPolyline& curve, const std::vector<Crossing>& crossings,
                      const Tolerances& tol);

EulerStats euler_stats(const Diagram& d);

/// Edge containing curve parameter t. Throws OnCrossing when t lies within
/// tolerance of a crossing parameter. Requires geometry.
int edge_at(const Diagram& d, double t, const Tolerances& tol);

/// Faces flanking the curve at parameter t, on the traveler's left and right.
SideFaces side_faces_of_point(const Diagram& d, double t, const Tolerances& tol);

/// Point strictly inside face f, found by offsetting the midpoint of a
/// boundary segment into the face. Requires geometry.
Point2 face_interior_point(const Diagram& d, int face, const Tolerances& tol);

/// Closed boundary polygon of face f (face on the left). Requires geometry.
std::vector<Point2> face_polygon(const Diagram& d, int face);

/// JSON debug dump: crossings, darts with rotation order and face cycles,
/// together with the code that reproduces the diagram.
std::string dump_diagram(const Diagram& d);

/// Reads a dump produced by dump_diagram. Only the code is needed to rebuild;
/// the dart and face tables, when present, are checked against the rebuild.
/// Throws ParseError or MalformedDiagram.
Diagram load_diagram(std::string_view json_text);

}  // namespace curvetopo
