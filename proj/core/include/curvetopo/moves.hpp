#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvetopo/diagram.hpp"
#include "curvetopo/winding.hpp"

namespace curvetopo {

// Oriented elementary moves, applied to the combinatorial diagram.
//
//   M1a forward  inserts a curl on the right of an arc (clockwise loop), d - 1
//   M1b forward  inserts a curl on the left of an arc (counterclockwise loop), d + 1
//   M2a forward  pushes one strand across a codirectional neighbour, adding a bigon
//   M3a          slides a strand across the crossing of two others
//
// Backward moves undo these: M1 removes a bounded monogon, M2a removes a
// bounded bigon whose two sides run the same way. M3a is its own inverse and
// accepts non-cyclic triangles in both directions.

enum class MoveType { M1a, M1b, M2a, M3a };
enum class MoveDirection { Forward, Backward };

struct MoveKind {
  MoveType type = MoveType::M1a;
  MoveDirection direction = MoveDirection::Forward;

  friend bool operator==(MoveKind, MoveKind) = default;
};

std::string to_string(MoveKind kind);
std::string_view to_string(MoveType type);
std::string_view to_string(MoveDirection direction);
MoveType parse_move_type(std::string_view text);
MoveDirection parse_move_direction(std::string_view text);

/// Change of d prescribed for a move kind.
int expected_delta_d(MoveKind kind);
/// Change of crossing count prescribed for a move kind.
int expected_delta_crossings(MoveKind kind);

/// Location of a move.
///
/// M1 forward: [forward dart of the edge receiving the curl].
/// M1 backward: [the monogon's dart].
/// M2a forward: [along dart, against dart], both on one face; the strand of
///   the second is pushed across the strand of the first through that face.
/// M2a backward: [along dart, against dart] of a bigon face.
/// M3a: the three darts of a triangle face, in boundary order.
struct MoveSite {
  MoveKind kind;
  std::vector<int> anchor_darts;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

struct MoveOutcome {
  Diagram diagram;
  RegionLabeling labels;
  CrossingWinds cw;
  int delta_d = 0;
  int delta_crossings = 0;
  /// Site in the new diagram that undoes this move.
  std::optional<MoveSite> inverse_site;
};

/// Every site of `kind` in d. Backward and M3a sites are bounded faces of the
/// required shape; forward M1 sites are one per edge; forward M2a sites are
/// one per edge: the edge's forward dart paired with the first against-dart
/// that follows it on the boundary of its left face.
std::vector<MoveSite> find_move_sites(const Diagram& d, const RegionLabeling& labels, MoveKind kind);

/// Applies the move and relabels. Throws InvalidSite if the site does not
/// match its kind in d and DisconnectingMove if an M2a rewrite would merge a
/// face with itself.
MoveOutcome apply_move(const Diagram& d, const RegionLabeling& labels, const MoveSite& site);

/// Which of the six regions around an M3a triangle are the same face.
///
/// Sub-regions are numbered walking the triangle boundary from its first
/// anchor dart: odd numbers are the faces across the triangle's sides, even
/// numbers the faces at the corners opposite the triangle.
struct SubregionClassification {
  std::array<int, 6> faces{};
  /// Groups of coinciding sub-region numbers (1-based), each sorted, groups
  /// ordered by their smallest member. Empty when all are distinct.
  std::vector<std::vector<int>> coincident;

  /// "all distinct", or groups such as "1=3" and "1=3=5, 2=4" joined by ", ".
  std::string description() const;
};

/// Requires an M3a site.
SubregionClassification shared_subregion_check(const Diagram& d, const MoveSite& site);

/// d computed directly from a diagram.
int diagram_d(const Diagram& d);

}  // namespace curvetopo
