#include "curvetopo/moves.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "curvetopo/errors.hpp"
#include "curvetopo/rotation.hpp"

namespace curvetopo {

std::string_view to_string(MoveType type) {
  switch (type) {
    case MoveType::M1a: return "M1a";
    case MoveType::M1b: return "M1b";
    case MoveType::M2a: return "M2a";
    case MoveType::M3a: return "M3a";
  }
  return "?";
}

std::string_view to_string(MoveDirection direction) {
  return direction == MoveDirection::Forward ? "forward" : "backward";
}

std::string to_string(MoveKind kind) {
  return std::string(to_string(kind.type)) + " " + std::string(to_string(kind.direction));
}

MoveType parse_move_type(std::string_view text) {
  if (text == "M1a") return MoveType::M1a;
  if (text == "M1b") return MoveType::M1b;
  if (text == "M2a") return MoveType::M2a;
  if (text == "M3a") return MoveType::M3a;
  throw ParseError("unknown move type '" + std::string(text) + "'");
}

MoveDirection parse_move_direction(std::string_view text) {
  if (text == "forward" || text == "fwd") return MoveDirection::Forward;
  if (text == "backward" || text == "bwd") return MoveDirection::Backward;
  throw ParseError("unknown move direction '" + std::string(text) + "'");
}

int expected_delta_d(MoveKind kind) {
  const int sign = kind.direction == MoveDirection::Forward ? 1 : -1;
  switch (kind.type) {
    case MoveType::M1a: return -sign;
    case MoveType::M1b: return sign;
    case MoveType::M2a:
    case MoveType::M3a: return 0;
  }
  return 0;
}

int expected_delta_crossings(MoveKind kind) {
  const int sign = kind.direction == MoveDirection::Forward ? 1 : -1;
  switch (kind.type) {
    case MoveType::M1a:
    case MoveType::M1b: return sign;
    case MoveType::M2a: return 2 * sign;
    case MoveType::M3a: return 0;
  }
  return 0;
}

int diagram_d(const Diagram& d) {
  const RegionLabeling labels = alexander_numbering(d);
  return rotation_new(labels, crossing_winds(d, labels));
}

namespace {

[[noreturn]] void invalid(const MoveSite& site, const std::string& why) {
  throw InvalidSite(to_string(site.kind) + " site: " + why);
}

const Dart& dart_at(const Diagram& d, const MoveSite& site, int dart) {
  if (dart < 0 || dart >= static_cast<int>(d.darts().size())) {
    invalid(site, "dart " + std::to_string(dart) + " does not exist");
  }
  return d.darts()[dart];
}

bool is_bounded_face(const Diagram& d, int face) { return face != d.unbounded_face(); }

// Curl classification of a bounded monogon: M1a when the loop runs clockwise
// (its inside is numbered one below the face around it), M1b otherwise.
std::optional<MoveType> monogon_type(const Diagram& d, const RegionLabeling& labels, int dart) {
  const int face = d.face_of(dart);
  if (!is_bounded_face(d, face) || d.faces()[face].boundary.size() != 1 ||
      d.darts()[dart].origin == kFreeOrigin) {
    return std::nullopt;
  }
  const int host = d.face_of(d.darts()[dart].reverse);
  const int diff = labels[face] - labels[host];
  if (diff == -1) return MoveType::M1a;
  if (diff == 1) return MoveType::M1b;
  return std::nullopt;
}

bool is_codirectional_bigon(const Diagram& d, int along, int against) {
  const Dart& a = d.darts()[along];
  const Dart& b = d.darts()[against];
  const int face = d.face_of(along);
  return a.along_orientation && !b.along_orientation && d.face_of(against) == face &&
         is_bounded_face(d, face) && d.faces()[face].boundary.size() == 2 &&
         a.origin != b.origin && a.origin != kFreeOrigin;
}

bool is_m3a_triangle(const Diagram& d, int face) {
  const Face& f = d.faces()[face];
  if (!is_bounded_face(d, face) || f.boundary.size() != 3) {
    return false;
  }
  std::set<int> origins;
  int along = 0;
  for (int dart : f.boundary) {
    origins.insert(d.darts()[dart].origin);
    along += d.darts()[dart].along_orientation ? 1 : 0;
  }
  return origins.size() == 3 && !origins.contains(kFreeOrigin) && along != 0 && along != 3;
}

void validate_site(const Diagram& d, const RegionLabeling& labels, const MoveSite& site) {
  const auto& anchors = site.anchor_darts;
  for (int dart : anchors) {
    dart_at(d, site, dart);
  }
  const MoveKind kind = site.kind;
  switch (kind.type) {
    case MoveType::M1a:
    case MoveType::M1b:
      if (anchors.size() != 1) invalid(site, "expected one anchor dart");
      if (kind.direction == MoveDirection::Forward) {
        if (!d.darts()[anchors[0]].along_orientation) {
          invalid(site, "anchor must be the forward dart of an edge");
        }
      } else if (monogon_type(d, labels, anchors[0]) != kind.type) {
        invalid(site, "anchor is not a matching bounded monogon");
      }
      return;
    case MoveType::M2a:
      if (anchors.size() != 2) invalid(site, "expected two anchor darts");
      if (kind.direction == MoveDirection::Forward) {
        const Dart& a = d.darts()[anchors[0]];
        const Dart& b = d.darts()[anchors[1]];
        if (!a.along_orientation || b.along_orientation || a.edge == b.edge ||
            d.face_of(a.id) != d.face_of(b.id)) {
          invalid(site, "anchors must be an along and an against dart on one face");
        }
      } else if (!is_codirectional_bigon(d, anchors[0], anchors[1])) {
        invalid(site, "anchors are not a bounded codirectional bigon");
      }
      return;
    case MoveType::M3a: {
      if (anchors.size() != 3) invalid(site, "expected three anchor darts");
      const int face = d.face_of(anchors[0]);
      if (!is_m3a_triangle(d, face)) invalid(site, "anchor face is not a non-cyclic triangle");
      const auto& boundary = d.faces()[face].boundary;
      const auto start = std::find(boundary.begin(), boundary.end(), anchors[0]);
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t at = (static_cast<std::size_t>(start - boundary.begin()) + k) % 3;
        if (boundary[at] != anchors[k]) invalid(site, "anchors are not the triangle's boundary");
      }
      return;
    }
  }
}

constexpr int kConsumed = -2;  // edge absorbed into the move's disc
constexpr int kLoopEdge = -1;  // the crossing-free loop of the result

// A passage sequence under rewrite. Tokens stand for passages; existing
// passages keep their old index as token, new passages get fresh tokens.
// Each crossing is recorded by its two tokens and its chirality taken with
// `a` as the earlier strand, so reordering tokens never disturbs it.
struct TokenCrossing {
  int a = 0;
  int b = 0;
  int s = 1;
};

class Rewrite {
 public:
  explicit Rewrite(const Diagram& d) : next_token_(d.passage_count()) {
    tokens_.resize(d.passage_count());
    for (int p = 0; p < d.passage_count(); ++p) tokens_[p] = p;
    for (const CrossingVertex& v : d.vertices()) {
      crossings_.push_back({v.first_passage, v.second_passage, v.chirality});
    }
  }

  int fresh() { return next_token_++; }
  void add_crossing(int a, int b, int s) { crossings_.push_back({a, b, s}); }

  /// Inserts `inserted` right after token `after`, or into the empty loop.
  void insert_after(std::optional<int> after, const std::vector<int>& inserted) {
    auto it = tokens_.end();
    if (after) {
      it = std::find(tokens_.begin(), tokens_.end(), *after);
      ++it;
    }
    tokens_.insert(it, inserted.begin(), inserted.end());
  }

  void remove_tokens(const std::set<int>& gone) {
    std::erase_if(tokens_, [&gone](int t) { return gone.contains(t); });
    std::erase_if(crossings_, [&gone](const TokenCrossing& c) { return gone.contains(c.a); });
  }

  void swap_tokens(int x, int y) {
    auto ix = std::find(tokens_.begin(), tokens_.end(), x);
    auto iy = std::find(tokens_.begin(), tokens_.end(), y);
    std::iter_swap(ix, iy);
  }

  /// Token preceding t cyclically among the surviving tokens of `old`.
  /// kLoopEdge when nothing survives.
  static int surviving_predecessor(const std::vector<int>& old, int index,
                                   const std::set<int>& gone) {
    const int count = static_cast<int>(old.size());
    for (int k = 0; k < count; ++k) {
      const int t = old[(index - k + count) % count];
      if (!gone.contains(t)) return t;
    }
    return kLoopEdge;
  }

  const std::vector<int>& tokens() const { return tokens_; }

  /// Canonical code. `outer_start` is the token opening the edge that holds
  /// the outer dart (nullopt for the crossing-free loop).
  DiagramCode finish(std::optional<int> outer_start, bool outer_along) const {
    std::map<int, int> position;
    for (int k = 0; k < static_cast<int>(tokens_.size()); ++k) position[tokens_[k]] = k;
    std::map<int, int> crossing_of_token;
    for (int c = 0; c < static_cast<int>(crossings_.size()); ++c) {
      crossing_of_token[crossings_[c].a] = c;
      crossing_of_token[crossings_[c].b] = c;
    }

    DiagramCode code;
    std::map<int, int> renumber;
    for (int token : tokens_) {
      const int key = crossing_of_token.at(token);
      auto [it, added] = renumber.emplace(key, static_cast<int>(renumber.size()));
      code.passages.push_back(it->second);
    }
    code.chirality.assign(renumber.size(), 1);
    for (const auto& [key, id] : renumber) {
      const TokenCrossing& c = crossings_[key];
      code.chirality[id] = position.at(c.a) < position.at(c.b) ? c.s : -c.s;
    }
    const int edge = tokens_.empty() || !outer_start ? 0 : position.at(*outer_start);
    code.outer_dart = 2 * edge + (outer_along ? 0 : 1);
    return code;
  }

  int position_of(int token) const {
    return static_cast<int>(std::find(tokens_.begin(), tokens_.end(), token) - tokens_.begin());
  }

 private:
  std::vector<int> tokens_;
  std::vector<TokenCrossing> crossings_;
  int next_token_;
};

// Maps an old edge (by its start passage) to the start token of the new edge
// with the same faces on both sides, to kLoopEdge, or to kConsumed.
using EdgeMap = std::function<int(int old_start)>;

DiagramCode finish_with_outer(const Diagram& d, const Rewrite& rw, const EdgeMap& map_edge) {
  for (int dart : d.faces()[d.unbounded_face()].boundary) {
    const Dart& info = d.darts()[dart];
    const int start = map_edge(info.edge);
    if (start == kLoopEdge) return rw.finish(std::nullopt, info.along_orientation);
    if (start != kConsumed) return rw.finish(start, info.along_orientation);
  }
  throw MalformedDiagram("the unbounded face does not survive the move");
}

struct Rewritten {
  Diagram diagram;
  std::optional<MoveSite> inverse;
};

Rewritten curl_insert(const Diagram& d, const MoveSite& site) {
  const int edge = d.darts()[site.anchor_darts[0]].edge;
  const bool left = site.kind.type == MoveType::M1b;
  Rewrite rw(d);
  const int p = rw.fresh();
  const int q = rw.fresh();
  const std::optional<int> after =
      d.passage_count() == 0 ? std::nullopt : std::optional<int>(edge);
  rw.insert_after(after, {p, q});
  // Counterclockwise loop on the left, clockwise loop on the right.
  rw.add_crossing(p, q, left ? 1 : -1);
  const DiagramCode code = finish_with_outer(
      d, rw, [&](int old_start) { return d.passage_count() == 0 ? q : old_start; });
  Diagram next = Diagram::from_code(code);
  const int loop_edge = rw.position_of(p);
  const int monogon_dart = left ? 2 * loop_edge : 2 * loop_edge + 1;
  return {std::move(next), MoveSite{{site.kind.type, MoveDirection::Backward}, {monogon_dart}}};
}

Rewritten curl_remove(const Diagram& d, const MoveSite& site) {
  const int loop_edge = d.darts()[site.anchor_darts[0]].edge;
  const int count = d.passage_count();
  const int p = loop_edge;
  const int q = (loop_edge + 1) % count;
  const std::set<int> gone{p, q};
  std::vector<int> old(count);
  for (int k = 0; k < count; ++k) old[k] = k;
  const int before = Rewrite::surviving_predecessor(old, p, gone);

  Rewrite rw(d);
  rw.remove_tokens(gone);
  const DiagramCode code = finish_with_outer(d, rw, [&](int old_start) {
    if (old_start == p) return kConsumed;
    if (old_start == q) return before;
    return old_start;
  });
  Diagram next = Diagram::from_code(code);
  const int merged = before == kLoopEdge ? 0 : rw.position_of(before);
  return {std::move(next), MoveSite{{site.kind.type, MoveDirection::Forward}, {2 * merged}}};
}

Rewritten bigon_insert(const Diagram& d, const MoveSite& site) {
  // The strand of the against dart is pushed through the shared face across
  // the strand of the along dart. Both strands then pass c1 before c2.
  const int fixed_edge = d.darts()[site.anchor_darts[0]].edge;
  const int pushed_edge = d.darts()[site.anchor_darts[1]].edge;
  Rewrite rw(d);
  const int p1 = rw.fresh();
  const int p2 = rw.fresh();
  const int q1 = rw.fresh();
  const int q2 = rw.fresh();
  rw.insert_after(fixed_edge, {p1, p2});
  rw.insert_after(pushed_edge, {q1, q2});
  rw.add_crossing(p1, q1, 1);
  rw.add_crossing(p2, q2, -1);
  // If the shared face is unbounded it splits into the piece at c1, holding
  // both strands' start pieces, and the piece at c2 holding their end pieces.
  // The recorded outer dart picks one: the pushed strand's against dart
  // selects the c2 piece, anything else stays with its edge's start piece.
  const Dart& outer = d.darts()[d.code().outer_dart];
  const int outer_start =
      outer.edge == pushed_edge && !outer.along_orientation ? q2 : outer.edge;
  const DiagramCode code = rw.finish(outer_start, outer.along_orientation);
  Diagram next = Diagram::from_code(code);
  // The bigon lies left of the pushed strand's middle piece.
  const int along = 2 * rw.position_of(q1);
  const int against = 2 * rw.position_of(p1) + 1;
  return {std::move(next), MoveSite{{MoveType::M2a, MoveDirection::Backward}, {along, against}}};
}

Rewritten bigon_remove(const Diagram& d, const MoveSite& site) {
  const int count = d.passage_count();
  const int along_edge = d.darts()[site.anchor_darts[0]].edge;
  const int against_edge = d.darts()[site.anchor_darts[1]].edge;
  const int a1 = along_edge;
  const int a2 = (along_edge + 1) % count;
  const int b1 = against_edge;
  const int b2 = (against_edge + 1) % count;

  // The faces at the two corners opposite the bigon merge.
  const Dart& along = d.darts()[site.anchor_darts[0]];
  const Dart& against = d.darts()[site.anchor_darts[1]];
  const auto opposite_corner = [&d](int dart) {
    const int second = d.darts()[dart].next_around_origin;
    return d.face_of(d.darts()[second].next_around_origin);
  };
  const int left_piece = opposite_corner(along.id);
  const int right_piece = opposite_corner(against.id);
  if (left_piece == right_piece) {
    throw DisconnectingMove("removing the bigon would merge face " + std::to_string(left_piece) +
                            " with itself");
  }

  const std::set<int> gone{a1, a2, b1, b2};
  std::vector<int> old(count);
  for (int k = 0; k < count; ++k) old[k] = k;
  const auto before_a = Rewrite::surviving_predecessor(old, a1, gone);
  const auto before_b = Rewrite::surviving_predecessor(old, b1, gone);

  Rewrite rw(d);
  rw.remove_tokens(gone);
  const bool strands_survive = before_a != kLoopEdge && before_b != kLoopEdge;
  DiagramCode code;
  if (strands_survive && d.unbounded_face() == left_piece) {
    // Choose the outer dart so that the inverse insertion keeps the
    // unbounded face at the same corner.
    code = rw.finish(before_b, true);
  } else if (strands_survive && d.unbounded_face() == right_piece) {
    code = rw.finish(before_a, false);
  } else {
    code = finish_with_outer(d, rw, [&](int old_start) {
      if (old_start == a1 || old_start == b1) return kConsumed;
      if (gone.contains(old_start)) return Rewrite::surviving_predecessor(old, old_start, gone);
      return old_start;
    });
  }
  Diagram next = Diagram::from_code(code);
  std::optional<MoveSite> inverse;
  if (strands_survive) {
    // Forward M2a keeps the against-side strand in place and pushes the other.
    const int fixed = rw.position_of(before_b);
    const int pushed = rw.position_of(before_a);
    inverse = MoveSite{{MoveType::M2a, MoveDirection::Forward}, {2 * fixed, 2 * pushed + 1}};
  }
  return {std::move(next), inverse};
}

Rewritten triangle_slide(const Diagram& d, const MoveSite& site) {
  const int count = d.passage_count();
  Rewrite rw(d);
  std::set<int> triangle_starts;
  std::map<int, int> moved;  // old start of the edge after each side -> new start
  for (int dart : site.anchor_darts) {
    const int x = d.darts()[dart].edge;
    const int y = (x + 1) % count;
    triangle_starts.insert(x);
    moved[y] = x;
    rw.swap_tokens(x, y);
  }
  const DiagramCode code = finish_with_outer(d, rw, [&](int old_start) {
    if (triangle_starts.contains(old_start)) return kConsumed;
    if (auto it = moved.find(old_start); it != moved.end()) return it->second;
    return old_start;
  });
  Diagram next = Diagram::from_code(code);

  std::vector<int> candidates;
  for (const auto& [y, x] : moved) {
    const int e = rw.position_of(y);
    candidates.push_back(2 * e);
    candidates.push_back(2 * e + 1);
  }
  std::optional<MoveSite> inverse;
  for (int dart : candidates) {
    const int face = next.face_of(dart);
    if (!is_m3a_triangle(next, face)) continue;
    const auto& boundary = next.faces()[face].boundary;
    const bool uses_swapped = std::all_of(boundary.begin(), boundary.end(), [&](int b) {
      return std::find(candidates.begin(), candidates.end(), b) != candidates.end();
    });
    if (uses_swapped) {
      const MoveDirection back = site.kind.direction == MoveDirection::Forward
                                     ? MoveDirection::Backward
                                     : MoveDirection::Forward;
      inverse = MoveSite{{MoveType::M3a, back}, boundary};
      break;
    }
  }
  return {std::move(next), inverse};
}

}  // namespace

std::vector<MoveSite> find_move_sites(const Diagram& d, const RegionLabeling& labels, MoveKind kind) {
  std::vector<MoveSite> sites;
  const bool forward = kind.direction == MoveDirection::Forward;
  switch (kind.type) {
    case MoveType::M1a:
    case MoveType::M1b:
      if (forward) {
        for (const Edge& e : d.edges()) sites.push_back({kind, {e.forward_dart}});
      } else {
        for (const Face& f : d.faces()) {
          if (f.boundary.size() == 1 && monogon_type(d, labels, f.boundary[0]) == kind.type) {
            sites.push_back({kind, {f.boundary[0]}});
          }
        }
      }
      break;
    case MoveType::M2a:
      if (forward) {
        for (const Edge& e : d.edges()) {
          const auto& boundary = d.faces()[d.face_of(e.forward_dart)].boundary;
          const auto at = std::find(boundary.begin(), boundary.end(), e.forward_dart);
          const std::size_t start = static_cast<std::size_t>(at - boundary.begin());
          for (std::size_t k = 1; k < boundary.size(); ++k) {
            const int other = boundary[(start + k) % boundary.size()];
            if (!d.darts()[other].along_orientation && d.darts()[other].edge != e.forward_dart / 2) {
              sites.push_back({kind, {e.forward_dart, other}});
              break;
            }
          }
        }
      } else {
        for (const Face& f : d.faces()) {
          if (f.boundary.size() != 2) continue;
          int along = f.boundary[0];
          int against = f.boundary[1];
          if (!d.darts()[along].along_orientation) std::swap(along, against);
          if (is_codirectional_bigon(d, along, against)) sites.push_back({kind, {along, against}});
        }
      }
      break;
    case MoveType::M3a:
      for (const Face& f : d.faces()) {
        if (is_m3a_triangle(d, f.id)) sites.push_back({kind, f.boundary});
      }
      break;
  }
  return sites;
}

MoveOutcome apply_move(const Diagram& d, const RegionLabeling& labels, const MoveSite& site) {
  validate_site(d, labels, site);
  const bool forward = site.kind.direction == MoveDirection::Forward;
  Rewritten result = [&]() {
    switch (site.kind.type) {
      case MoveType::M1a:
      case MoveType::M1b: return forward ? curl_insert(d, site) : curl_remove(d, site);
      case MoveType::M2a: return forward ? bigon_insert(d, site) : bigon_remove(d, site);
      case MoveType::M3a: return triangle_slide(d, site);
    }
    throw InvalidSite("unknown move type");
  }();

  const CrossingWinds before_cw = crossing_winds(d, labels);
  RegionLabeling after = alexander_numbering(result.diagram);
  CrossingWinds after_cw = crossing_winds(result.diagram, after);
  MoveOutcome outcome{std::move(result.diagram), std::move(after), std::move(after_cw), 0, 0,
                      std::move(result.inverse)};
  outcome.delta_d = rotation_new(outcome.labels, outcome.cw) - rotation_new(labels, before_cw);
  outcome.delta_crossings = outcome.diagram.crossing_count() - d.crossing_count();
  return outcome;
}

std::string SubregionClassification::description() const {
  if (coincident.empty()) {
    return "all distinct";
  }
  std::ostringstream out;
  for (std::size_t g = 0; g < coincident.size(); ++g) {
    if (g > 0) out << ", ";
    for (std::size_t k = 0; k < coincident[g].size(); ++k) {
      if (k > 0) out << '=';
      out << coincident[g][k];
    }
  }
  return out.str();
}

SubregionClassification shared_subregion_check(const Diagram& d, const MoveSite& site) {
  if (site.kind.type != MoveType::M3a || site.anchor_darts.size() != 3) {
    throw InvalidSite("shared_subregion_check needs an M3a site");
  }
  SubregionClassification out;
  for (int k = 0; k < 3; ++k) {
    const int side = site.anchor_darts[k];
    // Across the side.
    out.faces[2 * k] = d.face_of(d.darts()[side].reverse);
    // At the corner where the next side starts, opposite the triangle.
    const int next_side = site.anchor_darts[(k + 1) % 3];
    const int turn = d.darts()[next_side].next_around_origin;
    out.faces[2 * k + 1] = d.face_of(d.darts()[turn].next_around_origin);
  }
  std::map<int, std::vector<int>> groups;
  for (int k = 0; k < 6; ++k) groups[out.faces[k]].push_back(k + 1);
  for (auto& [face, members] : groups) {
    if (members.size() > 1) out.coincident.push_back(members);
  }
  std::sort(out.coincident.begin(), out.coincident.end());
  return out;
}

}  // namespace curvetopo
