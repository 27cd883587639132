#include "curvetopo/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "curvetopo/errors.hpp"

namespace curvetopo {

namespace {

// Maps y-up curve coordinates into the y-down SVG frame. The flip is a
// reflection, so a counterclockwise curve still looks counterclockwise.
struct Frame {
  double min_x = 0, max_y = 0, scale = 1, margin = 0;

  Point2 operator()(Point2 p) const {
    return {margin + (p.x - min_x) * scale, margin + (max_y - p.y) * scale};
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

}  // namespace

std::string render_svg(const Diagram& d, const RegionLabeling& labels, const CrossingWinds& winds,
                       double basepoint_t, const Tolerances& tol, const SvgOptions& options) {
  if (!d.has_geometry()) throw MalformedDiagram("SVG rendering needs a diagram with geometry");
  const ClosedPolyline& curve = d.curve();

  double min_x = std::numeric_limits<double>::infinity();
  double min_y = min_x;
  double max_x = -min_x;
  double max_y = -min_x;
  for (const Point2& p : curve.vertices()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double span = std::max({max_x - min_x, max_y - min_y, 1e-300});
  const double inner = options.width - 2 * options.margin;
  const Frame frame{min_x, max_y, inner / span, options.margin};
  const double height = 2 * options.margin + (max_y - min_y) * frame.scale;

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(options.width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(options.width) << ' '
      << num(height) << "\">\n"
      << "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"5\" refY=\"5\" "
         "markerWidth=\"6\" markerHeight=\"6\" orient=\"auto\">"
         "<path d=\"M0,0 L10,5 L0,10 z\" fill=\"#1f4e9c\"/></marker></defs>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  out << "<polygon class=\"curve\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"1.5\" points=\"";
  for (const Point2& p : curve.vertices()) {
    const Point2 q = frame(p);
    out << num(q.x) << ',' << num(q.y) << ' ';
  }
  out << "\"/>\n";

  // Arrowheads point along the direction of travel in the flipped frame.
  constexpr int kArrows = 12;
  for (int k = 0; k < kArrows; ++k) {
    const double t = (k + 0.25) / kArrows;
    const Point2 a = frame(curve.point_at(t));
    const Point2 b = frame(curve.point_at(wrap_param(t + 1e-3)));
    out << "<line class=\"arrow\" x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\""
        << num(b.x) << "\" y2=\"" << num(b.y)
        << "\" stroke=\"#1f4e9c\" marker-end=\"url(#arrow)\"/>\n";
  }

  for (const Face& f : d.faces()) {
    const Point2 q = frame(face_interior_point(d, f.id, tol));
    out << "<text class=\"region\" data-face=\"" << f.id << "\" x=\"" << num(q.x) << "\" y=\""
        << num(q.y) << "\" font-size=\"14\" text-anchor=\"middle\" fill=\"#333\">"
        << labels[f.id] << "</text>\n";
  }

  for (const Crossing& c : d.crossings()) {
    const Point2 q = frame(c.position);
    out << "<g class=\"crossing\" data-crossing=\"" << c.id << "\"><circle cx=\"" << num(q.x)
        << "\" cy=\"" << num(q.y) << "\" r=\"4\" fill=\"#c0392b\"/><text x=\"" << num(q.x + 6)
        << "\" y=\"" << num(q.y - 6) << "\" font-size=\"11\" fill=\"#c0392b\">"
        << winds[c.id] << "</text></g>\n";
  }

  const Point2 base = frame(curve.point_at(basepoint_t));
  out << "<circle class=\"basepoint\" cx=\"" << num(base.x) << "\" cy=\"" << num(base.y)
      << "\" r=\"5\" fill=\"none\" stroke=\"#27ae60\" stroke-width=\"2\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace curvetopo
