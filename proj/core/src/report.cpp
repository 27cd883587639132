#include "curvetopo/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace curvetopo {

using Json = nlohmann::ordered_json;

std::string report_to_json(const AnalysisReport& report) {
  Json doc;
  doc["rotation"] = {{"turning", report.rotation_turning},
                     {"whitney", report.rotation_whitney},
                     {"new", report.rotation_new},
                     {"agreement", report.agreement}};
  doc["basepoint_t"] = report.basepoint_t;
  Json regions = Json::array();
  for (const RegionRow& r : report.region_table) {
    regions.push_back({{"id", r.face}, {"wind", r.wind}, {"unbounded", r.unbounded}});
  }
  doc["regions"] = std::move(regions);
  Json crossings = Json::array();
  for (const CrossingRow& c : report.crossing_table) {
    crossings.push_back({{"id", c.id},
                         {"x", c.position.x},
                         {"y", c.position.y},
                         {"t_first", c.t_first},
                         {"t_second", c.t_second},
                         {"wind", c.wind},
                         {"sign", c.sign}});
  }
  doc["crossings"] = std::move(crossings);
  doc["euler"] = {{"v", report.euler.n_vertices},
                  {"e", report.euler.n_edges},
                  {"f", report.euler.n_faces}};
  return doc.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& report) {
  std::ostringstream out;
  out << "rotation: " << report.rotation_turning << ' ' << report.rotation_whitney << ' '
      << report.rotation_new << (report.agreement ? " (agree)" : " (DISAGREE)") << '\n';
  char line[160];
  std::snprintf(line, sizeof line, "basepoint: t=%.6f ind=%g\n", report.basepoint_t,
                report.basepoint_ind.value());
  out << line;
  out << "euler: V=" << report.euler.n_vertices << " E=" << report.euler.n_edges
      << " F=" << report.euler.n_faces << " chi=" << report.euler.euler_characteristic << '\n';
  out << "regions (" << report.region_table.size() << "):\n";
  for (const RegionRow& r : report.region_table) {
    out << "  r" << r.face << " wind=" << r.wind << (r.unbounded ? " unbounded" : "") << '\n';
  }
  out << "crossings (" << report.crossing_table.size() << "):\n";
  for (const CrossingRow& c : report.crossing_table) {
    std::snprintf(line, sizeof line, "  c%d at (%.6g, %.6g) t=%.6f/%.6f wind=%d sign=%+d\n", c.id,
                  c.position.x, c.position.y, c.t_first, c.t_second, c.wind, c.sign);
    out << line;
  }
  return out.str();
}

}  // namespace curvetopo
