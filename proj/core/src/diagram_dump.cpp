#include <string>

#include <json.hpp>

#include "curvetopo/diagram.hpp"
#include "curvetopo/errors.hpp"

namespace curvetopo {

using Json = nlohmann::ordered_json;

std::string dump_diagram(const Diagram& d) {
  Json out;
  out["format"] = "curvetopo-diagram";
  out["version"] = 1;
  out["passages"] = d.code().passages;
  out["chirality"] = d.code().chirality;
  out["outer_dart"] = d.code().outer_dart;

  Json crossings = Json::array();
  for (const CrossingVertex& v : d.vertices()) {
    Json c;
    c["id"] = v.id;
    c["first_passage"] = v.first_passage;
    c["second_passage"] = v.second_passage;
    c["chirality"] = v.chirality;
    if (d.has_geometry()) {
      const Crossing& g = d.crossings()[v.id];
      c["x"] = g.position.x;
      c["y"] = g.position.y;
      c["t_first"] = g.t_first;
      c["t_second"] = g.t_second;
    }
    crossings.push_back(std::move(c));
  }
  out["crossings"] = std::move(crossings);

  Json darts = Json::array();
  for (const Dart& dart : d.darts()) {
    darts.push_back({{"id", dart.id},
                     {"edge", dart.edge},
                     {"origin", dart.origin},
                     {"next_around_origin", dart.next_around_origin},
                     {"reverse", dart.reverse},
                     {"along_orientation", dart.along_orientation}});
  }
  out["darts"] = std::move(darts);

  Json faces = Json::array();
  for (const Face& face : d.faces()) {
    faces.push_back({{"id", face.id}, {"boundary", face.boundary}, {"unbounded", face.is_unbounded}});
  }
  out["faces"] = std::move(faces);
  return out.dump(2) + "\n";
}

Diagram load_diagram(std::string_view json_text) {
  Json in;
  try {
    in = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("diagram dump is not valid JSON: ") + e.what());
  }

  DiagramCode code;
  try {
    if (!in.is_object() || !in.contains("passages") || !in.contains("chirality")) {
      throw ParseError("diagram dump needs \"passages\" and \"chirality\"");
    }
    code.passages = in.at("passages").get<std::vector<int>>();
    code.chirality = in.at("chirality").get<std::vector<int>>();
    code.outer_dart = in.value("outer_dart", 0);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("diagram dump has the wrong shape: ") + e.what());
  }

  Diagram d = Diagram::from_code(code);

  try {
    if (in.contains("darts")) {
      const Json& darts = in.at("darts");
      if (darts.size() != d.darts().size()) {
        throw MalformedDiagram("dart table does not match the passages");
      }
      for (std::size_t k = 0; k < darts.size(); ++k) {
        const Dart& dart = d.darts()[k];
        const Json& row = darts[k];
        if (row.at("id").get<int>() != dart.id || row.at("edge").get<int>() != dart.edge ||
            row.at("origin").get<int>() != dart.origin ||
            row.at("next_around_origin").get<int>() != dart.next_around_origin ||
            row.at("reverse").get<int>() != dart.reverse ||
            row.at("along_orientation").get<bool>() != dart.along_orientation) {
          throw MalformedDiagram("dart " + std::to_string(k) + " disagrees with the passages");
        }
      }
    }
    if (in.contains("faces")) {
      const Json& faces = in.at("faces");
      if (faces.size() != d.faces().size()) {
        throw MalformedDiagram("face table does not match the passages");
      }
      for (std::size_t k = 0; k < faces.size(); ++k) {
        if (faces[k].at("boundary").get<std::vector<int>>() != d.faces()[k].boundary ||
            faces[k].at("unbounded").get<bool>() != d.faces()[k].is_unbounded) {
          throw MalformedDiagram("face " + std::to_string(k) + " disagrees with the passages");
        }
      }
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("diagram dump has the wrong shape: ") + e.what());
  }
  return d;
}

}  // namespace curvetopo
