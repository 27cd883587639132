#include "curvetopo/curve_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "curvetopo/errors.hpp"

namespace curvetopo {

using Json = nlohmann::ordered_json;

namespace {

std::vector<double> coefficients(const Json& fourier, const char* key, int order) {
  if (!fourier.contains(key) || !fourier[key].is_array()) {
    throw ParseError(std::string("fourier.") + key + " must be an array");
  }
  std::vector<double> out;
  for (const Json& v : fourier[key]) {
    if (!v.is_number()) throw ParseError(std::string("fourier.") + key + " holds a non-number");
    out.push_back(v.get<double>());
  }
  if (static_cast<int>(out.size()) != order) {
    throw ParseError(std::string("fourier.") + key + " must have " + std::to_string(order) +
                     " entries");
  }
  return out;
}

int integer_field(const Json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_number_integer()) {
    throw ParseError(std::string("fourier.") + key + " must be an integer");
  }
  return obj[key].get<int>();
}

}  // namespace

ClosedPolyline CurveFile::to_polyline() const {
  if (const auto* pts = std::get_if<std::vector<Point2>>(&geometry)) {
    return ClosedPolyline(*pts);
  }
  return sample_fourier(std::get<FourierSpec>(geometry));
}

CurveFile CurveFile::from_points(const ClosedPolyline& curve, std::optional<std::string> name) {
  const auto pts = curve.vertices();
  return CurveFile{std::move(name), std::vector<Point2>(pts.begin(), pts.end())};
}

CurveFile parse_curve_file(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("curve file must be a JSON object");

  CurveFile file;
  for (const auto& [key, value] : doc.items()) {
    if (key != "points" && key != "fourier" && key != "name") {
      throw ParseError("unexpected key '" + key + "'");
    }
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("name must be a string");
    file.name = doc["name"].get<std::string>();
  }
  const bool has_points = doc.contains("points");
  const bool has_fourier = doc.contains("fourier");
  if (has_points == has_fourier) {
    throw ParseError("curve file needs exactly one of 'points' and 'fourier'");
  }
  if (has_points) {
    const Json& arr = doc["points"];
    if (!arr.is_array()) throw ParseError("points must be an array");
    std::vector<Point2> pts;
    pts.reserve(arr.size());
    for (const Json& p : arr) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number()) {
        throw ParseError("each point must be an [x, y] pair of numbers");
      }
      pts.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    file.geometry = std::move(pts);
  } else {
    const Json& f = doc["fourier"];
    if (!f.is_object()) throw ParseError("fourier must be an object");
    FourierSpec spec;
    spec.order = integer_field(f, "order");
    if (spec.order < 1) throw ParseError("fourier.order must be at least 1");
    spec.samples = integer_field(f, "samples");
    spec.a = coefficients(f, "a", spec.order);
    spec.b = coefficients(f, "b", spec.order);
    spec.c = coefficients(f, "c", spec.order);
    spec.d = coefficients(f, "d", spec.order);
    file.geometry = std::move(spec);
  }
  return file;
}

std::string write_curve_file(const CurveFile& file) {
  Json doc;
  if (file.name) doc["name"] = *file.name;
  if (const auto* pts = std::get_if<std::vector<Point2>>(&file.geometry)) {
    Json arr = Json::array();
    for (const Point2& p : *pts) arr.push_back({p.x, p.y});
    doc["points"] = std::move(arr);
  } else {
    const FourierSpec& spec = std::get<FourierSpec>(file.geometry);
    doc["fourier"] = {{"order", spec.order}, {"a", spec.a}, {"b", spec.b},
                      {"c", spec.c},         {"d", spec.d}, {"samples", spec.samples}};
  }
  return doc.dump(2) + "\n";
}

CurveFile read_curve_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_curve_file(buffer.str());
}

}  // namespace curvetopo
