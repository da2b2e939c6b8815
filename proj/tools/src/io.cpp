#include "polyinc/cli/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polyinc::cli {

namespace {

const Json& field(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw std::invalid_argument(std::string("missing \"") + key + "\" array");
  const Json& a = doc.at(key);
  if (!a.is_array()) throw std::invalid_argument(std::string("\"") + key + "\" must be an array");
  return a;
}

std::vector<Rat> coordinates(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " coordinates, got " + j.dump());
  std::vector<Rat> out;
  for (const auto& c : j) out.push_back(rat_from_json(c));
  return out;
}

Point3 point_from(const Json& j) {
  auto c = coordinates(j, 3);
  return {c[0], c[1], c[2]};
}

}  // namespace

Json rat_to_json(const Rat& r) { return polyinc::to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.dump()));
  throw std::invalid_argument("expected an exact rational (string or integer), got " + j.dump());
}

Json point_to_json(const Point3& p) { return Json::array({rat_to_json(p[0]), rat_to_json(p[1]), rat_to_json(p[2])}); }

Json line_to_json(const Line3& l) { return Json{{"base", point_to_json(l.base())}, {"dir", point_to_json(l.dir())}}; }

Json planar_point_to_json(const PlanarPoint& p) { return Json::array({rat_to_json(p.x), rat_to_json(p.y)}); }

Json planar_line_to_json(const PlanarLine& l) {
  return Json{{"a", rat_to_json(l.a())}, {"b", rat_to_json(l.b())}, {"c", rat_to_json(l.c())}};
}

std::vector<Point3> read_points(const Json& doc) {
  std::vector<Point3> out;
  for (const auto& p : field(doc, "points")) out.push_back(point_from(p));
  return out;
}

std::vector<PlanarPoint> read_planar_points(const Json& doc) {
  std::vector<PlanarPoint> out;
  for (const auto& p : field(doc, "points")) {
    auto c = coordinates(p, 2);
    out.push_back({c[0], c[1]});
  }
  return out;
}

std::vector<Line3> read_lines(const Json& doc) {
  std::vector<Line3> out;
  for (const auto& l : field(doc, "lines")) {
    if (!l.is_object() || !l.contains("base") || !l.contains("dir"))
      throw std::invalid_argument("each line needs \"base\" and \"dir\"");
    out.emplace_back(point_from(l.at("base")), point_from(l.at("dir")));
  }
  return out;
}

Json configuration_to_json(const Configuration& cfg) {
  Json j{{"format_version", kFormatVersion}, {"kind", to_string(cfg.kind)}, {"size", cfg.size}, {"seed", cfg.seed}};
  Json points = Json::array(), lines = Json::array();
  for (const auto& p : cfg.points) points.push_back(point_to_json(p));
  for (const auto& p : cfg.planar_points) points.push_back(planar_point_to_json(p));
  for (const auto& l : cfg.lines) lines.push_back(line_to_json(l));
  for (const auto& l : cfg.planar_lines) lines.push_back(planar_line_to_json(l));
  j["points"] = std::move(points);
  j["lines"] = std::move(lines);
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace polyinc::cli
