#pragma once

#include "polyinc/census.hpp"
#include "polyinc/geometry.hpp"
#include "polyinc/planar.hpp"

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

namespace polyinc::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// Rationals travel as strings ("3/4", "-2"); JSON integers are accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json point_to_json(const Point3& p);
Json line_to_json(const Line3& l);
Json planar_point_to_json(const PlanarPoint& p);
Json planar_line_to_json(const PlanarLine& l);

/// Reads the "points" array of a file record; each entry has 3 coordinates.
std::vector<Point3> read_points(const Json& doc);
/// Reads the "points" array as planar points (2 coordinates each).
std::vector<PlanarPoint> read_planar_points(const Json& doc);
/// Reads the "lines" array; each entry is {"base": [...], "dir": [...]}.
std::vector<Line3> read_lines(const Json& doc);

/// {"format_version": 1, "kind": ..., "size": ..., "seed": ..., "points": ..., "lines": ...}
Json configuration_to_json(const Configuration& cfg);

/// Throws std::runtime_error naming the path on I/O or parse failure.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace polyinc::cli
