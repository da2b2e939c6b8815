#pragma once

#include "polyinc/cli/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyinc::cli {

/// Tabular sweep attached to a report; `x` and `y` name the plotted columns.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  std::string x, y;
};

struct Report {
  std::string experiment;
  std::uint64_t seed = 0;
  Json input = Json::object();
  Json measured = Json::object();
  Json bounds = Json::array();
  Json checks = Json::array();
  std::optional<Table> table;
  std::optional<double> wall_time;  ///< seconds; only set on request, keeps reruns identical

  /// Records an evaluated bound: `expression` as text, its value, the
  /// measured quantity it limits and whether measured <= value.
  void add_bound(const std::string& name, const std::string& expression, Json value, Json measured, bool holds);
  void add_check(const std::string& name, bool passed, const std::string& detail = "");
  /// True iff every check passed.
  bool passed() const;
};

Json report_to_json(const Report& r);
std::string render_json(const Report& r);
/// The table when present, otherwise one "section,name,value" row per
/// measured scalar, bound and check.
std::string render_csv(const Report& r);
/// Line plot of table.y against table.x. Throws std::invalid_argument when
/// the report has no table.
std::string render_svg(const Report& r);

}  // namespace polyinc::cli
