#include "polyinc/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyinc::cli {

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

double as_number(const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_rat(v.get<std::string>()).get_d();
  throw std::invalid_argument("non-numeric plot value " + v.dump());
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(4);
  out << v;
  return out.str();
}

}  // namespace

void Report::add_bound(const std::string& name, const std::string& expression, Json value, Json measured_value,
                       bool holds) {
  bounds.push_back(Json{{"name", name},
                        {"expression", expression},
                        {"value", std::move(value)},
                        {"measured", std::move(measured_value)},
                        {"holds", holds}});
}

void Report::add_check(const std::string& name, bool ok, const std::string& detail) {
  Json c{{"name", name}, {"passed", ok}};
  if (!detail.empty()) c["detail"] = detail;
  checks.push_back(std::move(c));
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Json& c) { return c.at("passed").get<bool>(); });
}

Json report_to_json(const Report& r) {
  Json j{{"format_version", kFormatVersion},
         {"experiment", r.experiment},
         {"seed", r.seed},
         {"input", r.input},
         {"measured", r.measured},
         {"bounds", r.bounds},
         {"checks", r.checks},
         {"passed", r.passed()}};
  if (r.table) {
    Json rows = Json::array();
    for (const auto& row : r.table->rows) rows.push_back(Json(row));
    j["table"] = Json{{"columns", r.table->columns}, {"rows", std::move(rows)}};
  }
  if (r.wall_time) j["wall_time_s"] = *r.wall_time;
  return j;
}

std::string render_json(const Report& r) { return report_to_json(r).dump(2) + "\n"; }

std::string render_csv(const Report& r) {
  std::ostringstream out;
  if (r.table) {
    for (std::size_t i = 0; i < r.table->columns.size(); ++i) out << (i ? "," : "") << csv_cell(r.table->columns[i]);
    out << "\n";
    for (const auto& row : r.table->rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
    return out.str();
  }
  out << "section,name,value\n";
  for (const auto& [k, v] : r.measured.items())
    if (v.is_primitive()) out << "measured," << csv_cell(k) << "," << csv_cell(v) << "\n";
  for (const auto& b : r.bounds) out << "bound," << csv_cell(b.at("name")) << "," << csv_cell(b.at("holds")) << "\n";
  for (const auto& c : r.checks) out << "check," << csv_cell(c.at("name")) << "," << csv_cell(c.at("passed")) << "\n";
  out << "summary,passed," << (r.passed() ? "true" : "false") << "\n";
  return out.str();
}

std::string render_svg(const Report& r) {
  if (!r.table || r.table->rows.empty()) throw std::invalid_argument("svg output needs a sweep table; pass --sizes");
  const auto& t = *r.table;
  auto col = [&](const std::string& name) {
    auto it = std::find(t.columns.begin(), t.columns.end(), name);
    if (it == t.columns.end()) throw std::invalid_argument("table has no column " + name);
    return static_cast<std::size_t>(it - t.columns.begin());
  };
  const std::size_t xi = col(t.x), yi = col(t.y);
  std::vector<std::pair<double, double>> pts;
  for (const auto& row : t.rows) pts.emplace_back(as_number(row[xi]), as_number(row[yi]));
  double x0 = pts[0].first, x1 = x0, y0 = 0, y1 = pts[0].second;
  for (const auto& [x, y] : pts) {
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  }
  if (x1 == x0) x1 = x0 + 1;
  if (y1 == y0) y1 = y0 + 1;
  const double w = 480, h = 320, m = 50;
  auto sx = [&](double x) { return m + (x - x0) / (x1 - x0) * (w - 2 * m); };
  auto sy = [&](double y) { return h - m - (y - y0) / (y1 - y0) * (h - 2 * m); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
      << r.experiment << ": " << t.y << " vs " << t.x << "</text>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << h - m << "\" x2=\"" << w - m << "\" y2=\"" << h - m
      << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << m << "\" y1=\"" << m << "\" x2=\"" << m << "\" y2=\"" << h - m << "\" stroke=\"black\"/>\n";
  out << "<text x=\"" << w / 2 << "\" y=\"" << h - 12 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << t.x << " [" << fmt(x0) << ", " << fmt(x1) << "]</text>\n";
  out << "<text x=\"14\" y=\"" << h / 2 << "\" transform=\"rotate(-90 14 " << h / 2
      << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << t.y << " [" << fmt(y0) << ", "
      << fmt(y1) << "]</text>\n";
  out << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) out << (i ? " " : "") << sx(pts[i].first) << "," << sy(pts[i].second);
  out << "\"/>\n";
  for (const auto& [x, y] : pts)
    out << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"steelblue\"/>\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace polyinc::cli
