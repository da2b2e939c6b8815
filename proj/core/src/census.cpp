#include "polyinc/census.hpp"

#include "polyinc/vanishing_fit.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace polyinc {

namespace {

using Members = std::map<Point3, std::vector<std::size_t>>;

void require_distinct(std::span<const Line3> lines) {
  std::set<Line3> seen;
  for (const auto& l : lines)
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate line " + l.to_string());
}

Members intersection_members(std::span<const Line3> lines) {
  require_distinct(lines);
  Members members;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto w = line_intersection(lines[i], lines[j]);
      if (!w) continue;
      auto& idx = members[*w];
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) idx.push_back(i);
      if (std::find(idx.begin(), idx.end(), j) == idx.end()) idx.push_back(j);
    }
  }
  for (auto& [w, idx] : members) std::sort(idx.begin(), idx.end());
  return members;
}

bool pairwise_skew(const Line3& a, const Line3& b) {
  return !a.parallel_to(b) && !line_intersection(a, b).has_value();
}

std::size_t count_on(const MultiPoly& q, std::span<const Line3> lines) {
  return static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [&](const Line3& l) { return line_on_surface(l, q); }));
}

}  // namespace

std::vector<Point3> IntersectionCensus::points_with_multiplicity_at_least(std::size_t k) const {
  std::vector<Point3> out;
  for (const auto& [w, m] : multiplicity)
    if (m >= k) out.push_back(w);
  return out;
}

std::size_t IntersectionCensus::pair_count() const {
  std::size_t total = 0;
  for (const auto& [w, m] : multiplicity) total += m * (m - 1) / 2;
  return total;
}

IntersectionCensus intersection_census(std::span<const Line3> lines) {
  IntersectionCensus c;
  c.line_count = lines.size();
  for (const auto& [w, idx] : intersection_members(lines)) c.multiplicity.emplace(w, idx.size());
  return c;
}

std::vector<Point3> pk_census(const IntersectionCensus& census, std::size_t k) {
  if (k < 2) throw std::invalid_argument("pk_census: k must be at least 2");
  std::vector<Point3> out;
  for (const auto& [w, m] : census.multiplicity)
    if (m >= k && m <= 2 * k) out.push_back(w);
  return out;
}

JointsReport count_joints(std::span<const Line3> lines) {
  JointsReport report;
  report.line_count = lines.size();
  for (const auto& [w, idx] : intersection_members(lines)) {
    if (idx.size() < 3) continue;
    bool found = false;
    for (std::size_t a = 0; a < idx.size() && !found; ++a)
      for (std::size_t b = a + 1; b < idx.size() && !found; ++b)
        for (std::size_t c = b + 1; c < idx.size() && !found; ++c) {
          if (det3(lines[idx[a]].dir(), lines[idx[b]].dir(), lines[idx[c]].dir()) != 0) {
            report.joints.push_back({w, {idx[a], idx[b], idx[c]}});
            found = true;
          }
        }
  }
  if (!lines.empty())
    report.ratio = static_cast<double>(report.count()) / std::pow(static_cast<double>(lines.size()), 1.5);
  return report;
}

ConcentrationReport concentration(std::span<const Line3> lines, std::size_t exhaustive_limit) {
  ConcentrationReport r;
  if (lines.empty()) return r;

  std::set<Plane> planes;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (auto pl = Plane::spanned_by(lines[i], lines[j])) planes.insert(*pl);
  for (const auto& pl : planes) {
    std::size_t n = static_cast<std::size_t>(std::count_if(lines.begin(), lines.end(), [&](const Line3& l) { return pl.contains(l); }));
    if (n > r.max_coplanar) {
      r.max_coplanar = n;
      r.plane_witness = pl;
    }
  }
  if (r.max_coplanar == 0) {
    // No two lines share a plane; any plane through the first line holds one.
    const Line3& l = lines.front();
    Vec3 off = l.dir()[0] != 0 || l.dir()[1] != 0 ? Vec3(Rat(0), Rat(0), Rat(1)) : Vec3(Rat(1), Rat(0), Rat(0));
    r.plane_witness = Plane::through(l.base(), l.at(Rat(1)), l.base() + off);
    r.max_coplanar = 1;
  }

  if (auto all = fit_on_lines(lines, 2)) {
    r.max_coquadric = count_on(*all, lines);
    r.quadric_witness = std::move(all);
    r.quadric_strategy = "all-lines";
    return r;
  }
  const std::size_t limit = std::min(lines.size(), exhaustive_limit);
  r.quadric_strategy = lines.size() <= exhaustive_limit ? "exhaustive-triples" : "prefix-triples";
  for (std::size_t i = 0; i < limit; ++i)
    for (std::size_t j = i + 1; j < limit; ++j) {
      if (!pairwise_skew(lines[i], lines[j])) continue;
      for (std::size_t k = j + 1; k < limit; ++k) {
        if (!pairwise_skew(lines[i], lines[k]) || !pairwise_skew(lines[j], lines[k])) continue;
        const Line3 triple[3] = {lines[i], lines[j], lines[k]};
        auto q = fit_on_lines(triple, 2);
        if (!q) continue;
        std::size_t n = count_on(*q, lines);
        if (n > r.max_coquadric) {
          r.max_coquadric = n;
          r.quadric_witness = std::move(q);
        }
      }
    }
  return r;
}

IncidenceReport planar_incidences(std::span<const PlanarPoint> points, std::span<const PlanarLine> lines) {
  if (std::set<PlanarPoint>(points.begin(), points.end()).size() != points.size())
    throw std::invalid_argument("planar_incidences: duplicate points");
  if (std::set<PlanarLine>(lines.begin(), lines.end()).size() != lines.size())
    throw std::invalid_argument("planar_incidences: duplicate lines");
  IncidenceReport r;
  r.points = points.size();
  r.lines = lines.size();
  for (const auto& l : lines)
    for (const auto& p : points)
      if (l.contains(p)) ++r.incidences;
  const double n = static_cast<double>(r.points), m = static_cast<double>(r.lines);
  r.bound = std::cbrt(n * n) * std::cbrt(m * m) + n + m;
  r.ratio = r.bound > 0 ? static_cast<double>(r.incidences) / r.bound : 0.0;
  return r;
}

std::string to_string(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::GridJoints: return "grid_joints";
    case ConfigKind::HyperboloidRulings: return "hyperboloid_rulings";
    case ConfigKind::PlanarGrid: return "planar_grid";
    case ConfigKind::RandomLines: return "random_lines";
    case ConfigKind::ConeRulings: return "cone_rulings";
    case ConfigKind::Gk2Config: return "gk2_config";
    case ConfigKind::SztExtremal: return "szt_extremal";
  }
  return "unknown";
}

ConfigKind parse_config_kind(const std::string& name) {
  for (auto k : {ConfigKind::GridJoints, ConfigKind::HyperboloidRulings, ConfigKind::PlanarGrid, ConfigKind::RandomLines,
                 ConfigKind::ConeRulings, ConfigKind::Gk2Config, ConfigKind::SztExtremal})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown configuration kind '" + name + "'");
}

PlanarPoint circle_point(const Rat& t) {
  Rat den = 1 + t * t;
  return {(1 - t * t) / den, 2 * t / den};
}

Line3 hyperboloid_ruling(const Rat& t, int sign) {
  PlanarPoint c = circle_point(t);
  Rat s(sign);
  return Line3(Point3(c.x, c.y, Rat(0)), Vec3(-s * c.y, s * c.x, Rat(1)));
}

Configuration make_configuration(ConfigKind kind, std::size_t size, std::uint64_t seed) {
  struct Cap {
    ConfigKind kind;
    std::size_t max;
  };
  static constexpr Cap caps[] = {{ConfigKind::GridJoints, 10},  {ConfigKind::HyperboloidRulings, 200},
                                 {ConfigKind::PlanarGrid, 30},  {ConfigKind::RandomLines, 500},
                                 {ConfigKind::ConeRulings, 200}, {ConfigKind::Gk2Config, 12},
                                 {ConfigKind::SztExtremal, 10}};
  for (const auto& cap : caps)
    if (cap.kind == kind && (size < 1 || size > cap.max))
      throw std::invalid_argument(to_string(kind) + ": size " + std::to_string(size) + " outside supported range 1.." +
                                  std::to_string(cap.max));

  Configuration cfg;
  cfg.kind = kind;
  cfg.size = size;
  cfg.seed = seed;
  const long n = static_cast<long>(size);
  switch (kind) {
    case ConfigKind::GridJoints: {
      const Vec3 axes[3] = {{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
      for (std::size_t axis = 0; axis < 3; ++axis)
        for (long i = 0; i < n; ++i)
          for (long j = 0; j < n; ++j) {
            Point3 base;
            base[(axis + 1) % 3] = i;
            base[(axis + 2) % 3] = j;
            cfg.lines.emplace_back(base, axes[axis]);
          }
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          for (long k = 0; k < n; ++k) cfg.points.emplace_back(Rat(i), Rat(j), Rat(k));
      break;
    }
    case ConfigKind::HyperboloidRulings:
      for (int sign : {1, -1})
        for (long i = 0; i < n; ++i) cfg.lines.push_back(hyperboloid_ruling(Rat(i), sign));
      break;
    case ConfigKind::PlanarGrid:
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) cfg.planar_points.push_back({Rat(i), Rat(j)});
      for (long i = 0; i < n; ++i) {
        cfg.planar_lines.emplace_back(Rat(0), Rat(1), Rat(i));
        cfg.planar_lines.emplace_back(Rat(1), Rat(0), Rat(i));
      }
      break;
    case ConfigKind::RandomLines: {
      std::mt19937_64 rng(seed);
      auto draw = [&](long lo, long hi) { return Rat(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1))); };
      std::set<Line3> seen;
      for (std::size_t tries = 0; cfg.lines.size() < size && tries < 100 * size; ++tries) {
        Point3 base(draw(-5, 5), draw(-5, 5), draw(-5, 5));
        Vec3 dir(draw(-3, 3), draw(-3, 3), draw(-3, 3));
        if (dir.is_zero()) continue;
        Line3 l(base, dir);
        if (seen.insert(l).second) cfg.lines.push_back(l);
      }
      break;
    }
    case ConfigKind::ConeRulings:
      for (long i = 0; i < n; ++i) {
        PlanarPoint c = circle_point(Rat(i));
        cfg.lines.emplace_back(Point3(), Vec3(c.x, c.y, Rat(1)));
      }
      break;
    case ConfigKind::Gk2Config:
      for (long j = 0; j < n; ++j)
        for (long k = 0; k < n; ++k) cfg.lines.emplace_back(Point3(Rat(0), Rat(j), Rat(k)), Vec3(Rat(1), Rat(0), Rat(0)));
      for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
          for (long k = 0; k < n; ++k) cfg.points.emplace_back(Rat(i), Rat(j), Rat(k));
      break;
    case ConfigKind::SztExtremal:
      for (long x = 1; x <= n; ++x)
        for (long y = 1; y <= 2 * n * n; ++y) cfg.planar_points.push_back({Rat(x), Rat(y)});
      for (long a = 1; a <= n; ++a)
        for (long b = 1; b <= n * n; ++b) cfg.planar_lines.push_back(PlanarLine::graph(Rat(a), Rat(b)));
      break;
  }
  return cfg;
}

}  // namespace polyinc
