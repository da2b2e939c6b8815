#include "polyinc/motion_space.hpp"

#include <map>
#include <random>
#include <stdexcept>

namespace polyinc {

namespace {

void require_points(std::span<const PlanarPoint> points, std::size_t cap) {
  if (points.size() > cap)
    throw std::invalid_argument("quadruple count: " + std::to_string(points.size()) + " points exceeds the cap of " +
                                std::to_string(cap));
  if (std::set<PlanarPoint>(points.begin(), points.end()).size() != points.size())
    throw std::invalid_argument("quadruple count: duplicate points");
}

}  // namespace

MotionLine motion_line(const PlanarPoint& a, const PlanarPoint& b) {
  const Rat mx = (a.x + b.x) / 2, my = (a.y + b.y) / 2;
  const Rat dx = b.x - a.x, dy = b.y - a.y;
  return {Line3(Point3(mx, my, Rat(0)), Vec3(-dy / 2, dx / 2, Rat(1))), a, b};
}

std::pair<PlanarPoint, PlanarPoint> recover_pair(const Line3& l) {
  const Vec3& d = l.dir();
  if (d[2] == 0) throw std::invalid_argument("recover_pair: line is horizontal");
  const Vec3 unit = (1 / d[2]) * d;
  const Point3 m = l.base() - l.base()[2] * unit;
  // b - a = rot90^{-1}(2 unit.xy) = (2 unit.y, -2 unit.x)
  const Rat hx = unit[1], hy = -unit[0];
  return {PlanarPoint{m[0] - hx, m[1] - hy}, PlanarPoint{m[0] + hx, m[1] + hy}};
}

PlanarPoint apply_motion(const Rat& x, const Rat& y, const Rat& z, const PlanarPoint& w) {
  const Rat den = z * z + 1;
  const Rat c = (z * z - 1) / den, s = 2 * z / den;
  const Rat u = w.x - x, v = w.y - y;
  return {x + c * u - s * v, y + s * u + c * v};
}

std::set<Rat> distance_set(std::span<const PlanarPoint> points) {
  std::set<Rat> d;
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j) d.insert(squared_distance(points[i], points[j]));
  return d;
}

QuadrupleReport quadruple_count(std::span<const PlanarPoint> points, std::size_t cap) {
  require_points(points, cap);
  const std::size_t n = points.size();
  std::vector<Rat> dist;
  dist.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist.push_back(squared_distance(points[i], points[j]));

  QuadrupleReport r;
  r.points = n;
  for (std::size_t p = 0; p < n * n; ++p) {
    if (p / n == p % n) continue;
    for (std::size_t q = 0; q < n * n; ++q)
      if (q / n != q % n && dist[p] == dist[q]) ++r.total;
  }
  r.distance_count = distance_set(points).size();
  if (r.distance_count > 0) {
    const Int pairs(static_cast<unsigned long>(n * n - n));
    r.cs_bound = Rat(pairs * pairs, Int(static_cast<unsigned long>(r.distance_count)));
    r.cs_bound.canonicalize();
    r.cs_holds = Rat(Int(static_cast<unsigned long>(r.total))) >= r.cs_bound;
  }
  return r;
}

QuadrupleReport quadruple_incidence_check(std::span<const PlanarPoint> points, std::size_t cap) {
  QuadrupleReport r = quadruple_count(points, cap);
  const std::size_t n = points.size();

  // Line index i*n + j carries the pair (e_i, e_j).
  std::vector<Line3> lines;
  lines.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lines.push_back(motion_line(points[i], points[j]).line);
  for (std::size_t p = 0; p < lines.size(); ++p)
    for (std::size_t q = p + 1; q < lines.size(); ++q)
      if (line_intersection(lines[p], lines[q])) r.rotational += 2;

  for (std::size_t e1 = 0; e1 < n; ++e1)
    for (std::size_t e2 = 0; e2 < n; ++e2) {
      if (e1 == e2) continue;
      for (std::size_t e3 = 0; e3 < n; ++e3) {
        const PlanarPoint target = points[e2] + (points[e3] - points[e1]);
        for (std::size_t e4 = 0; e4 < n; ++e4)
          if (points[e4] == target) ++r.translational;
      }
    }
  r.consistent = r.rotational + r.translational == r.total;
  return r;
}

std::vector<PlanarPoint> random_planar_points(std::size_t n, std::uint64_t seed, long range, long max_den) {
  if (range < 0 || max_den < 1) throw std::invalid_argument("random_planar_points: bad coordinate range");
  std::mt19937_64 rng(seed);
  auto draw = [&]() {
    const long num = -range + static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1));
    const long den = 1 + static_cast<long>(rng() % static_cast<std::uint64_t>(max_den));
    return rat(num, den);
  };
  std::set<PlanarPoint> seen;
  std::vector<PlanarPoint> out;
  for (std::size_t tries = 0; out.size() < n; ++tries) {
    if (tries > 1000 * (n + 1)) throw std::invalid_argument("random_planar_points: coordinate range too small");
    PlanarPoint p{draw(), draw()};
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

}  // namespace polyinc
