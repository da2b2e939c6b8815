#include "polyinc/census.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace polyinc;
using polyinc::test::cst;
using polyinc::test::X;
using polyinc::test::Y;
using polyinc::test::Z;

namespace {

Point3 P(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z)}; }

const Line3 x_axis(P(0, 0, 0), P(1, 0, 0)), y_axis(P(0, 0, 0), P(0, 1, 0)), z_axis(P(0, 0, 0), P(0, 0, 1));

std::vector<Line3> grid_lines(long k) { return make_configuration(ConfigKind::GridJoints, static_cast<std::size_t>(k)).lines; }

std::size_t brute_force_pairs(const std::vector<Line3>& lines) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j)
      if (line_intersection(lines[i], lines[j])) ++count;
  return count;
}

// Joints by trying every triple of lines.
std::set<Point3> brute_force_joints(const std::vector<Line3>& lines) {
  std::set<Point3> joints;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto w = line_intersection(lines[i], lines[j]);
      if (!w) continue;
      for (std::size_t k = j + 1; k < lines.size(); ++k)
        if (is_joint(lines[i], lines[j], lines[k], *w)) joints.insert(*w);
    }
  return joints;
}

std::size_t brute_force_incidences(const std::vector<PlanarPoint>& pts, const std::vector<PlanarLine>& lines) {
  std::size_t count = 0;
  for (const auto& p : pts)
    for (const auto& l : lines) count += l.contains(p) ? 1 : 0;
  return count;
}

}  // namespace

TEST_CASE("intersection_census examples") {
  std::vector<Line3> axes{x_axis, y_axis, z_axis};
  auto c = intersection_census(axes);
  REQUIRE(c.multiplicity.size() == 1);
  CHECK(c.multiplicity.at(P(0, 0, 0)) == 3);

  std::vector<Line3> parallel{x_axis, Line3(P(0, 1, 0), P(1, 0, 0))};
  CHECK(intersection_census(parallel).multiplicity.empty());

  auto g = intersection_census(grid_lines(2));
  CHECK(g.multiplicity.size() == 8);
  for (const auto& [p, m] : g.multiplicity) {
    CHECK(m == 3);
    for (std::size_t i = 0; i < 3; ++i) CHECK((p[i] == 0 || p[i] == 1));
  }
  std::vector<Line3> dup{x_axis, Line3(P(3, 0, 0), P(-1, 0, 0))};
  CHECK_THROWS_AS(intersection_census(dup), std::invalid_argument);
}

TEST_CASE("census identity on seeded line sets") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 10 + 5 * (seed % 11);
    auto lines = make_configuration(ConfigKind::RandomLines, n, seed).lines;
    // Mix in concurrent lines so multiplicities above 2 occur.
    for (long d = 1; d <= 3; ++d) lines.emplace_back(P(1, 1, 1), P(d, 1 - d, 2));
    std::set<Line3> distinct(lines.begin(), lines.end());
    std::vector<Line3> unique(distinct.begin(), distinct.end());
    auto c = intersection_census(unique);
    CHECK(c.pair_count() == brute_force_pairs(unique));
    CHECK(c.line_count == unique.size());
    for (const auto& [p, m] : c.multiplicity) {
      std::size_t through = 0;
      for (const Line3& l : unique) through += l.contains(p) ? 1 : 0;
      CHECK(through == m);
    }
  }
}

TEST_CASE("pk_census examples") {
  auto g = intersection_census(grid_lines(2));
  CHECK(pk_census(g, 2).size() == 8);
  CHECK(pk_census(g, 4).empty());
  std::vector<Line3> pair{x_axis, y_axis};
  auto p = pk_census(intersection_census(pair), 2);
  REQUIRE(p.size() == 1);
  CHECK(p.front() == P(0, 0, 0));
  CHECK_THROWS_AS(pk_census(g, 1), std::invalid_argument);
}

TEST_CASE("pk_census selects multiplicities in [k, 2k]") {
  std::vector<Line3> star;
  for (long d = 1; d <= 7; ++d) star.emplace_back(P(0, 0, 0), P(1, d, d * d));
  star.emplace_back(P(5, 0, 0), P(0, 1, 0));
  star.emplace_back(P(5, 0, 0), P(0, 0, 1));
  auto c = intersection_census(star);
  for (std::size_t k = 2; k <= 5; ++k)
    for (const Point3& p : pk_census(c, k)) {
      CHECK(c.multiplicity.at(p) >= k);
      CHECK(c.multiplicity.at(p) <= 2 * k);
    }
  CHECK(pk_census(c, 4).size() == 1);  // origin, 7 lines
  CHECK(pk_census(c, 2).size() >= 1);
}

TEST_CASE("count_joints examples") {
  std::vector<Line3> axes{x_axis, y_axis, z_axis};
  CHECK(count_joints(axes).count() == 1);
  auto grid = count_joints(grid_lines(3));
  CHECK(grid.line_count == 27);
  CHECK(grid.count() == 27);
  CHECK(grid.ratio == doctest::Approx(27.0 / std::pow(27.0, 1.5)));
  std::vector<Line3> flat;
  for (long d = 0; d < 5; ++d) flat.emplace_back(P(0, 0, 0), P(1, d, 0));
  CHECK(count_joints(flat).count() == 0);
}

TEST_CASE("grid joints match the triple oracle and the N^{3/2} bound") {
  for (long k = 2; k <= 5; ++k) {
    auto lines = grid_lines(k);
    CHECK(lines.size() == static_cast<std::size_t>(3 * k * k));
    auto report = count_joints(lines);
    auto oracle = brute_force_joints(lines);
    CHECK(report.count() == static_cast<std::size_t>(k * k * k));
    CHECK(report.count() == oracle.size());
    const long n = 3 * k * k;
    CHECK(k * k * k * k * k * k <= n * n * n);  // k³ <= (3k²)^{3/2}, squared
    for (const Joint& j : report.joints) {
      CHECK(oracle.count(j.point) == 1);
      CHECK(is_joint(lines[j.witness[0]], lines[j.witness[1]], lines[j.witness[2]], j.point));
    }
  }
}

TEST_CASE("joints are a subset of points of multiplicity >= 3") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    auto lines = make_configuration(ConfigKind::RandomLines, 40, seed).lines;
    auto census = intersection_census(lines);
    auto joints = count_joints(lines);
    CHECK(joints.count() <= census.points_with_multiplicity_at_least(3).size());
    for (const Joint& j : joints.joints) CHECK(census.multiplicity.at(j.point) >= 3);
    CHECK(joints.count() == brute_force_joints(lines).size());
  }
}

TEST_CASE("hyperboloid rulings meet in pairs only") {
  for (std::size_t n : {3u, 10u, 25u}) {
    auto lines = make_configuration(ConfigKind::HyperboloidRulings, n).lines;
    auto c = intersection_census(lines);
    CHECK(c.pair_count() == brute_force_pairs(lines));
    CHECK_FALSE(c.multiplicity.empty());
    for (const auto& [p, m] : c.multiplicity) CHECK(m == 2);
  }
}

TEST_CASE("concentration examples") {
  auto grid = concentration(grid_lines(2));
  CHECK(grid.max_coplanar == 4);
  REQUIRE(grid.plane_witness.has_value());
  std::size_t in_plane = 0;
  for (const Line3& l : grid_lines(2)) in_plane += grid.plane_witness->contains(l) ? 1 : 0;
  CHECK(in_plane == 4);

  std::vector<Line3> ruling;
  for (long t = 0; t < 10; ++t) ruling.push_back(hyperboloid_ruling(Rat(t), +1));
  auto h = concentration(ruling);
  CHECK(h.max_coquadric == 10);
  REQUIRE(h.quadric_witness.has_value());
  for (const Line3& l : ruling) CHECK(line_on_surface(l, *h.quadric_witness));
  CHECK(divides(X().pow(2) + Y().pow(2) - Z().pow(2) - cst(1), *h.quadric_witness));

  std::vector<Line3> skew{Line3(P(0, 0, 0), P(1, 0, 0)), Line3(P(0, 0, 1), P(0, 1, 0)), Line3(P(0, 1, 2), P(1, 0, 1))};
  CHECK(concentration(skew).max_coplanar == 1);
}

TEST_CASE("quadric concentration finds a hidden regulus among noise") {
  std::vector<Line3> lines;
  for (long t = 0; t < 6; ++t) lines.push_back(hyperboloid_ruling(Rat(t), -1));
  for (const Line3& l : make_configuration(ConfigKind::RandomLines, 8, 3).lines) lines.push_back(l);
  auto c = concentration(lines);
  CHECK(c.max_coquadric >= 6);
  REQUIRE(c.quadric_witness.has_value());
  std::size_t on = 0;
  for (const Line3& l : lines) on += line_on_surface(l, *c.quadric_witness) ? 1 : 0;
  CHECK(on == c.max_coquadric);
  CHECK(c.quadric_strategy == "exhaustive-triples");
}

TEST_CASE("planar_incidences examples") {
  auto g = make_configuration(ConfigKind::PlanarGrid, 2);
  auto r = planar_incidences(g.planar_points, g.planar_lines);
  CHECK(r.incidences == 8);

  std::vector<PlanarPoint> on_line;
  for (long i = 0; i < 7; ++i) on_line.push_back({Rat(i), Rat(2 * i + 1)});
  std::vector<PlanarLine> one{PlanarLine::graph(Rat(2), Rat(1))};
  auto s = planar_incidences(on_line, one);
  CHECK(s.incidences == 7);
  CHECK(s.bound >= 7);

  auto e = make_configuration(ConfigKind::SztExtremal, 4);
  auto er = planar_incidences(e.planar_points, e.planar_lines);
  CHECK(er.incidences == brute_force_incidences(e.planar_points, e.planar_lines));
  CHECK(er.incidences == 256);
  CHECK(er.points == 4 * 32);
  CHECK(er.lines == 64);
  CHECK(static_cast<double>(er.incidences) <= 3 * er.bound);
  CHECK(er.bound == doctest::Approx(std::cbrt(128.0 * 128.0) * std::cbrt(64.0 * 64.0) + 128 + 64));

  std::vector<PlanarPoint> dup{{Rat(0), Rat(0)}, {Rat(0), Rat(0)}};
  CHECK_THROWS_AS(planar_incidences(dup, one), std::invalid_argument);
}

TEST_CASE("planar grids stay within three times the incidence bound") {
  for (std::size_t k = 1; k <= 10; ++k) {
    auto g = make_configuration(ConfigKind::PlanarGrid, k);
    auto r = planar_incidences(g.planar_points, g.planar_lines);
    CHECK(r.incidences == brute_force_incidences(g.planar_points, g.planar_lines));
    CHECK(r.incidences == 2 * k * k);
    CHECK(r.ratio < 3);
  }
}

TEST_CASE("make_configuration examples") {
  CHECK(make_configuration(ConfigKind::GridJoints, 2).lines.size() == 12);
  auto h = make_configuration(ConfigKind::HyperboloidRulings, 10);
  CHECK(h.lines.size() == 20);
  for (const Line3& l : h.lines) CHECK(line_on_surface(l, X().pow(2) + Y().pow(2) - Z().pow(2) - cst(1)));
  auto g = make_configuration(ConfigKind::PlanarGrid, 3);
  CHECK(g.planar_points.size() == 9);
  CHECK(g.planar_lines.size() == 6);
  auto c = make_configuration(ConfigKind::ConeRulings, 12);
  CHECK(c.lines.size() == 12);
  for (const Line3& l : c.lines) CHECK(line_on_surface(l, X().pow(2) + Y().pow(2) - Z().pow(2)));
}

TEST_CASE("gk2 configuration keeps at most N lines per plane") {
  for (std::size_t n = 2; n <= 4; ++n) {
    auto cfg = make_configuration(ConfigKind::Gk2Config, n);
    CHECK(cfg.lines.size() == n * n);
    CHECK(cfg.points.size() == n * n * n);
    CHECK(concentration(cfg.lines).max_coplanar <= n);
    for (const Point3& p : cfg.points) {
      std::size_t through = 0;
      for (const Line3& l : cfg.lines) through += l.contains(p) ? 1 : 0;
      CHECK(through >= 1);
    }
  }
}

TEST_CASE("random lines are deterministic and distinct") {
  auto a = make_configuration(ConfigKind::RandomLines, 50, 9);
  auto b = make_configuration(ConfigKind::RandomLines, 50, 9);
  auto c = make_configuration(ConfigKind::RandomLines, 50, 10);
  CHECK(a.lines == b.lines);
  CHECK(a.lines != c.lines);
  CHECK(std::set<Line3>(a.lines.begin(), a.lines.end()).size() == 50);
}

TEST_CASE("configuration names and caps") {
  for (ConfigKind k : {ConfigKind::GridJoints, ConfigKind::HyperboloidRulings, ConfigKind::PlanarGrid,
                       ConfigKind::RandomLines, ConfigKind::ConeRulings, ConfigKind::Gk2Config, ConfigKind::SztExtremal})
    CHECK(parse_config_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_config_kind("nonsense"), std::invalid_argument);
  CHECK_THROWS_AS(make_configuration(ConfigKind::GridJoints, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_configuration(ConfigKind::GridJoints, 11), std::invalid_argument);
  CHECK_THROWS_AS(make_configuration(ConfigKind::RandomLines, 501), std::invalid_argument);
}

TEST_CASE("circle points and rulings") {
  for (long t = -5; t <= 5; ++t) {
    const PlanarPoint c = circle_point(rat(t, 2));
    CHECK(c.x * c.x + c.y * c.y == 1);
    for (int sign : {1, -1}) {
      const Line3 l = hyperboloid_ruling(rat(t, 2), sign);
      CHECK(l.contains(Point3(c.x, c.y, Rat(0))));
      CHECK(line_on_surface(l, X().pow(2) + Y().pow(2) - Z().pow(2) - cst(1)));
    }
  }
}
