#include "polyinc/census.hpp"
#include "polyinc/vanishing_fit.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace polyinc;
using polyinc::test::cst;
using polyinc::test::X;
using polyinc::test::Y;
using polyinc::test::Z;

namespace {

Point3 P(long x, long y, long z) { return {Rat(x), Rat(y), Rat(z)}; }

std::vector<Point3> cube() {
  std::vector<Point3> pts;
  for (long x = 0; x < 2; ++x)
    for (long y = 0; y < 2; ++y)
      for (long z = 0; z < 2; ++z) pts.push_back(P(x, y, z));
  return pts;
}

std::vector<Point3> grid3() {
  std::vector<Point3> pts;
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y)
      for (long z = 0; z < 3; ++z) pts.push_back(P(x, y, z));
  return pts;
}

// Evaluation matrix built from the monomial list, ranked by the test-side elimination.
std::size_t evaluation_rank(const std::vector<Point3>& pts, unsigned degree) {
  std::vector<std::vector<Rat>> rows;
  for (const Point3& p : pts) {
    std::vector<Rat> row;
    for (const Monomial& m : monomials_up_to(3, degree)) row.push_back(monomial_value(m, p.span()));
    rows.push_back(row);
  }
  return test::gauss_rank(rows);
}

bool vanishes_on(const MultiPoly& p, const std::vector<Point3>& pts) {
  for (const Point3& w : pts)
    if (poly_eval(p, w.span()) != 0) return false;
  return true;
}

std::vector<Point3> random_points(std::mt19937_64& rng, std::size_t n) {
  std::vector<Point3> pts;
  for (std::size_t i = 0; i < n; ++i)
    pts.emplace_back(test::small_rat(rng, 20, 3), test::small_rat(rng, 20, 3), test::small_rat(rng, 20, 3));
  return pts;
}

MultiPoly hyperboloid() { return X().pow(2) + Y().pow(2) - Z().pow(2) - cst(1); }

}  // namespace

TEST_CASE("monomial_count") {
  CHECK(monomial_count(0) == 1);
  CHECK(monomial_count(1) == 4);
  CHECK(monomial_count(2) == 10);
  CHECK(monomial_count(3) == 20);
  CHECK(monomial_count(5) == 56);
}

TEST_CASE("fit_on_points examples") {
  auto q = fit_on_points(cube(), 2);
  REQUIRE(q.has_value());
  CHECK_FALSE(q->is_zero());
  CHECK(q->degree() <= 2);
  CHECK(vanishes_on(*q, cube()));

  std::vector<Point3> origin{P(0, 0, 0)};
  auto l = fit_on_points(origin, 1);
  REQUIRE(l.has_value());
  CHECK(l->degree() == 1);
  CHECK(vanishes_on(*l, origin));

  std::vector<Point3> simplex{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1)};
  CHECK(evaluation_rank(simplex, 1) == 4);
  CHECK_FALSE(fit_on_points(simplex, 1).has_value());
}

TEST_CASE("fit_on_points ignores duplicate points") {
  std::vector<Point3> pts{P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 0), P(1, 0, 0)};
  auto p = fit_on_points(pts, 1);
  REQUIRE(p.has_value());
  CHECK(vanishes_on(*p, pts));
}

TEST_CASE("min_vanishing_degree examples") {
  std::vector<Point3> collinear{P(0, 0, 0), P(1, 1, 1), P(2, 2, 2)};
  CHECK(min_vanishing_degree(collinear).degree == 1);

  auto c = min_vanishing_degree(cube());
  CHECK(evaluation_rank(cube(), 1) == 4);
  CHECK(c.degree == 2);
  CHECK(vanishes_on(c.witness, cube()));

  auto g = min_vanishing_degree(grid3());
  CHECK(evaluation_rank(grid3(), 2) == 10);
  CHECK(g.degree == 3);
  CHECK(vanishes_on(g.witness, grid3()));
  CHECK(vanishes_on(X() * (X() - cst(1)) * (X() - cst(2)), grid3()));

  CHECK_THROWS_AS(min_vanishing_degree(std::vector<Point3>{}), std::invalid_argument);
}

TEST_CASE("underdetermined fits always succeed and vanish exactly") {
  std::mt19937_64 rng(41);
  for (int set = 0; set < 50; ++set) {
    const std::size_t n = 1 + rng() % 60;
    auto pts = random_points(rng, n);
    std::set<Point3> distinct(pts.begin(), pts.end());
    for (unsigned d = 0; d <= 5; ++d) {
      auto p = fit_on_points(pts, d);
      if (distinct.size() < monomial_count(d)) REQUIRE(p.has_value());
      if (!p) {
        CHECK(evaluation_rank(std::vector<Point3>(distinct.begin(), distinct.end()), d) == monomial_count(d));
        continue;
      }
      CHECK_FALSE(p->is_zero());
      CHECK(p->degree() <= static_cast<int>(d));
      CHECK(vanishes_on(*p, pts));
    }
  }
}

TEST_CASE("min_vanishing_degree never decreases when points are added") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    auto pts = random_points(rng, 24);
    unsigned prev = 0;
    std::vector<Point3> prefix;
    for (const Point3& p : pts) {
      prefix.push_back(p);
      auto fit = min_vanishing_degree(prefix);
      CHECK(fit.degree >= prev);
      CHECK(vanishes_on(fit.witness, prefix));
      prev = fit.degree;
    }
  }
}

TEST_CASE("fit_on_lines examples") {
  const Line3 r1(P(1, 0, 0), P(0, 1, 1)), r2(P(1, 0, 0), P(0, 1, -1));
  std::vector<Line3> rulings{r1, r2};
  auto q = fit_on_lines(rulings, 2);
  REQUIRE(q.has_value());
  for (const Line3& l : rulings) CHECK(line_on_surface(l, *q));

  std::vector<Line3> axes{Line3(P(0, 0, 0), P(1, 0, 0)), Line3(P(0, 0, 0), P(0, 1, 0))};
  auto plane = fit_on_lines(axes, 1);
  REQUIRE(plane.has_value());
  CHECK(plane->degree() == 1);
  CHECK(plane->terms().size() == 1);
  CHECK(plane->coefficient(Z().leading_term().first) != 0);

  std::vector<Line3> skew{Line3(P(0, 0, 0), P(1, 0, 0)), Line3(P(0, 0, 1), P(0, 1, 0)), Line3(P(0, 1, 2), P(1, 0, 1)),
                          Line3(P(3, 0, 0), P(1, 2, 3))};
  CHECK_FALSE(fit_on_lines(skew, 1).has_value());
}

TEST_CASE("fit_on_lines on hyperboloid rulings recovers the quadric") {
  std::vector<Line3> lines;
  for (long t = 0; t < 6; ++t) lines.push_back(hyperboloid_ruling(Rat(t), +1));
  auto q = fit_on_lines(lines, 2);
  REQUIRE(q.has_value());
  for (const Line3& l : lines) CHECK(line_on_surface(l, *q));
  // Three skew rulings already pin the quadric, so q is a multiple of it.
  CHECK(divides(hyperboloid(), *q));
}

TEST_CASE("degree_reduce examples") {
  std::vector<Line3> l1, l2;
  for (long t = 0; t < 60; ++t) l1.push_back(hyperboloid_ruling(Rat(t), +1));
  for (long t = 0; t < 40; ++t) l2.push_back(hyperboloid_ruling(Rat(t), -1));
  DegreeReduceParams params;
  params.probability = rat(1, 4);
  params.degree_cap = 2;
  params.retries = 5;
  auto res = degree_reduce(l1, l2, params);
  REQUIRE(res.polynomial.has_value());
  CHECK(res.polynomial->degree() == 2);
  CHECK(res.attempts <= 5);
  for (const Line3& l : l2) CHECK(line_on_surface(l, *res.polynomial));
  CHECK(divides(hyperboloid(), *res.polynomial));

  std::vector<Line3> axes{Line3(P(0, 0, 0), P(1, 0, 0)), Line3(P(0, 0, 0), P(0, 1, 0))};
  DegreeReduceParams all;
  all.degree_cap = 1;
  auto plane = degree_reduce(axes, axes, all);
  REQUIRE(plane.polynomial.has_value());
  CHECK(divides(Z(), *plane.polynomial));
  CHECK(plane.polynomial->degree() == 1);

  std::vector<Line3> lonely{Line3(P(5, 5, 5), P(1, 2, 3))};
  auto none = degree_reduce(axes, lonely, all);
  CHECK_FALSE(none.polynomial.has_value());
  CHECK(none.attempts == all.retries);
}

TEST_CASE("degree_reduce is reproducible for a fixed seed") {
  std::vector<Line3> l1, l2;
  for (long t = 0; t < 30; ++t) l1.push_back(hyperboloid_ruling(Rat(t), +1));
  for (long t = 0; t < 10; ++t) l2.push_back(hyperboloid_ruling(Rat(t), -1));
  for (std::uint64_t seed : {0u, 1u, 99u}) {
    DegreeReduceParams p;
    p.probability = rat(1, 3);
    p.seed = seed;
    auto a = degree_reduce(l1, l2, p);
    auto b = degree_reduce(l1, l2, p);
    CHECK(a.attempts == b.attempts);
    CHECK(a.sampled == b.sampled);
    CHECK(a.polynomial == b.polynomial);
  }
}

TEST_CASE("degree_reduce rejects probabilities outside (0, 1]") {
  std::vector<Line3> ls{Line3(P(0, 0, 0), P(1, 0, 0))};
  DegreeReduceParams p;
  p.probability = 0;
  CHECK_THROWS_AS(degree_reduce(ls, ls, p), std::invalid_argument);
  p.probability = rat(3, 2);
  CHECK_THROWS_AS(degree_reduce(ls, ls, p), std::invalid_argument);
}
