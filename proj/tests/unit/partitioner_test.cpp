#include "polyinc/partitioner.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
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

std::vector<Point3> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Point3> pts;
  while (pts.size() < n)
    pts.insert(Point3(test::small_rat(rng, 20, 3), test::small_rat(rng, 20, 3), test::small_rat(rng, 20, 3)));
  return {pts.begin(), pts.end()};
}

char sign_char(const Rat& v) { return v > 0 ? '+' : '-'; }

// Checks the whole partition contract by exact re-evaluation, including a
// replay of every round's bisection on the classes it was applied to.
void check_contract(const std::vector<Point3>& pts, const PartitionResult& r, std::size_t s) {
  REQUIRE(r.complete);
  CHECK(r.points == pts.size());
  CHECK(r.target == s);
  const std::size_t rounds = static_cast<std::size_t>(std::log2(static_cast<double>(s)) + 0.5);
  CHECK(r.factors.size() <= rounds);
  REQUIRE(r.class_bound.size() == rounds + 1);
  CHECK(r.class_bound[0] == pts.size());
  for (std::size_t i = 1; i <= rounds; ++i) CHECK(r.class_bound[i] == (r.class_bound[i - 1] + 1) / 2);

  unsigned degree_sum = 0;
  for (const MultiPoly& f : r.factors) {
    CHECK(f.degree() >= 1);
    degree_sum += static_cast<unsigned>(f.degree());
  }
  CHECK(r.total_degree == degree_sum);
  CHECK(static_cast<double>(r.total_degree) <= 8 * std::cbrt(static_cast<double>(s)) + 4);

  std::set<Point3> boundary(r.boundary.begin(), r.boundary.end());
  for (const Point3& w : pts) {
    std::string sig;
    bool on_zero = false;
    for (const MultiPoly& f : r.factors) {
      const Rat v = poly_eval(f, w.span());
      on_zero = on_zero || v == 0;
      sig += sign_char(v);
    }
    CHECK(boundary.count(w) == (on_zero ? 1u : 0u));
    if (!on_zero) {
      REQUIRE(r.assignment.count(w) == 1);
      CHECK(r.assignment.at(w) == sig);
    } else {
      CHECK(r.assignment.count(w) == 0);
    }
  }

  auto census = cell_census(r);
  CHECK(census.size() <= s);
  std::size_t total = 0;
  for (const auto& [sig, n] : census) {
    CHECK(n <= r.class_bound.back());
    CHECK(n <= (pts.size() + s - 1) / s + rounds);
    total += n;
  }
  CHECK(total + r.boundary.size() == pts.size());

  for (std::size_t i = 0; i < r.factors.size(); ++i) {
    std::map<std::string, std::vector<Point3>> classes;
    for (const Point3& w : pts) {
      std::string prefix;
      bool dropped = false;
      for (std::size_t j = 0; j < i; ++j) {
        const Rat v = poly_eval(r.factors[j], w.span());
        dropped = dropped || v == 0;
        prefix += sign_char(v);
      }
      if (!dropped) classes[prefix].push_back(w);
    }
    std::vector<std::vector<Point3>> list;
    for (auto& [k, v] : classes) list.push_back(v);
    CHECK(bisects(r.factors[i], list));
  }
}

}  // namespace

TEST_CASE("lifted_dimension and lift examples") {
  CHECK(lifted_dimension(1) == 3);
  CHECK(lifted_dimension(2) == 9);
  CHECK(lifted_dimension(3) == 19);
  CHECK(lift(P(1, 1, 1), 1) == std::vector<Rat>{Rat(1), Rat(1), Rat(1)});
  CHECK(lift(P(2, 0, 0), 2) ==
        std::vector<Rat>{Rat(2), Rat(0), Rat(0), Rat(4), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
  for (unsigned d = 1; d <= 4; ++d) {
    auto z = lift(P(0, 0, 0), d);
    CHECK(z.size() == lifted_dimension(d));
    for (const Rat& v : z) CHECK(v == 0);
  }
  CHECK_THROWS_AS(lift(P(1, 2, 3), 0), std::invalid_argument);
}

TEST_CASE("scheduled degree covers the class count") {
  CHECK(scheduled_degree(1) == 1);
  CHECK(scheduled_degree(3) == 1);
  CHECK(scheduled_degree(4) == 2);
  CHECK(scheduled_degree(9) == 2);
  CHECK(scheduled_degree(10) == 3);
  for (std::size_t k = 1; k <= 64; ++k) {
    const unsigned d = scheduled_degree(k);
    CHECK(lifted_dimension(d) >= k);
    if (d > 1) CHECK(lifted_dimension(d - 1) < k);
  }
}

TEST_CASE("bisects counts strict sides against half the class") {
  std::vector<std::vector<Point3>> one{{P(0, 0, 0), P(1, 0, 0)}};
  CHECK(bisects(X() - cst(rat(1, 2)), one));
  CHECK_FALSE(bisects(X() + cst(1), one));
  CHECK(bisects(X(), one));  // one zero, one positive
  std::vector<std::vector<Point3>> odd{{P(0, 0, 0), P(1, 0, 0), P(2, 0, 0)}};
  CHECK(bisects(X() - cst(1), odd));
  CHECK(bisects(X() - cst(2), odd));  // 2 negative = ⌈3/2⌉
  CHECK_FALSE(bisects(X() - cst(3), odd));
}

TEST_CASE("bisect_classes examples") {
  std::vector<std::vector<Point3>> pair{{P(0, 0, 0), P(1, 0, 0)}};
  auto b = bisect_classes(pair, 1, 0);
  REQUIRE(b.has_value());
  CHECK(b->method == BisectMethod::Enumeration);
  CHECK(bisects(b->polynomial, pair));
  CHECK(b->polynomial.degree() == 1);

  std::vector<std::vector<Point3>> axes{
      {P(1, 0, 0), P(-1, 0, 0)}, {P(0, 2, 0), P(0, -1, 0)}, {P(0, 0, 3), P(0, 0, -2)}};
  auto a = bisect_classes(axes, 1, 0);
  REQUIRE(a.has_value());
  CHECK(bisects(a->polynomial, axes));

  std::vector<std::vector<Point3>> c{cube()};
  auto cb = bisect_classes(c, 1, 0);
  REQUIRE(cb.has_value());
  CHECK(bisects(cb->polynomial, c));
  for (const Point3& w : cube()) CHECK(poly_eval(cb->polynomial, w.span()) != 0);

  std::vector<std::vector<Point3>> four{{P(0, 0, 0), P(1, 0, 0)}, {P(0, 1, 0), P(1, 1, 0)},
                                        {P(0, 0, 1), P(1, 0, 1)}, {P(5, 5, 5), P(6, 6, 6)}};
  CHECK_THROWS_AS(bisect_classes(four, 1, 0), std::invalid_argument);
}

TEST_CASE("bisect_classes search certifies large instances") {
  auto pts = random_points(120, 5);
  std::vector<std::vector<Point3>> classes(4);
  for (std::size_t i = 0; i < pts.size(); ++i) classes[i % 4].push_back(pts[i]);
  auto b = bisect_classes(classes, 2, 3);
  REQUIRE(b.has_value());
  CHECK(b->method == BisectMethod::Search);
  CHECK(b->polynomial.degree() <= 2);
  CHECK(bisects(b->polynomial, classes));
  auto again = bisect_classes(classes, 2, 3);
  REQUIRE(again.has_value());
  CHECK(again->polynomial == b->polynomial);
}

TEST_CASE("partition examples") {
  auto c = partition(cube(), 8, 0);
  check_contract(cube(), c, 8);
  CHECK(c.factors.size() == 3);
  CHECK(c.total_degree == 3);
  auto cc = cell_census(c);
  CHECK(cc.size() == 8);
  for (const auto& [sig, n] : cc) CHECK(n == 1);

  std::vector<Point3> two{P(0, 0, 0), P(1, 2, 3)};
  auto t = partition(two, 2, 0);
  check_contract(two, t, 2);
  CHECK(t.factors.size() == 1);
  auto tc = cell_census(t);
  CHECK(tc.size() == 2);
  for (const auto& [sig, n] : tc) CHECK(n == 1);

  auto pts = random_points(64, 1);
  auto r = partition(pts, 4, 0);
  check_contract(pts, r, 4);
  CHECK(r.class_bound.back() == 16);
  for (const auto& [sig, n] : cell_census(r)) CHECK(n <= 17);
}

TEST_CASE("partition contract across sizes") {
  for (std::size_t s : {2u, 4u, 8u, 16u}) {
    auto pts = random_points(64, 10 + s);
    check_contract(pts, partition(pts, s, s), s);
  }
  auto big = random_points(256, 77);
  check_contract(big, partition(big, 4, 1), 4);
}

TEST_CASE("partition is deterministic for a seed") {
  auto pts = random_points(80, 3);
  auto a = partition(pts, 8, 42), b = partition(pts, 8, 42);
  CHECK(a.factors == b.factors);
  CHECK(a.assignment == b.assignment);
  CHECK(a.boundary == b.boundary);
}

TEST_CASE("partition rejects bad targets and duplicates") {
  CHECK_THROWS_AS(partition(cube(), 6, 0), std::invalid_argument);
  CHECK_THROWS_AS(partition(cube(), 1, 0), std::invalid_argument);
  std::vector<Point3> dup{P(0, 0, 0), P(0, 0, 0)};
  CHECK_THROWS_AS(partition(dup, 2, 0), std::invalid_argument);
}

TEST_CASE("line_crossings examples") {
  const Line3 z_axis(P(0, 0, 0), P(0, 0, 1)), x_axis(P(0, 0, 0), P(1, 0, 0));
  PartitionResult r;
  r.factors = {Z() - MultiPoly::constant(3, rat(1, 4)), Z() - MultiPoly::constant(3, rat(3, 4))};
  r.total_degree = 2;
  auto c = line_crossings(z_axis, r);
  CHECK_FALSE(c.contained);
  CHECK(c.count == 2);

  PartitionResult q;
  q.factors = {Z().pow(2) + cst(1)};
  q.total_degree = 2;
  CHECK(line_crossings(x_axis, q).count == 0);

  PartitionResult flat;
  flat.factors = {Y()};
  flat.total_degree = 1;
  CHECK(line_crossings(x_axis, flat).contained);

  auto cube_part = partition(cube(), 8, 0);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const Point3 base(test::small_rat(rng), test::small_rat(rng), test::small_rat(rng));
    Point3 dir(test::small_rat(rng), test::small_rat(rng), test::small_rat(rng));
    if (dir.is_zero()) dir = P(1, 1, 1);
    auto lc = line_crossings(Line3(base, dir), cube_part);
    if (!lc.contained) CHECK(lc.count <= cube_part.total_degree);
  }
}

TEST_CASE("crossing counts match roots of the restricted factors") {
  // Distinct roots along the x-axis are counted once each.
  PartitionResult r;
  for (long k = -3; k <= 3; ++k) r.factors.push_back(X() - MultiPoly::constant(3, rat(k, 2)));
  r.factors.push_back((X() - cst(1)) * (X() + cst(5)));  // x = 1 repeats an earlier root
  r.total_degree = 9;
  auto c = line_crossings(Line3(P(0, 0, 0), P(1, 0, 0)), r);
  CHECK_FALSE(c.contained);
  CHECK(c.count == 8);
}
