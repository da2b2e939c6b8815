#pragma once

#include "polyinc/geometry.hpp"
#include "polyinc/multipoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyinc {

/// Number of non-constant monomials of degree <= D in x, y, z:
/// (D+1)(D+2)(D+3)/6 - 1.
std::size_t lifted_dimension(unsigned degree);

/// Values at w of every monomial of degree 1..D, ordered
/// x, y, z, x², xy, xz, y², yz, z², ... Throws for D = 0.
std::vector<Rat> lift(const Point3& w, unsigned degree);

/// For every class C: #{g > 0} <= ⌈|C|/2⌉ and #{g < 0} <= ⌈|C|/2⌉.
bool bisects(const MultiPoly& g, std::span<const std::vector<Point3>> classes);

struct BisectOptions {
  std::size_t enumeration_points = 60;      ///< exact enumeration only up to this many points
  std::size_t enumeration_subsets = 20000;  ///< and this many K-subsets
  unsigned restarts = 48;
  unsigned iterations = 40;
};

/// Method that produced a bisector.
enum class BisectMethod { Enumeration, Search };

struct Bisector {
  MultiPoly polynomial;
  BisectMethod method = BisectMethod::Search;
};

/// Nonzero polynomial of degree <= D, non-constant, passing `bisects`.
/// Small instances enumerate hyperplanes through K lifted points exactly;
/// larger ones run a seeded search whose candidates are certified exactly.
/// nullopt means the search budget ran out. Throws std::invalid_argument
/// when the lifted dimension is below the number of classes with >= 2
/// points, unless `allow_underdetermined` is set.
std::optional<Bisector> bisect_classes(std::span<const std::vector<Point3>> classes, unsigned degree,
                                       std::uint64_t seed, const BisectOptions& options = {},
                                       bool allow_underdetermined = false);

struct PartitionRound {
  unsigned degree = 0;
  std::size_t classes = 0;  ///< nonempty sign classes entering the round
  std::size_t active = 0;   ///< of which hold >= 2 points
  BisectMethod method = BisectMethod::Search;
};

struct PartitionResult {
  std::vector<MultiPoly> factors;
  std::vector<PartitionRound> rounds;
  std::map<Point3, std::string> assignment;  ///< off-boundary points to "+-..." per factor
  std::vector<Point3> boundary;              ///< points where some factor vanishes
  unsigned total_degree = 0;
  std::size_t target = 0;                    ///< s
  std::size_t points = 0;                    ///< M
  std::vector<std::size_t> class_bound;      ///< b_0 = M, b_i = ⌈b_{i-1}/2⌉
  bool complete = true;
  std::string failure;                       ///< set when a round exhausted its budget
};

/// Degree the schedule assigns to a round with `classes` classes: the
/// smallest D whose lifted dimension covers them.
unsigned scheduled_degree(std::size_t classes);

/// log2(s) rounds of simultaneous bisection of every sign class. Each round
/// tries degrees from 1 up to the schedule, then up to two degrees beyond it
/// if the search budget runs out. Throws std::invalid_argument when s is not
/// a power of two >= 2 or the points are not distinct.
PartitionResult partition(std::span<const Point3> points, std::size_t s, std::uint64_t seed,
                          const BisectOptions& options = {});

/// Exact class sizes keyed by sign vector; boundary points are excluded.
std::map<std::string, std::size_t> cell_census(const PartitionResult& result);

struct CrossingReport {
  bool contained = false;  ///< some factor vanishes identically on the line
  std::size_t count = 0;   ///< distinct real parameters where the product vanishes
};

/// Sturm count of the product of factor restrictions on (-B, B), B the
/// Cauchy root bound.
CrossingReport line_crossings(const Line3& l, const PartitionResult& result);

}  // namespace polyinc
