#pragma once

#include "polyinc/geometry.hpp"
#include "polyinc/planar.hpp"

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

namespace polyinc {

/// Line of the non-translational orientation-preserving rigid motions taking
/// a to b, in coordinates (center x, center y, cot(θ/2)):
///   {((a+b)/2 + (z/2)·rot90(b-a), z) : z}, rot90(u, v) = (-v, u).
struct MotionLine {
  Line3 line;
  PlanarPoint a, b;
};

MotionLine motion_line(const PlanarPoint& a, const PlanarPoint& b);

/// Inverse of motion_line on its image: the z = 0 point gives the midpoint and
/// the direction, scaled to unit z, gives rot90(b-a)/2. Throws
/// std::invalid_argument for a horizontal line, which no pair produces.
std::pair<PlanarPoint, PlanarPoint> recover_pair(const Line3& l);

/// Counterclockwise rotation of w about (x, y) by θ with cot(θ/2) = z, using
/// cos θ = (z²-1)/(z²+1) and sin θ = 2z/(z²+1).
PlanarPoint apply_motion(const Rat& x, const Rat& y, const Rat& z, const PlanarPoint& w);

/// Squared distances over unordered pairs of distinct points.
std::set<Rat> distance_set(std::span<const PlanarPoint> points);

struct QuadrupleReport {
  std::uint64_t total = 0;          ///< ordered (e1, e2, e3, e4), e1 != e2, e3 != e4, |e1e2| = |e3e4|
  std::uint64_t rotational = 0;     ///< ordered pairs of distinct intersecting motion lines
  std::uint64_t translational = 0;  ///< quadruples with e3 - e1 = e4 - e2
  std::size_t points = 0;
  std::size_t distance_count = 0;   ///< |D|
  Rat cs_bound;                     ///< (N²-N)²/|D|, 0 when |D| = 0
  bool cs_holds = true;             ///< total >= cs_bound
  bool consistent = true;           ///< rotational + translational = total
};

inline constexpr std::size_t kQuadrupleCap = 40;

/// Brute-force count over ordered quadruples. Throws std::invalid_argument
/// on duplicate points or more than `cap` points.
QuadrupleReport quadruple_count(std::span<const PlanarPoint> points, std::size_t cap = kQuadrupleCap);

/// quadruple_count plus the independent count through motion-line
/// intersections and direct translation matching; `consistent` records
/// whether the two agree.
QuadrupleReport quadruple_incidence_check(std::span<const PlanarPoint> points, std::size_t cap = kQuadrupleCap);

/// n distinct points with coordinates p/q, |p| <= range, 1 <= q <= max_den.
std::vector<PlanarPoint> random_planar_points(std::size_t n, std::uint64_t seed, long range = 6, long max_den = 2);

}  // namespace polyinc
