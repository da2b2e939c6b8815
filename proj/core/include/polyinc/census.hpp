#pragma once

#include "polyinc/geometry.hpp"
#include "polyinc/planar.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyinc {

/// Every point where at least two input lines meet, with the number of
/// input lines through it.
struct IntersectionCensus {
  std::map<Point3, std::size_t> multiplicity;
  std::size_t line_count = 0;

  std::vector<Point3> points_with_multiplicity_at_least(std::size_t k) const;
  /// Sum over points of C(mult, 2).
  std::size_t pair_count() const;
};

/// All-pairs intersection census. Throws std::invalid_argument when two
/// input lines coincide.
IntersectionCensus intersection_census(std::span<const Line3> lines);

/// Points where between k and 2k lines meet. Throws for k < 2.
std::vector<Point3> pk_census(const IntersectionCensus& census, std::size_t k);

struct Joint {
  Point3 point;
  std::array<std::size_t, 3> witness;  ///< indices of three lines forming the joint
};

struct JointsReport {
  std::vector<Joint> joints;
  std::size_t line_count = 0;
  double ratio = 0;  ///< joints / N^{3/2}
  std::size_t count() const { return joints.size(); }
};

JointsReport count_joints(std::span<const Line3> lines);

struct ConcentrationReport {
  std::size_t max_coplanar = 0;
  std::optional<Plane> plane_witness;
  std::size_t max_coquadric = 0;
  std::optional<MultiPoly> quadric_witness;
  std::string quadric_strategy;  ///< "all-lines", "exhaustive-triples" or "prefix-triples"
};

/// Largest number of input lines in one plane and in one degree-2 surface.
/// Planes are spanned by coplanar line pairs. Quadric candidates: a fit
/// through every line, then the quadric through each pairwise-skew triple
/// (all triples up to `exhaustive_limit` lines, triples of the first
/// `exhaustive_limit` lines beyond that).
ConcentrationReport concentration(std::span<const Line3> lines, std::size_t exhaustive_limit = 20);

struct IncidenceReport {
  std::size_t incidences = 0;
  std::size_t points = 0;
  std::size_t lines = 0;
  double bound = 0;  ///< n^{2/3} m^{2/3} + n + m
  double ratio = 0;  ///< incidences / bound
};

/// Exact point-line incidence count in the plane. Throws on duplicate
/// points or lines.
IncidenceReport planar_incidences(std::span<const PlanarPoint> points, std::span<const PlanarLine> lines);

enum class ConfigKind { GridJoints, HyperboloidRulings, PlanarGrid, RandomLines, ConeRulings, Gk2Config, SztExtremal };

std::string to_string(ConfigKind kind);
/// Throws std::invalid_argument for unknown names.
ConfigKind parse_config_kind(const std::string& name);

struct Configuration {
  ConfigKind kind{};
  std::size_t size = 0;
  std::uint64_t seed = 0;
  std::vector<Point3> points;
  std::vector<Line3> lines;
  std::vector<PlanarPoint> planar_points;
  std::vector<PlanarLine> planar_lines;
};

/// Deterministic fixture families:
///  - grid_joints(k): 3k² axis-parallel lines through {0..k-1}³ (k³ joints)
///  - hyperboloid_rulings(n): n lines of each ruling of x²+y²-z² = 1
///  - planar_grid(k): k×k planar points with their k horizontal and k vertical lines
///  - random_lines(n): n distinct lines with small integer data (seeded)
///  - cone_rulings(n): n rulings of x²+y² = z², all through the origin
///  - gk2_config(N): N² x-parallel lines through {0..N-1}² in (y, z) and the
///    N³ grid points; no plane holds more than N of the lines
///  - szt_extremal(k): points [k]×[2k²] and lines y = ax + b, a ∈ [k], b ∈ [k²]
/// Throws std::invalid_argument for a size outside the family's cap.
Configuration make_configuration(ConfigKind kind, std::size_t size, std::uint64_t seed = 0);

/// Rational point ((1-t²)/(1+t²), 2t/(1+t²)) of the unit circle.
PlanarPoint circle_point(const Rat& t);

/// Ruling of x²+y²-z² = 1 through the circle point of parameter t; `sign`
/// (+1 or -1) picks the family.
Line3 hyperboloid_ruling(const Rat& t, int sign);

}  // namespace polyinc
