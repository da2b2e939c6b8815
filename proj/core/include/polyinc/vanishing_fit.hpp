#pragma once

#include "polyinc/geometry.hpp"
#include "polyinc/multipoly.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace polyinc {

/// Number of monomials of degree <= D in three variables.
std::size_t monomial_count(unsigned degree);

/// Nonzero polynomial of degree <= D vanishing at every point, or nullopt
/// when the evaluation matrix has full column rank. Duplicate points are
/// ignored.
std::optional<MultiPoly> fit_on_points(std::span<const Point3> points, unsigned degree);

struct MinDegreeFit {
  unsigned degree = 0;
  MultiPoly witness;
};

/// Smallest D for which fit_on_points succeeds, with its witness.
/// Throws std::invalid_argument on an empty point list.
MinDegreeFit min_vanishing_degree(std::span<const Point3> points);

/// Nonzero polynomial of degree <= D containing every line. Each line
/// contributes D+1 vanishing conditions at t = 0, 1, ..., D, which forces the
/// degree-<=D restriction to be identically zero.
std::optional<MultiPoly> fit_on_lines(std::span<const Line3> lines, unsigned degree);

/// Sampling parameters for certified degree reduction.
struct DegreeReduceParams {
  Rat probability{1};       ///< keep probability, in (0, 1]
  std::uint64_t seed = 0;
  unsigned degree_cap = 2;
  unsigned retries = 5;     ///< total attempts
};

struct DegreeReduceResult {
  std::optional<MultiPoly> polynomial;  ///< set only when every target line verified
  unsigned attempts = 0;
  std::size_t sampled = 0;              ///< lines kept in the successful (or last) attempt
};

/// Keeps each line of `sample_from` independently with the given probability,
/// fits a polynomial of degree <= cap on the kept lines and returns it only if
/// every line of `targets` lies on its zero set. Retries use fresh sub-seeds
/// derived from params.seed. Throws std::invalid_argument for a probability
/// outside (0, 1].
DegreeReduceResult degree_reduce(std::span<const Line3> sample_from, std::span<const Line3> targets,
                                 const DegreeReduceParams& params);

}  // namespace polyinc
