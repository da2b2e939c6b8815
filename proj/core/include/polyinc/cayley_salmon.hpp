#pragma once

#include "polyinc/geometry.hpp"
#include "polyinc/multipoly.hpp"

#include <span>
#include <string>
#include <vector>

namespace polyinc {

/// Variable layout of the directional forms: x, y, z, v1, v2, v3.
inline constexpr std::size_t kFormArity = 6;

/// F_k(w, v) = d^k/dt^k p(w + t v) at t = 0, for k = 1, 2, 3. Each is
/// homogeneous of degree k in (v1, v2, v3), e.g.
/// F2 = sum_{i,j} p_{x_i x_j} v_i v_j.
struct DirectionalForms {
  MultiPoly f1, f2, f3;
};

/// Precondition: p has arity 3 and degree >= 1.
DirectionalForms directional_forms(const MultiPoly& p);

/// Tangency conditions along a chart: with v_chart eliminated through F1 = 0
/// and denominators cleared by the chart gradient component g,
///   G_k(m) = g^k · F_k(v_a = 1, v_b = m, v_chart = -(p_a + m p_b)/g),
/// stored as coefficient lists in m (lowest power first, formal degree k).
/// For chart 3 and p = z - f(x, y) these are -(r + 2sm + tm²) and
/// -(α + 3βm + 3γm² + δm³).
struct ChartForms {
  int chart = 3;
  MultiPoly gradient;              ///< ∂p/∂x_chart
  std::vector<MultiPoly> g2, g3;   ///< sizes 3 and 4, arity 3
};

/// Throws std::invalid_argument for a chart outside 1..3 or an identically
/// zero chart gradient.
ChartForms chart_forms(const MultiPoly& p, int chart);

struct FlecnodeResult {
  MultiPoly flec;            ///< eliminant after removing gradient powers
  int chart = 3;
  MultiPoly raw_resultant;   ///< homogeneous resultant of G2 and G3 before removal
  MultiPoly gradient;        ///< the chart gradient component
  unsigned removed_power = 0;  ///< raw_resultant = gradient^removed_power · flec
  int degree = -1;           ///< degree of flec (-1 when flec is zero)
};

/// Eliminates the direction from F1 = F2 = F3 = 0 in one chart. The result
/// vanishes at a surface point where the chart gradient is nonzero exactly
/// when some complex line has third-order contact there.
FlecnodeResult flecnode_polynomial(const MultiPoly& p, int chart);

/// True iff some nonzero complex direction v has F1 = F2 = F3 = 0 at w.
/// Singular points always qualify. The specialised binary forms are tested
/// for a common projective root by their homogeneous resultant, so roots at
/// infinity (both leading coefficients zero) count.
/// Throws std::invalid_argument if p(w) != 0.
bool flecnodal_at(const MultiPoly& p, const Point3& w);

/// Same test through a specific chart; requires ∂p/∂x_chart(w) != 0.
bool flecnodal_at(const MultiPoly& p, const Point3& w, int chart);

enum class Ruledness { RuledCertified, NotRuledCertified, Inconclusive };

std::string to_string(Ruledness r);

struct ChartEvidence {
  int chart = 0;
  bool flec_zero = false;
  bool divisible = false;  ///< flec is zero or p divides flec
  int flec_degree = -1;
  unsigned removed_power = 0;
};

struct RuledVerdict {
  Ruledness verdict = Ruledness::Inconclusive;
  std::string basis;             ///< "line-count", "divisibility", "non-divisibility" or "none"
  std::size_t line_count = 0;    ///< distinct supplied lines on the surface
  long raw_threshold = 0;        ///< 11d² - 24d
  long threshold = 0;            ///< clamped below at 0
  bool declared_irreducible = false;
  std::vector<ChartEvidence> charts;  ///< charts examined, in order
};

/// Ruledness certificate for the surface p = 0. Every supplied line must lie
/// on the surface (std::invalid_argument otherwise). Irreducibility of p is a
/// caller declaration; without it a non-divisible eliminant is Inconclusive.
RuledVerdict ruled_certificate(const MultiPoly& p, std::span<const Line3> lines, bool declared_irreducible);

}  // namespace polyinc
