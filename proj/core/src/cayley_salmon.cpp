#include "polyinc/cayley_salmon.hpp"

#include "polyinc/resultant.hpp"

#include <set>
#include <stdexcept>

namespace polyinc {

namespace {

void require_surface(const MultiPoly& p) {
  if (p.arity() != 3) throw std::invalid_argument("expected a polynomial in x, y, z");
  if (p.degree() < 1) throw std::invalid_argument("expected a polynomial of degree >= 1");
}

std::size_t chart_index(int chart) {
  if (chart < 1 || chart > 3) throw std::invalid_argument("chart must be 1, 2 or 3");
  return static_cast<std::size_t>(chart - 1);
}

// Directional derivative sum_i ∂f/∂x_i · v_i in the 6-variable ring.
MultiPoly along_direction(const MultiPoly& f) {
  MultiPoly out(kFormArity);
  for (std::size_t i = 0; i < 3; ++i) out += poly_partial(f, i) * MultiPoly::variable(kFormArity, 3 + i);
  return out;
}

long binomial(unsigned n, unsigned k) {
  long r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
  return r;
}

// Binary form of degree k obtained by substituting v_c and clearing g^k.
std::vector<MultiPoly> substitute_direction(const MultiPoly& form, unsigned k, std::size_t a, std::size_t b,
                                            std::size_t c, const std::vector<MultiPoly>& grad) {
  std::vector<MultiPoly> ga_pow{MultiPoly::constant(3, Rat(1))}, gb_pow{ga_pow[0]}, gc_pow{ga_pow[0]};
  for (unsigned i = 1; i <= k; ++i) {
    ga_pow.push_back(ga_pow.back() * grad[a]);
    gb_pow.push_back(gb_pow.back() * grad[b]);
    gc_pow.push_back(gc_pow.back() * grad[c]);
  }
  std::vector<MultiPoly> out(k + 1, MultiPoly(3));
  for (const auto& [m, coeff] : form.terms()) {
    Monomial xpart;
    for (std::size_t i = 0; i < 3; ++i) xpart.exp[i] = m.exp[i];
    const unsigned eb = m.exp[3 + b], ec = m.exp[3 + c];
    MultiPoly base = MultiPoly::monomial(3, xpart, coeff) * gc_pow[k - ec];
    if (ec % 2 == 1) base = -base;
    for (unsigned j = 0; j <= ec; ++j) {
      MultiPoly piece = base * ga_pow[ec - j] * gb_pow[j];
      out[eb + j] += Rat(binomial(ec, j)) * piece;
    }
  }
  return out;
}

bool all_zero(const std::vector<MultiPoly>& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

std::vector<MultiPoly> evaluate_coefficients(const std::vector<MultiPoly>& coeffs, const Point3& w) {
  std::vector<MultiPoly> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(MultiPoly::constant(0, poly_eval(c, w.span())));
  return out;
}

}  // namespace

DirectionalForms directional_forms(const MultiPoly& p) {
  require_surface(p);
  MultiPoly lifted = p.with_arity(kFormArity);
  DirectionalForms forms;
  forms.f1 = along_direction(lifted);
  forms.f2 = along_direction(forms.f1);
  forms.f3 = along_direction(forms.f2);
  return forms;
}

ChartForms chart_forms(const MultiPoly& p, int chart) {
  require_surface(p);
  const std::size_t c = chart_index(chart);
  const std::size_t a = c == 0 ? 1 : 0;
  const std::size_t b = c == 2 ? 1 : 2;
  std::vector<MultiPoly> grad;
  for (std::size_t i = 0; i < 3; ++i) grad.push_back(poly_partial(p, i));
  if (grad[c].is_zero())
    throw std::invalid_argument("chart " + std::to_string(chart) + ": gradient component is identically zero");
  DirectionalForms forms = directional_forms(p);
  ChartForms out;
  out.chart = chart;
  out.gradient = grad[c];
  out.g2 = substitute_direction(forms.f2, 2, a, b, c, grad);
  out.g3 = substitute_direction(forms.f3, 3, a, b, c, grad);
  return out;
}

FlecnodeResult flecnode_polynomial(const MultiPoly& p, int chart) {
  ChartForms cf = chart_forms(p, chart);
  FlecnodeResult r;
  r.chart = chart;
  r.gradient = cf.gradient;
  if (all_zero(cf.g2) || all_zero(cf.g3)) {
    // A vanishing form makes every Sylvester row of it zero.
    r.raw_resultant = MultiPoly(3);
    r.flec = MultiPoly(3);
    return r;
  }
  r.raw_resultant = sylvester_resultant(cf.g2, cf.g3);
  r.flec = r.raw_resultant;
  if (!r.flec.is_zero() && !cf.gradient.is_constant()) {
    while (auto q = exact_quotient(r.flec, cf.gradient)) {
      r.flec = std::move(*q);
      ++r.removed_power;
    }
  }
  r.degree = r.flec.degree();
  return r;
}

bool flecnodal_at(const MultiPoly& p, const Point3& w, int chart) {
  require_surface(p);
  if (poly_eval(p, w.span()) != 0) throw std::invalid_argument("flecnodal_at: point is not on the surface");
  const std::size_t c = chart_index(chart);
  if (poly_eval(poly_partial(p, c), w.span()) == 0)
    throw std::invalid_argument("flecnodal_at: chart gradient vanishes at the point");
  ChartForms cf = chart_forms(p, chart);
  auto g2 = evaluate_coefficients(cf.g2, w);
  auto g3 = evaluate_coefficients(cf.g3, w);
  // A zero binary form shares every root of the other; a nonzero binary form
  // of positive degree always has a projective root.
  if (all_zero(g2) || all_zero(g3)) return true;
  return sylvester_resultant(g2, g3).is_zero();
}

bool flecnodal_at(const MultiPoly& p, const Point3& w) {
  require_surface(p);
  if (poly_eval(p, w.span()) != 0) throw std::invalid_argument("flecnodal_at: point is not on the surface");
  for (int chart = 1; chart <= 3; ++chart) {
    if (poly_eval(poly_partial(p, static_cast<std::size_t>(chart - 1)), w.span()) != 0)
      return flecnodal_at(p, w, chart);
  }
  // Singular point: F1 vanishes identically and two plane curves of positive
  // degree always meet in the complex projective plane.
  return true;
}

std::string to_string(Ruledness r) {
  switch (r) {
    case Ruledness::RuledCertified: return "RuledCertified";
    case Ruledness::NotRuledCertified: return "NotRuledCertified";
    case Ruledness::Inconclusive: return "Inconclusive";
  }
  return "Inconclusive";
}

RuledVerdict ruled_certificate(const MultiPoly& p, std::span<const Line3> lines, bool declared_irreducible) {
  require_surface(p);
  std::set<Line3> distinct;
  for (const auto& l : lines) {
    if (!line_on_surface(l, p)) throw std::invalid_argument("ruled_certificate: line " + l.to_string() + " is not on the surface");
    distinct.insert(l);
  }
  RuledVerdict v;
  v.declared_irreducible = declared_irreducible;
  v.line_count = distinct.size();
  const long d = p.degree();
  v.raw_threshold = 11 * d * d - 24 * d;
  v.threshold = std::max(0L, v.raw_threshold);
  if (static_cast<long>(v.line_count) > v.threshold) {
    v.verdict = Ruledness::RuledCertified;
    v.basis = "line-count";
    return v;
  }

  bool all_divisible = true;
  for (int chart = 1; chart <= 3; ++chart) {
    if (poly_partial(p, static_cast<std::size_t>(chart - 1)).is_zero()) continue;
    FlecnodeResult f = flecnode_polynomial(p, chart);
    ChartEvidence e;
    e.chart = chart;
    e.flec_zero = f.flec.is_zero();
    e.divisible = e.flec_zero || divides(p, f.flec);
    e.flec_degree = f.degree;
    e.removed_power = f.removed_power;
    v.charts.push_back(e);
    if (!e.divisible) {
      all_divisible = false;
      break;  // the divisibility branch can no longer certify ruledness
    }
  }
  if (all_divisible) {
    v.verdict = Ruledness::RuledCertified;
    v.basis = "divisibility";
  } else if (declared_irreducible) {
    v.verdict = Ruledness::NotRuledCertified;
    v.basis = "non-divisibility";
  } else {
    v.verdict = Ruledness::Inconclusive;
    v.basis = "none";
  }
  return v;
}

}  // namespace polyinc
