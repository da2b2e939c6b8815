#include "polyinc/vanishing_fit.hpp"

#include "polyinc/linalg.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace polyinc {

namespace {

MultiPoly from_coefficients(const std::vector<Monomial>& monos, const std::vector<Rat>& coeffs) {
  MultiPoly p(3);
  for (std::size_t i = 0; i < monos.size(); ++i) p.add_term(monos[i], coeffs[i]);
  return p;
}

std::optional<MultiPoly> fit_on_sorted_points(const std::vector<Point3>& pts, unsigned degree) {
  auto monos = monomials_up_to(3, degree);
  RatMatrix m(0, monos.size());
  std::vector<Rat> row(monos.size());
  for (const auto& w : pts) {
    for (std::size_t j = 0; j < monos.size(); ++j) row[j] = monomial_value(monos[j], w.span());
    m.append_row(row);
  }
  auto v = nullspace_vector(m);
  if (!v) return std::nullopt;
  return from_coefficients(monos, *v);
}

std::vector<Point3> canonical_points(std::span<const Point3> points) {
  std::set<Point3> unique(points.begin(), points.end());
  return {unique.begin(), unique.end()};
}

// splitmix64 step; decorrelates per-attempt seeds.
std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::size_t monomial_count(unsigned degree) {
  std::size_t d = degree;
  return (d + 1) * (d + 2) * (d + 3) / 6;
}

std::optional<MultiPoly> fit_on_points(std::span<const Point3> points, unsigned degree) {
  return fit_on_sorted_points(canonical_points(points), degree);
}

MinDegreeFit min_vanishing_degree(std::span<const Point3> points) {
  if (points.empty()) throw std::invalid_argument("min_vanishing_degree: empty point set");
  auto pts = canonical_points(points);
  for (unsigned d = 1;; ++d) {
    if (auto p = fit_on_sorted_points(pts, d)) return {d, std::move(*p)};
  }
}

std::optional<MultiPoly> fit_on_lines(std::span<const Line3> lines, unsigned degree) {
  std::set<Line3> unique(lines.begin(), lines.end());
  auto monos = monomials_up_to(3, degree);
  RatMatrix m(0, monos.size());
  std::vector<Rat> row(monos.size());
  for (const auto& l : unique) {
    for (unsigned t = 0; t <= degree; ++t) {
      Point3 w = l.at(Rat(t));
      for (std::size_t j = 0; j < monos.size(); ++j) row[j] = monomial_value(monos[j], w.span());
      m.append_row(row);
    }
  }
  auto v = nullspace_vector(m);
  if (!v) return std::nullopt;
  return from_coefficients(monos, *v);
}

DegreeReduceResult degree_reduce(std::span<const Line3> sample_from, std::span<const Line3> targets,
                                 const DegreeReduceParams& params) {
  if (params.probability <= 0 || params.probability > 1)
    throw std::invalid_argument("degree_reduce: probability must lie in (0, 1]");
  // Keep a line when a uniform draw from [0, den) falls below num.
  const Int num = params.probability.get_num();
  const Int den = params.probability.get_den();
  DegreeReduceResult result;
  for (unsigned attempt = 0; attempt < params.retries; ++attempt) {
    ++result.attempts;
    std::mt19937_64 rng(mix_seed(params.seed ^ mix_seed(attempt)));
    std::vector<Line3> kept;
    for (const auto& l : sample_from) {
      Int draw(static_cast<unsigned long>(rng() >> 1));
      if (draw % den < num) kept.push_back(l);
    }
    result.sampled = kept.size();
    if (kept.empty()) continue;
    auto p = fit_on_lines(kept, params.degree_cap);
    if (!p) continue;
    bool all_on = std::all_of(targets.begin(), targets.end(), [&](const Line3& l) { return line_on_surface(l, *p); });
    if (all_on) {
      result.polynomial = std::move(p);
      return result;
    }
  }
  return result;
}

}  // namespace polyinc
