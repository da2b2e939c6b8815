#include "polyinc/partitioner.hpp"

#include "polyinc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace polyinc {

namespace {

using Coeffs = std::vector<Rat>;  // [constant, lifted monomials...]

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform in [-1, 1) from the top 53 bits; independent of the standard
// library's distribution implementations.
double uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0; }

struct LiftedPoint {
  std::size_t cls;
  std::vector<Rat> exact;      // [1, lift]
  std::vector<double> approx;
};

struct Instance {
  std::vector<LiftedPoint> pts;             // every point of every class
  std::vector<std::vector<std::size_t>> active;  // per active class, indices into pts
  std::size_t width = 0;                    // K + 1
  std::vector<double> scale;                // per-coordinate divisor of the float copies
};

Instance make_instance(std::span<const std::vector<Point3>> classes, unsigned degree) {
  Instance in;
  in.width = lifted_dimension(degree) + 1;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    std::vector<std::size_t> idx;
    for (const auto& w : classes[c]) {
      LiftedPoint lp;
      lp.cls = c;
      lp.exact.push_back(Rat(1));
      for (auto& v : lift(w, degree)) lp.exact.push_back(std::move(v));
      for (const auto& v : lp.exact) lp.approx.push_back(v.get_d());
      idx.push_back(in.pts.size());
      in.pts.push_back(std::move(lp));
    }
    if (idx.size() >= 2) in.active.push_back(std::move(idx));
  }
  // Column scaling keeps the float projections well conditioned.
  in.scale.assign(in.width, 1.0);
  for (const auto& p : in.pts)
    for (std::size_t j = 0; j < in.width; ++j) in.scale[j] = std::max(in.scale[j], std::fabs(p.approx[j]));
  for (auto& p : in.pts)
    for (std::size_t j = 0; j < in.width; ++j) p.approx[j] /= in.scale[j];
  return in;
}

Rat dot_exact(const Coeffs& c, const std::vector<Rat>& u) {
  Rat s(0);
  for (std::size_t j = 0; j < c.size(); ++j)
    if (c[j] != 0 && u[j] != 0) s += c[j] * u[j];
  return s;
}

double dot_approx(const std::vector<double>& c, const std::vector<double>& u) {
  double s = 0;
  for (std::size_t j = 0; j < c.size(); ++j) s += c[j] * u[j];
  return s;
}

bool nonconstant(const Coeffs& c) {
  return std::any_of(c.begin() + 1, c.end(), [](const Rat& v) { return v != 0; });
}

bool predicate(const Instance& in, const std::vector<Rat>& values) {
  for (const auto& cls : in.active) {
    std::size_t pos = 0, neg = 0;
    for (auto i : cls) {
      int s = sgn(values[i]);
      pos += s > 0;
      neg += s < 0;
    }
    const std::size_t half = (cls.size() + 1) / 2;
    if (pos > half || neg > half) return false;
  }
  return true;
}

// Tries c + ε, c - ε and c, where ε is half the smallest nonzero |value|, so
// the shifts move zero values off the zero set without crossing any other.
std::optional<Coeffs> certify(const Instance& in, const Coeffs& c) {
  if (!nonconstant(c)) return std::nullopt;
  std::vector<Rat> values;
  values.reserve(in.pts.size());
  std::optional<Rat> smallest;
  bool any_zero = false;
  for (const auto& p : in.pts) {
    values.push_back(dot_exact(c, p.exact));
    const Rat a = abs(values.back());
    if (a == 0) {
      any_zero = true;
    } else if (!smallest || a < *smallest) {
      smallest = a;
    }
  }
  if (any_zero) {
    const Rat eps = smallest ? *smallest / 2 : Rat(1);
    for (int dir : {1, -1}) {
      std::vector<Rat> shifted = values;
      for (auto& v : shifted) v += dir * eps;
      if (predicate(in, shifted)) {
        Coeffs out = c;
        out[0] += dir * eps;
        return out;
      }
    }
  }
  if (predicate(in, values)) return c;
  return std::nullopt;
}

MultiPoly to_polynomial(const Coeffs& c, unsigned degree) {
  auto monos = monomials_up_to(3, degree);
  MultiPoly p(3);
  for (std::size_t j = 0; j < monos.size(); ++j) p.add_term(monos[j], c[j]);
  return p;
}

long double binomial_ld(std::size_t n, std::size_t k) {
  long double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  return r;
}

std::optional<Coeffs> enumerate(const Instance& in, const BisectOptions& opt) {
  std::vector<std::size_t> pool;
  for (const auto& cls : in.active) pool.insert(pool.end(), cls.begin(), cls.end());
  const std::size_t n = pool.size();
  const std::size_t k = std::min(in.width - 1, n - 1);
  if (n > opt.enumeration_points || binomial_ld(n, k) > static_cast<long double>(opt.enumeration_subsets))
    return std::nullopt;
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    RatMatrix m(0, in.width);
    for (auto i : pick) m.append_row(in.pts[pool[i]].exact);
    if (auto c = nullspace_vector(m))
      if (auto ok = certify(in, *c)) return ok;
    // next k-combination of [0, n)
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

// Min-norm correction c - Aᵀ(AAᵀ)⁻¹Ac making c vanish on the rows of A.
bool project_approx(std::vector<double>& c, const std::vector<const std::vector<double>*>& rows) {
  const std::size_t m = rows.size();
  std::vector<std::vector<double>> g(m, std::vector<double>(m + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g[i][j] = dot_approx(*rows[i], *rows[j]);
    g[i][m] = dot_approx(*rows[i], c);
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::fabs(g[r][col]) > std::fabs(g[piv][col])) piv = r;
    if (std::fabs(g[piv][col]) < 1e-12) return false;
    std::swap(g[piv], g[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      const double f = g[r][col] / g[col][col];
      for (std::size_t j = col; j <= m; ++j) g[r][j] -= f * g[col][j];
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const double y = g[i][m] / g[i][i];
    for (std::size_t j = 0; j < c.size(); ++j) c[j] -= y * (*rows[i])[j];
  }
  return true;
}

Coeffs project_exact(const Coeffs& c, const std::vector<const std::vector<Rat>*>& rows) {
  const std::size_t m = rows.size();
  RatMatrix g(m, m);
  std::vector<Rat> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) g(i, j) = dot_exact(*rows[i], *rows[j]);
    rhs[i] = dot_exact(c, *rows[i]);
  }
  auto y = solve_linear(g, rhs);
  if (!y) return c;
  Coeffs out = c;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] -= (*y)[i] * (*rows[i])[j];
  return out;
}

// Maps scaled float coefficients back to the exact lifted coordinates.
Coeffs rationalize(const std::vector<double>& c, const std::vector<double>& scale) {
  std::vector<double> raw(c.size());
  double big = 0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    raw[j] = c[j] / scale[j];
    big = std::max(big, std::fabs(raw[j]));
  }
  Coeffs out;
  for (double v : raw) out.push_back(big > 0 ? approximate(v / big, 100000000) : Rat(0));
  return out;
}

// Float screen for the bisection predicate; values within a relative 1e-9
// of zero count as zero, since the exact projection will pin them there.
bool approx_predicate(const Instance& in, const std::vector<double>& c) {
  double scale = 0;
  for (double v : c) scale = std::max(scale, std::fabs(v));
  for (const auto& cls : in.active) {
    std::size_t pos = 0, neg = 0;
    for (auto i : cls) {
      const double v = dot_approx(c, in.pts[i].approx);
      double mag = 0;
      for (double u : in.pts[i].approx) mag = std::max(mag, std::fabs(u));
      const double tol = 1e-9 * scale * mag * static_cast<double>(c.size());
      pos += v > tol;
      neg += v < -tol;
    }
    const std::size_t half = (cls.size() + 1) / 2;
    if (pos > half || neg > half) return false;
  }
  return true;
}

// Newton iteration on the piecewise-linear map c -> (median value per class):
// each step projects c onto the polynomials vanishing at the current medians.
std::vector<std::size_t> median_points(const Instance& in, const std::vector<double>& c, double& residual) {
  std::vector<std::size_t> medians;
  double norm = 0, sum = 0;
  for (double v : c) norm += v * v;
  for (const auto& cls : in.active) {
    std::vector<std::pair<double, std::size_t>> vals;
    for (auto i : cls) vals.emplace_back(dot_approx(c, in.pts[i].approx), i);
    std::sort(vals.begin(), vals.end());
    const auto& mid = vals[(cls.size() + 1) / 2 - 1];
    medians.push_back(mid.second);
    sum += mid.first * mid.first;
  }
  residual = norm > 0 ? std::sqrt(sum / norm) : 0;
  return medians;
}

// Damped Newton iteration on the piecewise-linear map c -> (median value per
// class): the full step projects c onto the polynomials vanishing at the
// current medians; halved steps are tried when it does not shrink the
// normalized residual.
std::optional<Coeffs> search(const Instance& in, std::uint64_t seed, unsigned restarts, unsigned iterations) {
  for (unsigned r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(mix(seed ^ mix(r)));
    std::vector<double> c(in.width);
    for (auto& v : c) v = uniform(rng);
    double residual = 0;
    std::vector<std::size_t> medians = median_points(in, c, residual);
    for (unsigned it = 0; it < iterations; ++it) {
      std::vector<const std::vector<double>*> rows;
      for (auto i : medians) rows.push_back(&in.pts[i].approx);
      std::vector<double> full = c;
      if (!project_approx(full, rows)) break;

      std::vector<double> next;
      std::vector<std::size_t> next_medians;
      double next_residual = 0;
      for (double alpha = 1; alpha >= 1.0 / 64; alpha /= 2) {
        next = c;
        for (std::size_t j = 0; j < c.size(); ++j) next[j] += alpha * (full[j] - c[j]);
        next_medians = median_points(in, next, next_residual);
        if (next_residual < residual) break;
      }
      if (next_residual >= residual) {
        next = full;
        next_medians = median_points(in, next, next_residual);
      }
      const bool stalled = next_medians == medians;
      c = std::move(next);
      medians = std::move(next_medians);
      residual = next_residual;
      if (stalled || approx_predicate(in, c)) {
        std::vector<const std::vector<Rat>*> exact_rows;
        for (auto i : medians) exact_rows.push_back(&in.pts[i].exact);
        if (auto ok = certify(in, project_exact(rationalize(c, in.scale), exact_rows))) return ok;
        if (stalled) break;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::size_t lifted_dimension(unsigned degree) {
  const std::size_t d = degree;
  return (d + 1) * (d + 2) * (d + 3) / 6 - 1;
}

std::vector<Rat> lift(const Point3& w, unsigned degree) {
  if (degree == 0) throw std::invalid_argument("lift: degree must be at least 1");
  std::vector<Rat> out;
  for (const auto& m : monomials_up_to(3, degree, 1)) out.push_back(monomial_value(m, w.span()));
  return out;
}

bool bisects(const MultiPoly& g, std::span<const std::vector<Point3>> classes) {
  for (const auto& cls : classes) {
    std::size_t pos = 0, neg = 0;
    for (const auto& w : cls) {
      int s = sgn(poly_eval(g, w.span()));
      pos += s > 0;
      neg += s < 0;
    }
    const std::size_t half = (cls.size() + 1) / 2;
    if (pos > half || neg > half) return false;
  }
  return true;
}

std::optional<Bisector> bisect_classes(std::span<const std::vector<Point3>> classes, unsigned degree,
                                       std::uint64_t seed, const BisectOptions& options,
                                       bool allow_underdetermined) {
  if (degree == 0) throw std::invalid_argument("bisect_classes: degree must be at least 1");
  Instance in = make_instance(classes, degree);
  if (!allow_underdetermined && in.active.size() > in.width - 1)
    throw std::invalid_argument("bisect_classes: " + std::to_string(in.active.size()) +
                                " classes exceed the lifted dimension " + std::to_string(in.width - 1));
  if (in.active.empty()) {
    // Nothing to balance; any non-constant polynomial qualifies.
    return Bisector{MultiPoly::variable(3, 0), BisectMethod::Enumeration};
  }
  if (auto c = enumerate(in, options)) return Bisector{to_polynomial(*c, degree), BisectMethod::Enumeration};
  if (auto c = search(in, seed, options.restarts, options.iterations))
    return Bisector{to_polynomial(*c, degree), BisectMethod::Search};
  return std::nullopt;
}

unsigned scheduled_degree(std::size_t classes) {
  unsigned d = 1;
  while (lifted_dimension(d) < classes) ++d;
  return d;
}

PartitionResult partition(std::span<const Point3> points, std::size_t s, std::uint64_t seed,
                          const BisectOptions& options) {
  if (s < 2 || (s & (s - 1)) != 0) throw std::invalid_argument("partition: s must be a power of two >= 2");
  if (std::set<Point3>(points.begin(), points.end()).size() != points.size())
    throw std::invalid_argument("partition: duplicate points");

  PartitionResult result;
  result.target = s;
  result.points = points.size();
  result.class_bound.push_back(points.size());

  std::map<std::string, std::vector<Point3>> classes;
  if (!points.empty()) classes[""] = std::vector<Point3>(points.begin(), points.end());

  std::size_t rounds = 0;
  for (std::size_t t = s; t > 1; t >>= 1) ++rounds;

  for (std::size_t round = 0; round < rounds; ++round) {
    std::vector<std::vector<Point3>> current;
    for (const auto& [sig, pts] : classes) current.push_back(pts);
    const std::size_t active =
        static_cast<std::size_t>(std::count_if(current.begin(), current.end(), [](const auto& c) { return c.size() >= 2; }));
    if (active == 0) break;  // every class already holds at most one point

    const unsigned scheduled = scheduled_degree(active);
    std::optional<Bisector> found;
    unsigned degree = 1;
    for (; degree <= scheduled + 2 && !found; ++degree) {
      const bool under = lifted_dimension(degree) < active;
      BisectOptions opt = options;
      if (under) opt.restarts = std::max(1u, options.restarts / 4);
      found = bisect_classes(current, degree, mix(seed ^ mix(round * 64 + degree)), opt, under);
    }
    if (!found) {
      result.complete = false;
      result.failure = "round " + std::to_string(round + 1) + ": bisection search budget exhausted for " +
                       std::to_string(active) + " classes up to degree " + std::to_string(scheduled + 2);
      break;
    }
    --degree;

    const MultiPoly& g = found->polynomial;
    std::map<std::string, std::vector<Point3>> next;
    for (const auto& [sig, pts] : classes)
      for (const auto& w : pts) {
        int sv = sgn(poly_eval(g, w.span()));
        if (sv == 0)
          result.boundary.push_back(w);
        else
          next[sig + (sv > 0 ? '+' : '-')].push_back(w);
      }
    classes = std::move(next);
    result.factors.push_back(g);
    result.rounds.push_back({degree, current.size(), active, found->method});
    result.total_degree += degree;
    result.class_bound.push_back((result.class_bound.back() + 1) / 2);
  }

  for (const auto& [sig, pts] : classes)
    for (const auto& w : pts) result.assignment.emplace(w, sig);
  std::sort(result.boundary.begin(), result.boundary.end());
  return result;
}

std::map<std::string, std::size_t> cell_census(const PartitionResult& result) {
  std::map<std::string, std::size_t> census;
  for (const auto& [w, sig] : result.assignment) ++census[sig];
  return census;
}

CrossingReport line_crossings(const Line3& l, const PartitionResult& result) {
  CrossingReport r;
  UniPoly product = UniPoly::constant(Rat(1));
  for (const auto& g : result.factors) {
    UniPoly q = restrict_to_line(g, l);
    if (q.is_zero()) {
      r.contained = true;
      return r;
    }
    product = product * q;
  }
  if (product.degree() <= 0) return r;
  const Rat bound = root_bound(product);
  r.count = sturm_count(product, -bound, bound);
  return r;
}

}  // namespace polyinc
