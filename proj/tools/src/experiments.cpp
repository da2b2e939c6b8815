#include "polyinc/cli/experiments.hpp"

#include "polyinc/cayley_salmon.hpp"
#include "polyinc/census.hpp"
#include "polyinc/cli/poly_parser.hpp"
#include "polyinc/motion_space.hpp"
#include "polyinc/partitioner.hpp"
#include "polyinc/vanishing_fit.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace polyinc::cli {

namespace {

using Runner = std::function<void(const Json&, Report&)>;

// --- parameter access -------------------------------------------------------

std::uint64_t get_uint(const Json& p, const char* key, std::uint64_t fallback, std::uint64_t cap,
                       std::uint64_t min = 0) {
  if (!p.contains(key)) return fallback;
  const Json& v = p.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw std::invalid_argument(std::string(key) + " must be a nonnegative integer");
  const auto x = v.get<std::uint64_t>();
  if (x > cap)
    throw std::invalid_argument(std::string(key) + " = " + std::to_string(x) + " exceeds the cap of " +
                                std::to_string(cap));
  if (x < min) throw std::invalid_argument(std::string(key) + " must be at least " + std::to_string(min));
  return x;
}

bool get_bool(const Json& p, const char* key, bool fallback) {
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_boolean()) throw std::invalid_argument(std::string(key) + " must be true or false");
  return p.at(key).get<bool>();
}

std::string get_string(const Json& p, const char* key, const std::string& fallback) {
  if (!p.contains(key)) return fallback;
  if (!p.at(key).is_string()) throw std::invalid_argument(std::string(key) + " must be a string");
  return p.at(key).get<std::string>();
}

std::vector<std::uint64_t> get_sizes(const Json& p, std::uint64_t fallback, std::uint64_t cap) {
  if (!p.contains("sizes")) return {get_uint(p, "size", fallback, cap, 1)};
  std::vector<std::uint64_t> out;
  for (const auto& v : p.at("sizes")) {
    Json one{{"size", v}};
    out.push_back(get_uint(one, "size", fallback, cap, 1));
  }
  if (out.empty()) throw std::invalid_argument("sizes must not be empty");
  return out;
}

MultiPoly get_poly(const Json& p) {
  if (!p.contains("poly")) throw std::invalid_argument("missing polynomial (poly)");
  MultiPoly f = parse_poly(get_string(p, "poly", ""));
  if (f.degree() < 1) throw std::invalid_argument("polynomial must have degree >= 1");
  if (f.degree() > 4) throw std::invalid_argument("polynomial degree " + std::to_string(f.degree()) + " exceeds the cap of 4");
  return f;
}

void require_count(std::size_t n, std::size_t cap, const std::string& what) {
  if (n > cap)
    throw std::invalid_argument(std::to_string(n) + " " + what + " exceeds the cap of " + std::to_string(cap));
}

// --- shared helpers ---------------------------------------------------------

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<Point3> random_points3(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<Point3> seen;
  std::vector<Point3> out;
  while (out.size() < n) {
    Point3 p(rat(draw(rng, -20, 20), draw(rng, 1, 3)), rat(draw(rng, -20, 20), draw(rng, 1, 3)),
             rat(draw(rng, -20, 20), draw(rng, 1, 3)));
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

std::vector<Line3> random_test_lines(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Line3> out;
  while (out.size() < n) {
    Vec3 d(Rat(draw(rng, -3, 3)), Rat(draw(rng, -3, 3)), Rat(draw(rng, -3, 3)));
    Point3 b(Rat(draw(rng, -10, 10)), Rat(draw(rng, -10, 10)), Rat(draw(rng, -10, 10)));
    if (!d.is_zero()) out.emplace_back(b, d);
  }
  return out;
}

Configuration config_from(const Json& p, const std::string& fallback_kind, std::uint64_t size, std::uint64_t seed) {
  return make_configuration(parse_config_kind(get_string(p, "config", fallback_kind)), size, seed);
}

std::vector<Line3> distinct_lines(const std::vector<Line3>& lines) {
  std::set<Line3> seen;
  std::vector<Line3> out;
  for (const auto& l : lines)
    if (seen.insert(l).second) out.push_back(l);
  return out;
}

bool exact_le_pow32(std::uint64_t count, std::uint64_t n) {
  // count <= n^{3/2}  <=>  count² <= n³
  const Int c(static_cast<unsigned long>(count)), m(static_cast<unsigned long>(n));
  return c * c <= m * m * m;
}

double ceil_div(std::size_t a, std::size_t b) { return static_cast<double>((a + b - 1) / b); }

// --- experiments ------------------------------------------------------------

void run_fit(const Json& p, Report& r) {
  std::vector<Point3> pts;
  if (p.contains("points")) {
    pts = read_points(p);
  } else {
    auto cfg = config_from(p, "grid_joints", get_uint(p, "size", 2, 100, 1), r.seed);
    pts = cfg.points;
    if (pts.empty()) throw std::invalid_argument("configuration " + to_string(cfg.kind) + " has no 3-d points");
  }
  const std::size_t n = std::set<Point3>(pts.begin(), pts.end()).size();
  require_count(n, 200, "distinct points");
  r.measured["points"] = n;

  std::optional<MultiPoly> witness;
  unsigned degree = 0;
  if (p.contains("degree")) {
    degree = static_cast<unsigned>(get_uint(p, "degree", 0, 10));
    witness = fit_on_points(pts, degree);
  } else {
    if (pts.empty()) throw std::invalid_argument("no points to fit");
    auto md = min_vanishing_degree(pts);
    degree = md.degree;
    witness = md.witness;
    r.measured["min_degree"] = degree;
    const std::size_t below = monomial_count(degree - 1);
    r.add_check("minimal degree consistent with counting", n >= below,
                std::to_string(n) + " points >= " + std::to_string(below) + " monomials of degree <= " +
                    std::to_string(degree - 1));
  }
  const std::size_t monos = monomial_count(degree);
  r.measured["degree"] = degree;
  r.measured["monomials"] = monos;
  r.measured["found"] = witness.has_value();
  if (witness) r.measured["polynomial"] = witness->to_string();
  r.add_bound("points below monomial count force a witness", "(D+1)(D+2)(D+3)/6", monos, n, n < monos);
  if (n < monos) r.add_check("underdetermined system yields a witness", witness.has_value());
  if (witness) {
    bool vanishes = std::all_of(pts.begin(), pts.end(), [&](const Point3& w) { return poly_eval(*witness, w.span()) == 0; });
    r.add_check("witness vanishes at every point", vanishes);
    r.add_check("witness is nonzero", !witness->is_zero());
  }
}

void run_flecnode(const Json& p, Report& r) {
  const MultiPoly f = get_poly(p);
  const bool irreducible = get_bool(p, "irreducible", true);
  std::vector<Line3> lines = p.contains("lines") ? distinct_lines(read_lines(p)) : std::vector<Line3>{};
  require_count(lines.size(), 200, "lines");
  const long d = f.degree();
  r.measured["polynomial"] = f.to_string();
  r.measured["degree"] = d;

  Json charts = Json::array();
  int max_flec = -1;
  long max_raw = -1;
  for (int chart = 1; chart <= 3; ++chart) {
    if (poly_partial(f, static_cast<std::size_t>(chart - 1)).is_zero()) continue;
    FlecnodeResult fr = flecnode_polynomial(f, chart);
    charts.push_back(Json{{"chart", chart},
                          {"flec_degree", fr.degree},
                          {"raw_degree", fr.raw_resultant.degree()},
                          {"removed_power", fr.removed_power},
                          {"flec_zero", fr.flec.is_zero()}});
    max_flec = std::max(max_flec, fr.degree);
    max_raw = std::max<long>(max_raw, fr.raw_resultant.degree());
    if (!lines.empty()) {
      bool on_all = std::all_of(lines.begin(), lines.end(), [&](const Line3& l) {
        return fr.flec.is_zero() || restrict_to_line(fr.flec, l).is_zero();
      });
      r.add_check("eliminant vanishes on every supplied line (chart " + std::to_string(chart) + ")", on_all);
    }
  }
  r.measured["charts"] = charts;
  const long raw_bound = 17 * d - 24;
  r.add_bound("homogeneous resultant degree", "17d-24", raw_bound, max_raw, max_raw <= raw_bound);
  r.add_check("resultant degree within 17d-24", max_raw <= std::max(raw_bound, -1L));
  r.add_bound("reduced flecnode degree", "11d-24", 11 * d - 24, max_flec, max_flec <= 11 * d - 24);

  RuledVerdict v = ruled_certificate(f, lines, irreducible);
  r.measured["verdict"] = to_string(v.verdict);
  r.measured["basis"] = v.basis;
  r.measured["declared_irreducible"] = irreducible;
  if (p.contains("expect"))
    r.add_check("verdict matches expectation", to_string(v.verdict) == get_string(p, "expect", ""));
}

void run_ruled_cert(const Json& p, Report& r) {
  const MultiPoly f = get_poly(p);
  const bool irreducible = get_bool(p, "irreducible", false);
  std::vector<Line3> lines = p.contains("lines") ? read_lines(p) : std::vector<Line3>{};
  require_count(lines.size(), 2000, "lines");
  const bool all_on = std::all_of(lines.begin(), lines.end(), [&](const Line3& l) { return line_on_surface(l, f); });
  r.add_check("supplied lines lie on the surface", all_on);
  if (!all_on) return;
  RuledVerdict v = ruled_certificate(f, lines, irreducible);
  r.measured["polynomial"] = f.to_string();
  r.measured["verdict"] = to_string(v.verdict);
  r.measured["basis"] = v.basis;
  r.measured["line_count"] = v.line_count;
  r.measured["declared_irreducible"] = irreducible;
  Json charts = Json::array();
  for (const auto& e : v.charts)
    charts.push_back(Json{{"chart", e.chart},
                          {"flec_zero", e.flec_zero},
                          {"divisible", e.divisible},
                          {"flec_degree", e.flec_degree},
                          {"removed_power", e.removed_power}});
  r.measured["charts"] = charts;
  r.add_bound("lines certifying ruledness", "11d^2-24d", v.raw_threshold, v.line_count,
              static_cast<long>(v.line_count) <= v.threshold);
  if (p.contains("expect"))
    r.add_check("verdict matches expectation", to_string(v.verdict) == get_string(p, "expect", ""));
}

void run_joints(const Json& p, Report& r) {
  Table t{{"size", "lines", "joints", "lines^1.5", "ratio"}, {}, "size", "ratio"};
  auto one = [&](const std::vector<Line3>& lines, std::uint64_t size, bool grid) {
    JointsReport j = count_joints(lines);
    const double bound = std::pow(static_cast<double>(lines.size()), 1.5);
    bool witnesses = std::all_of(j.joints.begin(), j.joints.end(), [&](const Joint& x) {
      return is_joint(lines[x.witness[0]], lines[x.witness[1]], lines[x.witness[2]], x.point);
    });
    const std::string tag = " (size " + std::to_string(size) + ")";
    r.add_check("every joint has an independent witness triple" + tag, witnesses);
    r.add_bound("joints" + tag, "N^{3/2}", bound, j.count(), exact_le_pow32(j.count(), lines.size()));
    r.add_check("joints <= N^{3/2}" + tag, exact_le_pow32(j.count(), lines.size()));
    if (grid) r.add_check("grid yields k^3 joints" + tag, j.count() == size * size * size);
    t.rows.push_back({size, lines.size(), j.count(), bound, j.ratio});
    return j;
  };
  if (p.contains("lines")) {
    auto lines = distinct_lines(read_lines(p));
    require_count(lines.size(), 400, "lines");
    auto j = one(lines, lines.size(), false);
    r.measured = Json{{"lines", lines.size()}, {"joints", j.count()}, {"ratio", j.ratio}};
    return;
  }
  const std::string kind = get_string(p, "config", "grid_joints");
  const auto sizes = get_sizes(p, 3, 10);
  for (auto k : sizes) {
    auto cfg = config_from(p, "grid_joints", k, r.seed);
    if (cfg.lines.empty()) throw std::invalid_argument("configuration " + kind + " has no lines");
    require_count(cfg.lines.size(), 400, "lines");
    auto j = one(cfg.lines, k, cfg.kind == ConfigKind::GridJoints);
    r.measured = Json{{"config", kind}, {"size", k}, {"lines", cfg.lines.size()}, {"joints", j.count()}, {"ratio", j.ratio}};
  }
  if (sizes.size() > 1) {
    r.measured = Json{{"config", kind}, {"sizes", sizes.size()}};
    r.table = std::move(t);
  }
}

void run_gk4(const Json& p, Report& r) {
  Table t{{"size", "lines", "N", "points", "ratio"}, {}, "size", "ratio"};
  auto one = [&](const std::vector<Line3>& lines, std::uint64_t size) {
    require_count(lines.size(), 300, "lines");
    IntersectionCensus c = intersection_census(lines);
    std::size_t brute = 0;
    for (std::size_t i = 0; i < lines.size(); ++i)
      for (std::size_t j = i + 1; j < lines.size(); ++j) brute += line_intersection(lines[i], lines[j]).has_value();
    const std::string tag = " (size " + std::to_string(size) + ")";
    r.add_check("census identity sum C(mult,2) = intersecting pairs" + tag, c.pair_count() == brute,
                std::to_string(c.pair_count()) + " vs " + std::to_string(brute));
    const double n = std::sqrt(static_cast<double>(lines.size()));
    const double ratio = n > 0 ? static_cast<double>(c.multiplicity.size()) / (n * n * n) : 0.0;
    Json hist = Json::object();
    std::map<std::size_t, std::size_t> h;
    for (const auto& [w, m] : c.multiplicity) ++h[m];
    for (const auto& [m, k] : h) hist[std::to_string(m)] = k;
    ConcentrationReport conc = concentration(lines);
    Json m{{"lines", lines.size()},
           {"N", n},
           {"points", c.multiplicity.size()},
           {"intersecting_pairs", brute},
           {"multiplicity_histogram", hist},
           {"ratio_points_over_N3", ratio},
           {"max_coplanar", conc.max_coplanar},
           {"max_coquadric", conc.max_coquadric},
           {"quadric_strategy", conc.quadric_strategy},
           {"hypothesis_plane_at_most_N", static_cast<double>(conc.max_coplanar) <= n},
           {"hypothesis_quadric_at_most_N", static_cast<double>(conc.max_coquadric) <= n}};
    if (conc.plane_witness) m["plane_witness"] = conc.plane_witness->to_string();
    if (conc.quadric_witness) m["quadric_witness"] = conc.quadric_witness->to_string();
    const std::size_t all_pairs = lines.size() * (lines.size() - (lines.empty() ? 0 : 1)) / 2;
    r.add_bound("intersection points" + tag, "C(N^2, 2)", all_pairs, c.multiplicity.size(),
                c.multiplicity.size() <= all_pairs);
    t.rows.push_back({size, lines.size(), n, c.multiplicity.size(), ratio});
    return m;
  };
  if (p.contains("lines")) {
    auto lines = distinct_lines(read_lines(p));
    r.measured = one(lines, lines.size());
    return;
  }
  const auto sizes = get_sizes(p, 3, 200);
  for (auto k : sizes) r.measured = one(config_from(p, "grid_joints", k, r.seed).lines, k);
  if (sizes.size() > 1) r.table = std::move(t);
}

void run_szt(const Json& p, Report& r) {
  Table t{{"size", "points", "lines", "incidences", "bound", "ratio"}, {}, "size", "ratio"};
  const auto sizes = get_sizes(p, 4, 30);
  for (auto k : sizes) {
    auto cfg = config_from(p, "planar_grid", k, r.seed);
    if (cfg.planar_points.empty()) throw std::invalid_argument("configuration has no planar points");
    require_count(cfg.planar_points.size(), 2000, "points");
    IncidenceReport ir = planar_incidences(cfg.planar_points, cfg.planar_lines);
    const std::string tag = " (size " + std::to_string(k) + ")";
    r.add_bound("incidences" + tag, "3*(n^{2/3} m^{2/3} + n + m)", 3 * ir.bound, ir.incidences,
                static_cast<double>(ir.incidences) <= 3 * ir.bound);
    r.add_check("incidences <= 3*(n^{2/3} m^{2/3} + n + m)" + tag, static_cast<double>(ir.incidences) <= 3 * ir.bound);
    r.measured = Json{{"config", to_string(cfg.kind)}, {"size", k},          {"points", ir.points},
                      {"lines", ir.lines},             {"incidences", ir.incidences}, {"bound", ir.bound},
                      {"ratio", ir.ratio}};
    t.rows.push_back({k, ir.points, ir.lines, ir.incidences, ir.bound, ir.ratio});
  }
  if (sizes.size() > 1) r.table = std::move(t);
}

std::vector<PlanarPoint> planar_input(const Json& p, std::uint64_t seed, std::uint64_t default_grid) {
  if (p.contains("points")) return read_planar_points(p);
  if (p.contains("random")) return random_planar_points(get_uint(p, "random", 0, kQuadrupleCap, 1), seed);
  const auto k = get_uint(p, "grid", default_grid, 6, 1);
  std::vector<PlanarPoint> out;
  for (std::uint64_t i = 0; i < k; ++i)
    for (std::uint64_t j = 0; j < k; ++j) out.push_back({Rat(static_cast<long>(i)), Rat(static_cast<long>(j))});
  return out;
}

void run_motion_lines(const Json& p, Report& r) {
  auto pts = p.contains("points") ? read_planar_points(p)
                                  : random_planar_points(get_uint(p, "random", 4, kQuadrupleCap, 1), r.seed);
  require_count(pts.size(), kQuadrupleCap, "points");
  std::mt19937_64 rng(mix(r.seed));
  std::vector<Rat> zs;
  for (int i = 0; i < 20; ++i) zs.push_back(rat(draw(rng, -9, 9), draw(rng, 1, 5)));

  Json out = Json::array();
  std::set<Line3> seen;
  bool recovered = true, maps = true;
  for (const auto& a : pts)
    for (const auto& b : pts) {
      MotionLine ml = motion_line(a, b);
      seen.insert(ml.line);
      auto [ra, rb] = recover_pair(ml.line);
      recovered = recovered && ra == a && rb == b;
      for (const auto& z : zs) {
        Point3 g = ml.line.at((z - ml.line.base()[2]) / ml.line.dir()[2]);
        maps = maps && apply_motion(g[0], g[1], g[2], a) == b;
      }
      if (pts.size() <= 12)
        out.push_back(Json{{"a", planar_point_to_json(a)}, {"b", planar_point_to_json(b)}, {"line", line_to_json(ml.line)}});
    }
  r.measured["points"] = pts.size();
  r.measured["motion_lines"] = seen.size();
  if (pts.size() <= 12) r.measured["lines"] = out;
  r.add_check("pair recovered from every motion line", recovered);
  r.add_check("every motion on the line maps a to b (20 z values)", maps);
  r.add_check("distinct ordered pairs give distinct lines", seen.size() == pts.size() * pts.size());
}

void run_distances(const Json& p, Report& r) {
  Table t{{"size", "points", "distances", "N/log N", "ratio"}, {}, "size", "ratio"};
  auto one = [&](const std::vector<PlanarPoint>& pts, std::uint64_t size) {
    require_count(pts.size(), kQuadrupleCap, "points");
    const bool dictionary = pts.size() <= 20;
    QuadrupleReport q = dictionary ? quadruple_incidence_check(pts) : quadruple_count(pts);
    const double n = static_cast<double>(pts.size());
    const double nlog = pts.size() > 1 ? n / std::log(n) : 0.0;
    const std::string tag = " (size " + std::to_string(size) + ")";
    r.add_bound("distance quadruples" + tag, "(N^2-N)^2/|D|", polyinc::to_string(q.cs_bound), q.total, q.cs_holds);
    r.add_check("|Q| >= (N^2-N)^2/|D|" + tag, q.cs_holds);
    if (dictionary) r.add_check("rotational + translational = |Q|" + tag, q.consistent);
    t.rows.push_back({size, pts.size(), q.distance_count, nlog,
                      nlog > 0 ? static_cast<double>(q.distance_count) / nlog : 0.0});
    Json m{{"points", pts.size()},
           {"distances", q.distance_count},
           {"N_over_log_N", nlog},
           {"quadruples", q.total},
           {"cs_bound", polyinc::to_string(q.cs_bound)},
           {"dictionary_checked", dictionary}};
    if (dictionary) {
      m["rotational"] = q.rotational;
      m["translational"] = q.translational;
    }
    return m;
  };
  if (p.contains("sizes")) {
    const auto sizes = get_sizes(p, 4, 6);
    for (auto k : sizes) r.measured = one(planar_input(Json{{"grid", k}}, r.seed, k), k);
    if (sizes.size() > 1) r.table = std::move(t);
    return;
  }
  auto pts = planar_input(p, r.seed, 4);
  r.measured = one(pts, pts.size());
}

void run_degree_reduce(const Json& p, Report& r) {
  std::vector<Line3> l1, l2;
  if (p.contains("l1") || p.contains("l2")) {
    if (!p.contains("l1") || !p.contains("l2")) throw std::invalid_argument("l1 and l2 must be given together");
    l1 = read_lines(Json{{"lines", p.at("l1")}});
    l2 = read_lines(Json{{"lines", p.at("l2")}});
  } else {
    const auto n1 = get_uint(p, "ruling1", 60, 200, 1), n2 = get_uint(p, "ruling2", 40, 200, 1);
    for (std::uint64_t t = 0; t < n1; ++t) l1.push_back(hyperboloid_ruling(Rat(static_cast<long>(t)), 1));
    for (std::uint64_t t = 0; t < n2; ++t) l2.push_back(hyperboloid_ruling(Rat(static_cast<long>(t)), -1));
  }
  require_count(l1.size() + l2.size(), 1000, "lines");
  DegreeReduceParams dp;
  dp.probability = parse_rat(get_string(p, "probability", "1/4"));
  dp.seed = r.seed;
  dp.degree_cap = static_cast<unsigned>(get_uint(p, "degree", 2, 6, 1));
  dp.retries = static_cast<unsigned>(get_uint(p, "retries", 5, 100, 1));
  DegreeReduceResult res = degree_reduce(l1, l2, dp);
  r.measured = Json{{"l1", l1.size()},
                    {"l2", l2.size()},
                    {"probability", polyinc::to_string(dp.probability)},
                    {"degree_cap", dp.degree_cap},
                    {"attempts", res.attempts},
                    {"sampled", res.sampled},
                    {"found", res.polynomial.has_value()}};
  r.add_check("certified polynomial found within the retry budget", res.polynomial.has_value());
  if (res.polynomial) {
    r.measured["polynomial"] = res.polynomial->to_string();
    r.measured["degree"] = res.polynomial->degree();
    r.add_check("polynomial vanishes on every line of L2",
                std::all_of(l2.begin(), l2.end(), [&](const Line3& l) { return line_on_surface(l, *res.polynomial); }));
    r.add_bound("degree", "cap", dp.degree_cap, res.polynomial->degree(),
                res.polynomial->degree() <= static_cast<int>(dp.degree_cap));
  }
}

// Replays the factors on the input and checks the bisection predicate round by round.
bool replay_bisections(std::span<const Point3> points, const PartitionResult& res) {
  std::vector<std::vector<Point3>> classes{std::vector<Point3>(points.begin(), points.end())};
  for (const auto& g : res.factors) {
    if (!bisects(g, classes)) return false;
    std::vector<std::vector<Point3>> next;
    for (const auto& cls : classes) {
      std::vector<Point3> pos, neg;
      for (const auto& w : cls) {
        int s = sgn(poly_eval(g, w.span()));
        if (s > 0) pos.push_back(w);
        if (s < 0) neg.push_back(w);
      }
      if (!pos.empty()) next.push_back(std::move(pos));
      if (!neg.empty()) next.push_back(std::move(neg));
    }
    classes = std::move(next);
  }
  return true;
}

struct PartitionChecks {
  std::size_t max_class = 0;
  std::size_t max_crossings = 0;
  std::size_t contained = 0;
};

PartitionChecks check_partition(std::span<const Point3> points, const PartitionResult& res,
                                std::span<const Line3> test_lines, Report& r) {
  PartitionChecks out;
  auto census = cell_census(res);
  std::size_t total = 0;
  for (const auto& [sig, n] : census) {
    out.max_class = std::max(out.max_class, n);
    total += n;
  }
  const std::size_t s = res.target;
  const double degree_bound = 8 * std::cbrt(static_cast<double>(s)) + 4;
  const std::size_t class_bound = res.class_bound.back();
  std::size_t rounds = 0;
  for (std::size_t t = s; t > 1; t >>= 1) ++rounds;

  r.add_check("partition completed", res.complete, res.failure);
  r.add_check("nonempty sign classes <= s", census.size() <= s);
  r.add_bound("points per class", "compounded ceiling of M/2 per round", class_bound, out.max_class,
              out.max_class <= class_bound);
  r.add_check("class sizes within compounded-ceiling bound", out.max_class <= class_bound);
  r.add_bound("points per class (loose)", "ceil(M/s) + log2 s", ceil_div(points.size(), s) + static_cast<double>(rounds),
              out.max_class, static_cast<double>(out.max_class) <= ceil_div(points.size(), s) + static_cast<double>(rounds));
  r.add_bound("total degree", "8*s^{1/3}+4", degree_bound, res.total_degree, res.total_degree <= degree_bound);
  r.add_check("total degree <= 8*s^{1/3}+4", res.total_degree <= degree_bound);
  r.add_check("conservation: classes + boundary = M", total + res.boundary.size() == points.size());
  r.add_check("every round bisects every class (replayed exactly)", replay_bisections(points, res));

  bool crossings_ok = true;
  for (const auto& l : test_lines) {
    CrossingReport c = line_crossings(l, res);
    if (c.contained) {
      ++out.contained;
      continue;
    }
    out.max_crossings = std::max(out.max_crossings, c.count);
    crossings_ok = crossings_ok && c.count <= res.total_degree;
  }
  r.add_check("line crossings <= total degree", crossings_ok);

  Json classes = Json::object();
  for (const auto& [sig, n] : census) classes[sig] = n;
  Json rounds_json = Json::array();
  for (const auto& rd : res.rounds)
    rounds_json.push_back(Json{{"degree", rd.degree},
                               {"classes", rd.classes},
                               {"active", rd.active},
                               {"method", rd.method == BisectMethod::Enumeration ? "enumeration" : "search"}});
  Json factors = Json::array();
  for (const auto& g : res.factors) factors.push_back(g.to_string());
  r.measured["s"] = s;
  r.measured["points"] = points.size();
  r.measured["total_degree"] = res.total_degree;
  r.measured["nonempty_classes"] = census.size();
  r.measured["max_class"] = out.max_class;
  r.measured["class_bound"] = class_bound;
  r.measured["boundary"] = res.boundary.size();
  r.measured["classes"] = classes;
  r.measured["rounds"] = rounds_json;
  r.measured["factors"] = factors;
  r.measured["test_lines"] = test_lines.size();
  r.measured["contained_lines"] = out.contained;
  r.measured["max_crossings"] = out.max_crossings;
  return out;
}

std::uint64_t get_s(const Json& p) {
  const auto s = get_uint(p, "s", 4, 64, 2);
  if ((s & (s - 1)) != 0) throw std::invalid_argument("s must be a power of two");
  return s;
}

void run_partition(const Json& p, Report& r) {
  auto pts = p.contains("points") ? read_points(p) : random_points3(get_uint(p, "random", 64, 512, 1), r.seed);
  require_count(pts.size(), 512, "points");
  const auto s = get_s(p);
  auto lines = random_test_lines(get_uint(p, "test_lines", 10, 200), mix(r.seed ^ 0x6c696e6573ULL));
  PartitionResult res = partition(pts, s, r.seed);
  check_partition(pts, res, lines, r);
}

void run_pk(const Json& p, Report& r) {
  auto cfg = config_from(p, "grid_joints", get_uint(p, "size", 3, 200, 1), r.seed);
  if (cfg.lines.empty()) throw std::invalid_argument("configuration has no lines");
  require_count(cfg.lines.size(), 300, "lines");
  const auto k = get_uint(p, "k", 2, 1000, 2);
  const auto s = get_s(p);
  IntersectionCensus c = intersection_census(cfg.lines);
  std::vector<Point3> pk = pk_census(c, k);
  require_count(pk.size(), 512, "P_k points");
  PartitionResult res = partition(pk, s, r.seed);
  check_partition(pk, res, cfg.lines, r);

  // Incidence: a line contains a point of a class.
  std::size_t incidences = 0;
  for (const auto& l : cfg.lines) {
    std::set<std::string> cells;
    for (const auto& [w, sig] : res.assignment)
      if (l.contains(w)) cells.insert(sig);
    incidences += cells.size();
  }
  const std::size_t bound = (res.total_degree + 1) * cfg.lines.size();
  r.measured["config"] = to_string(cfg.kind);
  r.measured["size"] = cfg.size;
  r.measured["lines"] = cfg.lines.size();
  r.measured["k"] = k;
  r.measured["pk_points"] = pk.size();
  r.measured["line_cell_incidences"] = incidences;
  r.measured["boundary_fraction"] =
      pk.empty() ? 0.0 : static_cast<double>(res.boundary.size()) / static_cast<double>(pk.size());
  r.add_bound("line-cell incidences", "(total_degree+1)*lines", bound, incidences, incidences <= bound);
  r.add_check("line-cell incidences <= (total_degree+1)*lines", incidences <= bound);
}

const std::map<std::string, Runner>& runners() {
  static const std::map<std::string, Runner> table{
      {"fit", run_fit},
      {"flecnode", run_flecnode},
      {"ruled-cert", run_ruled_cert},
      {"joints", run_joints},
      {"gk4", run_gk4},
      {"szt", run_szt},
      {"motion-lines", run_motion_lines},
      {"distances", run_distances},
      {"degree-reduce", run_degree_reduce},
      {"partition", run_partition},
      {"pk", run_pk},
  };
  return table;
}

Json describe_input(const Json& params) {
  Json in = Json::object();
  for (const auto& [k, v] : params.items()) {
    if ((k == "points" || k == "lines" || k == "l1" || k == "l2") && v.is_array())
      in[k] = std::to_string(v.size()) + " supplied";
    else
      in[k] = v;
  }
  return in;
}

}  // namespace

std::vector<std::string> experiment_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : runners()) out.push_back(name);
  return out;
}

std::string canonical_experiment(const std::string& name) {
  if (name == "census") return "gk4";
  if (name == "quadruples") return "distances";
  if (!runners().count(name)) throw std::invalid_argument("unknown experiment '" + name + "'");
  return name;
}

Report run_experiment(const std::string& name, const Json& params, std::uint64_t seed) {
  if (!params.is_object()) throw std::invalid_argument("experiment parameters must be an object");
  Report r;
  r.experiment = canonical_experiment(name);
  r.seed = seed;
  r.input = describe_input(params);
  runners().at(r.experiment)(params, r);
  return r;
}

}  // namespace polyinc::cli
