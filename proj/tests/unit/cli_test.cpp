#include "polyinc/cli/experiments.hpp"
#include "polyinc/cli/io.hpp"
#include "polyinc/cli/poly_parser.hpp"
#include "polyinc/cli/report.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace polyinc;
using namespace polyinc::cli;
using polyinc::test::cst;
using polyinc::test::X;
using polyinc::test::Y;
using polyinc::test::Z;

namespace {

std::size_t error_position(const std::string& text) {
  try {
    parse_poly(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  FAIL("no ParseError for '" << text << "'");
  return 0;
}

std::string error_message(const std::string& name, const Json& params) {
  try {
    run_experiment(name, params, 0);
  } catch (const std::invalid_argument& e) {
    return e.what();
  }
  return "";
}

const Json& measured(const Report& r, const char* key) { return r.measured.at(key); }

}  // namespace

TEST_CASE("parse_poly examples") {
  CHECK(parse_poly("x^2+y^2+z^2-1") == X().pow(2) + Y().pow(2) + Z().pow(2) - cst(1));
  CHECK(parse_poly("x*y-z") == X() * Y() - Z());
  CHECK(parse_poly("1/2*x - 3") == cst(rat(1, 2)) * X() - cst(3));
  CHECK(parse_poly(" ( x + y ) ^ 2 ") == X().pow(2) + cst(2) * X() * Y() + Y().pow(2));
  CHECK(parse_poly("-x^2") == -X().pow(2));
  CHECK(parse_poly("2^3") == cst(8));
  CHECK(parse_poly("x - -y") == X() + Y());
  CHECK(parse_poly("6/4") == cst(rat(3, 2)));
  CHECK(parse_poly("x^0") == cst(1));
  CHECK(parse_poly("(x^3)^2") == X().pow(6));
}

TEST_CASE("parse_poly errors carry positions") {
  CHECK(error_position("x y") == 2);
  CHECK(error_position("2x") == 1);
  CHECK(error_position("x +") == 3);
  CHECK(error_position("(x + 1") == 6);
  CHECK(error_position("w") == 0);
  CHECK(error_position("") == 0);
  CHECK(error_position("x^-1") == 2);
  CHECK(error_position("1/0") == 2);
  CHECK_THROWS_AS(parse_poly("x^65"), ParseError);
  CHECK_NOTHROW(parse_poly("x^64"));
  CHECK_THROWS_AS(parse_poly("x^99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_poly("x)"), ParseError);
}

TEST_CASE("printing and parsing round-trips exactly") {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 100; ++i) {
    MultiPoly p = test::random_poly(rng, 3, 4, 1 + static_cast<int>(rng() % 7));
    INFO(p.to_string());
    CHECK(parse_poly(p.to_string()) == p);
  }
  CHECK(parse_poly(MultiPoly(3).to_string()).is_zero());
}

TEST_CASE("rationals and geometry survive JSON") {
  CHECK(rat_to_json(rat(-3, 4)) == Json("-3/4"));
  CHECK(rat_from_json(Json("6/8")) == rat(3, 4));
  CHECK(rat_from_json(Json(5)) == 5);
  CHECK_THROWS(rat_from_json(Json(0.5)));

  Json doc = Json::parse(R"({"points": [["1", "2/3", -1]], "lines": [{"base": [0, 0, 0], "dir": ["2", 0, 0]}]})");
  auto pts = read_points(doc);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == Point3(Rat(1), rat(2, 3), Rat(-1)));
  auto lines = read_lines(doc);
  REQUIRE(lines.size() == 1);
  CHECK(lines[0] == Line3(Point3(Rat(0), Rat(0), Rat(0)), Point3(Rat(1), Rat(0), Rat(0))));

  auto cfg = make_configuration(ConfigKind::HyperboloidRulings, 3);
  Json j = configuration_to_json(cfg);
  CHECK(j.at("format_version") == kFormatVersion);
  CHECK(read_lines(j) == cfg.lines);

  auto grid = make_configuration(ConfigKind::PlanarGrid, 2);
  CHECK(read_planar_points(configuration_to_json(grid)) == grid.planar_points);
}

TEST_CASE("experiment names and aliases") {
  auto names = experiment_names();
  CHECK(names.size() == 11);
  CHECK(canonical_experiment("census") == "gk4");
  CHECK(canonical_experiment("quadruples") == "distances");
  for (const auto& n : names) CHECK(canonical_experiment(n) == n);
  CHECK_THROWS_AS(canonical_experiment("bogus"), std::invalid_argument);
}

TEST_CASE("joints experiment on the size-3 grid") {
  Report r = run_experiment("joints", Json{{"size", 3}}, 0);
  CHECK(r.passed());
  CHECK(measured(r, "lines") == 27);
  CHECK(measured(r, "joints") == 27);
  CHECK(measured(r, "ratio").get<double>() == doctest::Approx(0.19245).epsilon(1e-4));
}

TEST_CASE("distances experiment on a 4x4 grid") {
  Report r = run_experiment("distances", Json{{"grid", 4}}, 0);
  CHECK(r.passed());
  CHECK(measured(r, "points") == 16);
  CHECK(measured(r, "distances") == 9);
  CHECK(measured(r, "N_over_log_N").get<double>() == doctest::Approx(16.0 / std::log(16.0)));
  CHECK(measured(r, "quadruples") == 8288);
}

TEST_CASE("flecnode experiment on the Fermat cubic") {
  Report r = run_experiment("flecnode", Json{{"poly", "x^3+y^3+z^3-1"}}, 0);
  CHECK(measured(r, "verdict") == "NotRuledCertified");
  CHECK(r.passed());
  Report e = run_experiment("flecnode", Json{{"poly", "x^2+y^2+z^2-1"}, {"expect", "RuledCertified"}}, 0);
  CHECK(e.passed());
  Report wrong = run_experiment("flecnode", Json{{"poly", "x^2+y^2+z^2-1"}, {"expect", "NotRuledCertified"}}, 0);
  CHECK_FALSE(wrong.passed());
}

TEST_CASE("remaining experiments pass on their defaults") {
  for (const char* name : {"fit", "ruled-cert", "gk4", "szt", "motion-lines", "degree-reduce", "partition", "pk"}) {
    Json params = Json::object();
    if (std::string(name) == "ruled-cert") params["poly"] = "x*y-z";
    INFO(name);
    Report r = run_experiment(name, params, 0);
    CHECK(r.passed());
    CHECK(r.experiment == name);
    CHECK_FALSE(r.checks.empty());
  }
}

TEST_CASE("caps and bad parameters are rejected with named caps") {
  CHECK(error_message("joints", Json{{"size", 11}}).find("cap") != std::string::npos);
  CHECK(error_message("distances", Json{{"random", 41}}).find("cap of 40") != std::string::npos);
  CHECK(error_message("flecnode", Json{{"poly", "x^5"}}).find("cap of 4") != std::string::npos);
  CHECK(error_message("partition", Json{{"s", 128}}).find("cap") != std::string::npos);
  CHECK_THROWS_AS(run_experiment("nope", Json::object(), 0), std::invalid_argument);
  CHECK_THROWS(run_experiment("flecnode", Json{{"poly", "x y"}}, 0));
}

TEST_CASE("reports are byte-identical across reruns") {
  const std::vector<std::pair<std::string, Json>> runs{
      {"fit", Json{{"size", 3}}},
      {"flecnode", Json{{"poly", "x^2*y-z^2+x*y*z"}}},
      {"ruled-cert", Json{{"poly", "x^2+y^2-z^2"}}},
      {"joints", Json{{"sizes", {2, 3}}}},
      {"gk4", Json{{"config", "random_lines"}, {"size", 30}}},
      {"szt", Json{{"sizes", {2, 3, 4}}}},
      {"motion-lines", Json{{"random", 6}}},
      {"distances", Json{{"random", 8}}},
      {"degree-reduce", Json::object()},
      {"partition", Json{{"random", 100}, {"s", 8}}},
      {"pk", Json{{"config", "hyperboloid_rulings"}, {"size", 8}, {"k", 2}}}};
  for (const auto& [name, params] : runs) {
    INFO(name);
    for (std::uint64_t seed : {0u, 5u}) {
      const std::string a = render_json(run_experiment(name, params, seed));
      const std::string b = render_json(run_experiment(name, params, seed));
      CHECK(a == b);
      CHECK(a.find("wall_time") == std::string::npos);
    }
  }
}

TEST_CASE("report rendering") {
  Report r;
  r.experiment = "demo";
  r.measured["n"] = 3;
  r.add_bound("b", "n^2", 9, 3, true);
  r.add_check("ok", true);
  CHECK(r.passed());
  r.add_check("bad", false, "detail");
  CHECK_FALSE(r.passed());
  Json j = report_to_json(r);
  CHECK(j.at("format_version") == kFormatVersion);
  CHECK(j.at("passed") == false);
  CHECK(render_json(r).back() == '\n');
  CHECK(render_csv(r).find("section,name,value") == 0);
  CHECK_THROWS_AS(render_svg(r), std::invalid_argument);

  Report sweep = run_experiment("szt", Json{{"sizes", {2, 3, 4}}}, 0);
  REQUIRE(sweep.table.has_value());
  CHECK(render_csv(sweep).find("size,points,lines,incidences,bound,ratio") == 0);
  const std::string svg = render_svg(sweep);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}
