#include "polyinc/cli/experiments.hpp"
#include "polyinc/cli/io.hpp"
#include "polyinc/cli/poly_parser.hpp"
#include "polyinc/cli/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

namespace {

using polyinc::cli::Json;

struct Global {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  std::string svg;
  bool timing = false;
};

// Subcommand options collected before conversion to experiment parameters.
struct Options {
  std::string points, lines, l1, l2, poly, config, expect, probability, params;
  std::vector<std::uint64_t> sizes;
  std::uint64_t size = 0, degree = 0, random = 0, grid = 0, s = 0, k = 0, ruling1 = 0, ruling2 = 0, retries = 0,
                test_lines = 0;
  bool irreducible = false, reducible = false;
};

bool given(CLI::App* app, const char* opt) {
  const CLI::Option* o = app->get_option_no_throw(opt);
  return o != nullptr && o->count() > 0;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text;
  else
    polyinc::cli::write_text_file(path, text);
}

void merge_file(Json& params, const std::string& path, const char* key) {
  if (path.empty()) return;
  Json doc = polyinc::cli::load_json_file(path);
  if (!doc.contains(key)) throw std::invalid_argument(path + " has no \"" + key + "\" array");
  params[key] = doc.at(key);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polyinc: exact workbench for polynomial-method incidence geometry"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--seed", g.seed, "random seed (default 0)");
  app.add_option("--out", g.out, "write the report here instead of stdout");
  app.add_option("--format", g.format, "report format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--svg", g.svg, "also write an SVG plot of the sweep table");
  app.add_flag("--timing", g.timing, "include wall time (reports are then no longer byte-identical)");

  Options o;
  std::map<CLI::App*, std::string> experiment_of;
  auto sub = [&](const std::string& name, const std::string& experiment, const std::string& help) {
    CLI::App* s = app.add_subcommand(name, help);
    experiment_of[s] = experiment;
    return s;
  };

  auto* fit = sub("fit", "fit", "lowest-degree polynomial vanishing on a point set");
  fit->add_option("--points", o.points, "point file");
  fit->add_option("--config", o.config, "configuration kind with 3-d points");
  fit->add_option("--size", o.size, "configuration size");
  fit->add_option("--degree", o.degree, "fixed degree instead of the minimal one");

  auto* flec = sub("flecnode", "flecnode", "flecnode eliminant per chart and ruledness verdict");
  flec->add_option("--poly", o.poly, "surface polynomial in x, y, z")->required();
  flec->add_option("--lines", o.lines, "line file; lines must lie on the surface");
  flec->add_flag("--reducible", o.reducible, "do not declare the polynomial irreducible");
  flec->add_option("--expect", o.expect, "expected verdict, checked in the report");

  auto* ruled = sub("ruled-cert", "ruled-cert", "ruledness certificate");
  ruled->add_option("--poly", o.poly, "surface polynomial in x, y, z")->required();
  ruled->add_option("--lines", o.lines, "line file; lines must lie on the surface");
  ruled->add_flag("--irreducible", o.irreducible, "declare the polynomial irreducible");
  ruled->add_option("--expect", o.expect, "expected verdict, checked in the report");

  auto* joints = sub("joints", "joints", "joint count against N^{3/2}");
  auto* census = sub("census", "gk4", "intersection census, P and concentration");
  auto* szt = sub("szt", "szt", "planar incidences against n^{2/3}m^{2/3}+n+m");
  for (auto* s : {joints, census, szt}) {
    s->add_option("--config", o.config, "configuration kind");
    s->add_option("--size", o.size, "configuration size");
    s->add_option("--sizes", o.sizes, "sweep over sizes (table output)")->delimiter(',');
  }
  joints->add_option("--lines", o.lines, "line file");
  census->add_option("--lines", o.lines, "line file");

  auto* motion = sub("motion-lines", "motion-lines", "rigid-motion lines of ordered point pairs");
  motion->add_option("--points", o.points, "planar point file");
  motion->add_option("--random", o.random, "number of random rational points");

  auto* quad = sub("quadruples", "distances", "distinct distances and distance quadruples");
  quad->add_option("--points", o.points, "planar point file");
  quad->add_option("--random", o.random, "number of random rational points");
  quad->add_option("--grid", o.grid, "k x k integer grid");
  quad->add_option("--sizes", o.sizes, "sweep over grid sizes (table output)")->delimiter(',');

  auto* dr = sub("degree-reduce", "degree-reduce", "certified randomized degree reduction");
  dr->add_option("--ruling1", o.ruling1, "lines of the first hyperboloid ruling (L1)");
  dr->add_option("--ruling2", o.ruling2, "lines of the second hyperboloid ruling (L2)");
  dr->add_option("--l1", o.l1, "line file sampled from");
  dr->add_option("--l2", o.l2, "line file to cover");
  dr->add_option("--probability", o.probability, "keep probability, e.g. 1/4");
  dr->add_option("--degree", o.degree, "degree cap");
  dr->add_option("--retries", o.retries, "attempts");

  auto* part = sub("partition", "partition", "iterated polynomial ham-sandwich partition");
  part->add_option("--points", o.points, "point file");
  part->add_option("--random", o.random, "number of random rational points");
  part->add_option("--s", o.s, "number of cells (power of two)");
  part->add_option("--test-lines", o.test_lines, "random lines for the crossing check");

  auto* pk = sub("pk", "pk", "P_k census, partition and line-cell incidences");
  pk->add_option("--config", o.config, "configuration kind");
  pk->add_option("--size", o.size, "configuration size");
  pk->add_option("--k", o.k, "multiplicity threshold k");
  pk->add_option("--s", o.s, "number of cells (power of two)");

  auto* gen = app.add_subcommand("generate", "write a configuration as a point/line file");
  gen->add_option("--config", o.config, "configuration kind")->required();
  gen->add_option("--size", o.size, "configuration size")->required();

  std::string experiment_name;
  auto* exp = app.add_subcommand("experiment", "run an experiment from JSON parameters");
  exp->add_option("name", experiment_name, "experiment name")->required();
  exp->add_option("--params", o.params, "parameters as a JSON object");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      auto cfg = polyinc::make_configuration(polyinc::parse_config_kind(o.config), o.size, g.seed);
      emit(polyinc::cli::configuration_to_json(cfg).dump(2) + "\n", g.out);
      return 0;
    }

    Json params = Json::object();
    std::string name;
    if (exp->parsed()) {
      name = experiment_name;
      if (!o.params.empty()) params = Json::parse(o.params);
    } else {
      CLI::App* chosen = app.get_subcommands().front();
      name = experiment_of.at(chosen);
      auto set_u = [&](const char* opt, const char* key, std::uint64_t v) {
        if (given(chosen, opt)) params[key] = v;
      };
      auto set_s = [&](const char* opt, const char* key, const std::string& v) {
        if (given(chosen, opt)) params[key] = v;
      };
      merge_file(params, given(chosen, "--points") ? o.points : "", "points");
      merge_file(params, given(chosen, "--lines") ? o.lines : "", "lines");
      if (given(chosen, "--l1")) params["l1"] = polyinc::cli::load_json_file(o.l1).at("lines");
      if (given(chosen, "--l2")) params["l2"] = polyinc::cli::load_json_file(o.l2).at("lines");
      set_s("--poly", "poly", o.poly);
      set_s("--config", "config", o.config);
      set_s("--expect", "expect", o.expect);
      set_s("--probability", "probability", o.probability);
      set_u("--size", "size", o.size);
      set_u("--degree", "degree", o.degree);
      set_u("--random", "random", o.random);
      set_u("--grid", "grid", o.grid);
      set_u("--s", "s", o.s);
      set_u("--k", "k", o.k);
      set_u("--ruling1", "ruling1", o.ruling1);
      set_u("--ruling2", "ruling2", o.ruling2);
      set_u("--retries", "retries", o.retries);
      set_u("--test-lines", "test_lines", o.test_lines);
      if (given(chosen, "--sizes")) params["sizes"] = o.sizes;
      if (given(chosen, "--irreducible")) params["irreducible"] = true;
      if (given(chosen, "--reducible")) params["irreducible"] = false;
    }

    const auto start = std::chrono::steady_clock::now();
    polyinc::cli::Report report = polyinc::cli::run_experiment(name, params, g.seed);
    if (g.timing) report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    emit(g.format == "csv" ? polyinc::cli::render_csv(report) : polyinc::cli::render_json(report), g.out);
    if (!g.svg.empty()) polyinc::cli::write_text_file(g.svg, polyinc::cli::render_svg(report));
    return report.passed() ? 0 : 1;
  } catch (const polyinc::cli::ParseError& e) {
    std::cerr << "polyinc: polynomial syntax error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "polyinc: " << e.what() << "\n";
  }
  return 2;
}
