#include "polyinc/cayley_salmon.hpp"
#include "polyinc/census.hpp"
#include "polyinc/motion_space.hpp"
#include "polyinc/partitioner.hpp"
#include "polyinc/vanishing_fit.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <set>
#include <vector>

using namespace polyinc;

namespace {

std::vector<Point3> random_points(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto coord = [&] { return rat(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 3)); };
  std::set<Point3> s;
  while (s.size() < n) s.insert(Point3(coord(), coord(), coord()));
  return {s.begin(), s.end()};
}

MultiPoly fermat_cubic() {
  const MultiPoly x = MultiPoly::variable(3, 0), y = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
  return x * x * x + y * y * y + z * z * z - MultiPoly::constant(3, Rat(1));
}

// Smallest degree whose monomial space exceeds the point count, so a witness exists.
void BM_FitOnPoints(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 7);
  unsigned degree = 0;
  while (monomial_count(degree) <= pts.size()) ++degree;
  for (auto _ : state) benchmark::DoNotOptimize(fit_on_points(pts, degree));
}
BENCHMARK(BM_FitOnPoints)->Arg(20)->Arg(50)->Arg(100)->Arg(199)->Unit(benchmark::kMillisecond);

// One degree lower the system has full column rank and no witness.
void BM_FitFullRank(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 7);
  unsigned degree = 0;
  while (monomial_count(degree + 1) <= pts.size()) ++degree;
  for (auto _ : state) benchmark::DoNotOptimize(fit_on_points(pts, degree));
}
BENCHMARK(BM_FitFullRank)->Arg(50)->Arg(199)->Unit(benchmark::kMillisecond);

void BM_FlecnodeFermat(benchmark::State& state) {
  const MultiPoly p = fermat_cubic();
  for (auto _ : state) benchmark::DoNotOptimize(flecnode_polynomial(p, 1));
}
BENCHMARK(BM_FlecnodeFermat)->Unit(benchmark::kMillisecond);

void BM_IntersectionCensus(benchmark::State& state) {
  const auto cfg = make_configuration(ConfigKind::RandomLines, static_cast<std::size_t>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_census(cfg.lines));
}
BENCHMARK(BM_IntersectionCensus)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

void BM_JointsGrid(benchmark::State& state) {
  const auto cfg = make_configuration(ConfigKind::GridJoints, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(count_joints(cfg.lines));
}
BENCHMARK(BM_JointsGrid)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_QuadrupleCount(benchmark::State& state) {
  const auto pts = random_planar_points(static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(quadruple_count(pts));
}
BENCHMARK(BM_QuadrupleCount)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Partition(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 90);
  for (auto _ : state) benchmark::DoNotOptimize(partition(pts, static_cast<std::size_t>(state.range(1)), 1));
}
BENCHMARK(BM_Partition)->Args({64, 4})->Args({256, 16})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
