#include <benchmark/benchmark.h>

#include <random>

#include "sos/batch.hpp"
#include "sos/geom.hpp"

using namespace sos;

namespace {

PointSet random_set(std::size_t n, std::int64_t range, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> u(-range, range);
  PointSet ps(2);
  for (std::size_t i = 0; i < n; ++i) ps.add({u(rng), u(rng)});
  return ps;
}

std::vector<Triangle> consecutive_triples(std::size_t n) {
  std::vector<Triangle> out;
  for (std::size_t i = 0; i + 2 < n; i += 3)
    out.push_back({std::int64_t(i), std::int64_t(i + 1), std::int64_t(i + 2)});
  return out;
}

void BM_OrientDouble(benchmark::State& state) {
  const auto ps = random_set(3000, 1 << 20, 1);
  for (auto _ : state)
    for (std::size_t i = 0; i + 2 < ps.size(); i += 3) {
      const auto a = ps[i].coords, b = ps[i + 1].coords, c = ps[i + 2].coords;
      const double det = (double(b[0]) - double(a[0])) * (double(c[1]) - double(a[1])) -
                         (double(b[1]) - double(a[1])) * (double(c[0]) - double(a[0]));
      benchmark::DoNotOptimize(det);
    }
  state.SetItemsProcessed(state.iterations() * 1000);
}

void orient_loop(benchmark::State& state, Arithmetic arithmetic, std::int64_t range) {
  const auto ps = random_set(3000, range, 2);
  for (auto _ : state)
    for (std::size_t i = 0; i + 2 < ps.size(); i += 3) {
      const std::array<PointRef, 3> r = {ps[i], ps[i + 1], ps[i + 2]};
      benchmark::DoNotOptimize(positive(r, CoordMode::cartesian, {.arithmetic = arithmetic}));
    }
  state.SetItemsProcessed(state.iterations() * 1000);
}

void BM_OrientFixed(benchmark::State& state) { orient_loop(state, Arithmetic::automatic, 1 << 20); }
void BM_OrientExact(benchmark::State& state) { orient_loop(state, Arithmetic::exact, 1 << 20); }
void BM_OrientDegenerate(benchmark::State& state) { orient_loop(state, Arithmetic::automatic, 1); }

void BM_InSphere(benchmark::State& state) {
  const auto ps = random_set(4000, 1 << 20, 3);
  for (auto _ : state)
    for (std::size_t i = 0; i + 3 < ps.size(); i += 4) {
      const std::array<PointRef, 4> r = {ps[i], ps[i + 1], ps[i + 2], ps[i + 3]};
      benchmark::DoNotOptimize(in_sphere(r));
    }
  state.SetItemsProcessed(state.iterations() * 1000);
}

void BM_OrientBatch(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  const auto ps = random_set(300000, 4, 4);
  const auto triples = consecutive_triples(ps.size());
  for (auto _ : state) benchmark::DoNotOptimize(orient_batch(ps, triples, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(triples.size()));
}

void BM_EmptyCircle(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  const auto ps = random_set(400, 1000, 5);
  const auto tri = delaunay_2d(ps);
  for (auto _ : state) benchmark::DoNotOptimize(find_empty_circle_violations(ps, tri.triangles, exec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(tri.triangles.size() * ps.size()));
}

void BM_Delaunay(benchmark::State& state) {
  const auto ps = random_set(static_cast<std::size_t>(state.range(0)), state.range(1), 6);
  for (auto _ : state) benchmark::DoNotOptimize(delaunay_2d(ps));
}

}  // namespace

BENCHMARK(BM_OrientDouble);
BENCHMARK(BM_OrientFixed);
BENCHMARK(BM_OrientExact);
BENCHMARK(BM_OrientDegenerate);
BENCHMARK(BM_InSphere);
BENCHMARK(BM_OrientBatch)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_EmptyCircle)->Arg(0)->Arg(1)->ArgName("parallel");
BENCHMARK(BM_Delaunay)->Args({500, 1000000})->Args({500, 5});

BENCHMARK_MAIN();
