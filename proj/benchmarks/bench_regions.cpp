#include <benchmark/benchmark.h>

#include "varregion/bounds.hpp"
#include "varregion/regions.hpp"
#include "varregion/verify.hpp"

using namespace varregion;

namespace {

const ClassParams kRow = ClassParams::make(0.383292, 0.591244, Cx(0.0737292, 0.466706), Cx(0.335192, -0.787333));

void BM_CurveClosedForm(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_curve(kRow, static_cast<int>(state.range(0)), CurveMethod::ClosedForm));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CurveClosedForm)->Arg(64)->Arg(720)->Arg(4096);

void BM_CurveQuadrature(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(boundary_curve(kRow, static_cast<int>(state.range(0)), CurveMethod::Quadrature));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CurveQuadrature)->Arg(64)->Arg(720);

void BM_PolygonChecks(benchmark::State& state) {
  const Polygon poly = boundary_curve(kRow, static_cast<int>(state.range(0)), CurveMethod::ClosedForm).polygon();
  const double tol = default_convexity_tol(poly);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygon_is_convex(poly, tol));
    benchmark::DoNotOptimize(polygon_is_simple(poly, 1e-12 * poly.diameter()));
    benchmark::DoNotOptimize(point_in_polygon(poly, interior_center(kRow)));
  }
}
BENCHMARK(BM_PolygonChecks)->Arg(720)->Arg(8192);

void BM_EnclosureDisk(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enclosure_disk(kRow));
}
BENCHMARK(BM_EnclosureDisk);

void BM_Campaign(benchmark::State& state) {
  CampaignConfig cfg;
  cfg.trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_campaign(cfg));
}
BENCHMARK(BM_Campaign)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
