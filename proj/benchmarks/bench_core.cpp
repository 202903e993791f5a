#include <benchmark/benchmark.h>

#include "polyfan/catalog.hpp"
#include "polyfan/exp_integrals.hpp"
#include "polyfan/lattice.hpp"
#include "polyfan/polytope.hpp"
#include "polyfan/soliton.hpp"
#include "polyfan/stability.hpp"

namespace {

using namespace polyfan;

const char* arg_name(const benchmark::State& state) {
  static const char* names[] = {"P2", "BlP2", "Bl3P2", "P3", "P1xP1xP1", "BlP3"};
  return names[state.range(0)];
}

void BM_construct_polytope(benchmark::State& state) {
  const FanoPolytope& src = catalog_polytope(arg_name(state));
  const IntMatrix facets = src.facets();
  const int dim = src.dim();
  for (auto _ : state) {
    FanoPolytope P(dim, facets);
    benchmark::DoNotOptimize(P.vertices().size());
  }
}
BENCHMARK(BM_construct_polytope)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_volume_barycenter(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope(arg_name(state));
  for (auto _ : state) {
    const RatVector b = barycenter(P);
    benchmark::DoNotOptimize(b[0] == 0);
  }
}
BENCHMARK(BM_volume_barycenter)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_integral_exp(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope(arg_name(state));
  const ExpIntegrator I(P);
  Eigen::VectorXd a = Eigen::VectorXd::Constant(P.dim(), 0.37);
  for (auto _ : state) benchmark::DoNotOptimize(I.value(a));
}
BENCHMARK(BM_integral_exp)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_exp_moments(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope(arg_name(state));
  const ExpIntegrator I(P);
  Eigen::VectorXd a = Eigen::VectorXd::Constant(P.dim(), 0.37);
  for (auto _ : state) {
    const ExpMoments m = I.moments(a);
    benchmark::DoNotOptimize(m.value);
  }
}
BENCHMARK(BM_exp_moments)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_solve_soliton(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope(arg_name(state));
  for (auto _ : state) {
    const SolitonResult r = solve_soliton(P);
    benchmark::DoNotOptimize(r.a_star);
  }
}
BENCHMARK(BM_solve_soliton)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_ricci_lower_bound(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope(arg_name(state));
  for (auto _ : state) {
    const StabilityReport r = greatest_ricci_lower_bound(P);
    benchmark::DoNotOptimize(r.R == 1);
  }
}
BENCHMARK(BM_ricci_lower_bound)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_lattice_count(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope("BlP2");
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(lattice_count(P, k));
}
BENCHMARK(BM_lattice_count)->Arg(5)->Arg(20)->Arg(40)->Unit(benchmark::kMicrosecond);

void BM_boundary_weight_series(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope("BlP2");
  const RatVector c = rational_vector({Rat(1), Rat(0)});
  const int k_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const WeightSeries s = boundary_weight_series(P, c, k_max);
    benchmark::DoNotOptimize(s.dims.back());
  }
}
BENCHMARK(BM_boundary_weight_series)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_mc_integral(benchmark::State& state) {
  const FanoPolytope& P = catalog_polytope("BlP2");
  Eigen::VectorXd a = Eigen::VectorXd::Constant(2, 0.5);
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const McResult r = mc_integral_exp(P, a, samples, 42);
    benchmark::DoNotOptimize(r.value);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(samples));
}
BENCHMARK(BM_mc_integral)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
