#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "utsforge/approx.hpp"
#include "utsforge/compact_sets.hpp"
#include "utsforge/scheduler.hpp"
#include "utsforge/transform.hpp"

using namespace utsforge;

namespace {

std::vector<Complex> random_coefficients(std::size_t n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> a(n);
    for (auto& z : a) z = {u(rng), u(rng)};
    return a;
}

void BM_CoeffsT(benchmark::State& state, TransformSpec t) {
    const auto a = random_coefficients(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(coeffs_T(t, a, a.size() - 1));
    state.SetComplexityN(state.range(0));
}
BENCHMARK_CAPTURE(BM_CoeffsT, identity, TransformSpec::identity())->Range(64, 4096)->Complexity();
BENCHMARK_CAPTURE(BM_CoeffsT, cesaro, TransformSpec::cesaro())->Range(64, 4096)->Complexity();
BENCHMARK_CAPTURE(BM_CoeffsT, band, TransformSpec::linear(rows::ConstantBand{{1.0, 0.5, 0.25}}))
    ->Range(64, 4096)
    ->Complexity();

void BM_Pullback(benchmark::State& state) {
    const auto c = random_coefficients(static_cast<std::size_t>(state.range(0)));
    const auto t = TransformSpec::cesaro();
    for (auto _ : state) benchmark::DoNotOptimize(pullback(t, c));
}
BENCHMARK(BM_Pullback)->Range(64, 4096);

void BM_BuildCloud(benchmark::State& state, CompactSetSpec spec) {
    const double density = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_cloud(spec, density));
}
BENCHMARK_CAPTURE(BM_BuildCloud, segment, CompactSetSpec{shapes::Segment{1.0, 2.0}})->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(BM_BuildCloud, disk, CompactSetSpec{shapes::Disk{3.0, 1.0}})->RangeMultiplier(2)->Range(8, 64);
BENCHMARK_CAPTURE(BM_BuildCloud, slit_annulus,
                  CompactSetSpec{shapes::SlitAnnulus{0.5, 2.0, std::numbers::pi, 0.5}})
    ->RangeMultiplier(2)
    ->Range(8, 64);

void BM_FitInverse(benchmark::State& state) {
    const auto cloud = build_cloud(shapes::Segment{1.0, 2.0}, 16.0);
    std::vector<Complex> gs, gv;
    for (Complex z : cloud.samples) gs.push_back(1.0 / z);
    for (Complex z : cloud.validation) gv.push_back(1.0 / z);
    const double tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fit(cloud, gs, gv, tol, 64));
}
BENCHMARK(BM_FitInverse)->DenseRange(2, 6, 2);

void BM_FitDiskExp(benchmark::State& state) {
    const auto cloud = build_cloud(shapes::Disk{Complex{2, 1}, 1.0}, static_cast<double>(state.range(0)));
    std::vector<Complex> gs, gv;
    for (Complex z : cloud.samples) gs.push_back(std::exp(z));
    for (Complex z : cloud.validation) gv.push_back(std::exp(z));
    for (auto _ : state) benchmark::DoNotOptimize(fit(cloud, gs, gv, 1e-8, 64));
}
BENCHMARK(BM_FitDiskExp)->RangeMultiplier(2)->Range(4, 16);

void BM_ShortRun(benchmark::State& state) {
    ForgeRequest r;
    r.sets = {shapes::Segment{1.0, 2.0}, shapes::Disk{3.0, 0.5}};
    r.targets = {ComplexPolynomial({1.0}), ComplexPolynomial({0.0, 1.0})};
    r.ladder = TolLadder::from_list({1.0, 0.5, 0.25});
    r.task_budget = 4;
    for (auto _ : state) benchmark::DoNotOptimize(run_forge(r));
}
BENCHMARK(BM_ShortRun)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
