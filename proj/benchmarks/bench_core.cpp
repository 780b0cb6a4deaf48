#include "arakelov/hilbert_samuel.hpp"
#include "arakelov/instances.hpp"
#include "arakelov/positivity.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace arakelov;

namespace {

std::vector<Plf> convex_inputs(std::size_t count) {
    InstanceGenerator gen(11);
    std::vector<Plf> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(gen.convex_bounded_part());
    return out;
}

std::vector<MetrisedRDivisor> metrised_inputs(std::size_t count, bool hs) {
    InstanceGenerator gen(13);
    const auto curve = gen.curve();
    std::vector<MetrisedRDivisor> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(hs ? gen.hs_instance(curve) : gen.metrised(curve));
    return out;
}

void BM_energy(benchmark::State& state) {
    const auto fs = convex_inputs(64);
    std::size_t i = 0;
    for (auto _ : state) {
        const Plf& f = fs[i++ % fs.size()];
        benchmark::DoNotOptimize(energy(f, f));
    }
}
BENCHMARK(BM_energy);

void BM_legendre_star(benchmark::State& state) {
    const auto fs = convex_inputs(64);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(legendre_star(fs[i++ % fs.size()]));
}
BENCHMARK(BM_legendre_star);

void BM_lambda_ess_lp(benchmark::State& state) {
    const auto gs = metrised_inputs(32, false);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(lambda_ess(gs[i++ % gs.size()]));
}
BENCHMARK(BM_lambda_ess_lp);

void BM_lambda_ess_threshold(benchmark::State& state) {
    const auto gs = metrised_inputs(32, false);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(lambda_ess_threshold(gs[i++ % gs.size()]));
}
BENCHMARK(BM_lambda_ess_threshold);

void BM_distribution(benchmark::State& state) {
    const auto gs = metrised_inputs(32, false);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(distribution(gs[i++ % gs.size()]).mean());
}
BENCHMARK(BM_distribution);

void BM_classify(benchmark::State& state) {
    const auto gs = metrised_inputs(32, false);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(classify(gs[i++ % gs.size()]));
}
BENCHMARK(BM_classify);

void BM_arakelov_deg(benchmark::State& state) {
    const auto gs = metrised_inputs(8, true);
    const std::int64_t n = state.range(0);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(arakelov_deg(gs[i++ % gs.size()], n));
}
BENCHMARK(BM_arakelov_deg)->Arg(10)->Arg(100)->Arg(1000);

void BM_phi_star_sum(benchmark::State& state) {
    const auto gs = metrised_inputs(8, true);
    const std::int64_t n = state.range(0);
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(phi_star_sum(gs[i++ % gs.size()], n));
}
BENCHMARK(BM_phi_star_sum)->Arg(10)->Arg(100)->Arg(1000);

void BM_inequality_suite(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(inequality_suite(3, 100).violations.size());
}
BENCHMARK(BM_inequality_suite)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
