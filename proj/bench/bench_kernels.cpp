// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "paradoxkit/freeness.hpp"
#include "paradoxkit/smp.hpp"
#include "paradoxkit/sphere.hpp"
#include "paradoxkit/words.hpp"

namespace pk = paradoxkit;

namespace {

void ball_parallel(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::words::ball(static_cast<int>(s.range(0))));
}
void ball_serial(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::words::reference::ball(static_cast<int>(s.range(0))));
}

void exhaustive_parallel(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::freeness::exhaustive_check(static_cast<int>(s.range(0))));
}
void exhaustive_serial(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::freeness::reference::exhaustive_check(static_cast<int>(s.range(0))));
}

void fixed_parallel(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::sphere::fixed_directions(static_cast<int>(s.range(0))));
}
void fixed_serial(benchmark::State& s)
{
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::sphere::reference::fixed_directions(static_cast<int>(s.range(0))));
}

std::vector<pk::interval::Complex> embedded(int deg, std::uint64_t coef)
{
    const pk::paradox::EmbeddingBasis basis(deg, 128);
    std::vector<pk::interval::Complex> pts;
    for (const auto& p : pk::paradox::enumerate_polys(deg, coef))
        pts.push_back(basis.embed(p));
    return pts;
}

void separation_sweep(benchmark::State& s)
{
    const auto pts = embedded(static_cast<int>(s.range(0)), 2);
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::paradox::check_separation(pts, pk::paradox::kSeparationThreshold));
}
void separation_all_pairs(benchmark::State& s)
{
    const auto pts = embedded(static_cast<int>(s.range(0)), 2);
    for (auto _ : s)
        benchmark::DoNotOptimize(pk::paradox::reference::check_separation(pts, pk::paradox::kSeparationThreshold));
}

} // namespace

BENCHMARK(ball_parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(ball_serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(exhaustive_parallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(exhaustive_serial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(fixed_parallel)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(fixed_serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(separation_sweep)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(separation_all_pairs)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
