#include "rising/config.hpp"

#include <benchmark/benchmark.h>

using namespace rising;

namespace {

const FamilyReport& families() {
    static const FamilyReport f = six_points_families();
    return f;
}

const SquareMap<double>& float_map() {
    static const SquareMap<double> f = [] {
        SquareMap<double> m(families(), 128);
        m.ensure_stage(32);
        return m;
    }();
    return f;
}

void BM_f01_exact(benchmark::State& state) {
    Rational s(-3, 7);
    for (auto _ : state) benchmark::DoNotOptimize(f01_eval(s));
}
BENCHMARK(BM_f01_exact);

void BM_f01_float(benchmark::State& state) {
    double s = -0.43;
    for (auto _ : state) benchmark::DoNotOptimize(f01_eval(s));
}
BENCHMARK(BM_f01_float);

void BM_build_stages_float(benchmark::State& state) {
    for (auto _ : state) {
        SquareMap<double> m(families(), state.range(0));
        m.ensure_stage(state.range(0));
        benchmark::DoNotOptimize(m.upper().stage());
    }
}
BENCHMARK(BM_build_stages_float)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_build_stages_exact(benchmark::State& state) {
    for (auto _ : state) {
        SquareMap<Rational> m(families(), state.range(0));
        m.ensure_stage(state.range(0));
        benchmark::DoNotOptimize(m.upper().stage());
    }
}
BENCHMARK(BM_build_stages_exact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_eval_float(benchmark::State& state) {
    const auto& f = float_map();
    SquarePoint<double> p = make_point(0.1, 0.4);
    long n = 0;
    for (auto _ : state) {
        p = f.eval(p);
        if (++n == 900) {
            p = make_point(0.1, 0.4);
            n = 0;
        }
    }
}
BENCHMARK(BM_eval_float);

void BM_estimate_omega(benchmark::State& state) {
    const auto& f = float_map();
    for (auto _ : state) benchmark::DoNotOptimize(estimate_omega(f, make_point(0.1, 0.4), state.range(0)).lo);
}
BENCHMARK(BM_estimate_omega)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_quotient_eval(benchmark::State& state) {
    const QuotientMap<double> xi;
    const SquarePoint<double> p = make_point(0.37, 0.91);
    for (auto _ : state) benchmark::DoNotOptimize(xi.eval(p));
}
BENCHMARK(BM_quotient_eval);

void BM_classify_plane(benchmark::State& state) {
    static const PlanePipeline<double> pipe(build_six_points<double>(128), DiskSpec::unit_disk());
    const PlanePoint y = pipe.to_plane(make_point(0.1, 0.4));
    for (auto _ : state) benchmark::DoNotOptimize(pipe.classify(y).kind);
}
BENCHMARK(BM_classify_plane)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
