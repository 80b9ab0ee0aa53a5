// Serial reference vs OpenMP kernel, same inputs. Run with
// --benchmark_filter=Scan etc.; outputs are asserted identical by the unit tests.
#include <benchmark/benchmark.h>

#include <vector>

#include "conifold/ask.hpp"
#include "conifold/conjecture.hpp"
#include "conifold/hk.hpp"
#include "conifold/twistor.hpp"

using namespace conifold;

namespace {

std::vector<hk::FiberPoint> metricPanel() {
    std::vector<hk::FiberPoint> pts;
    for (int j = 0; j < 8; ++j)
        for (int i = 0; i < 16; ++i) pts.push_back({cplx(-0.2 + 0.4 * i / 15.0, 0.005 + 0.02 * j), 0.3, 0.7 * i, 0.0});
    return pts;
}

std::vector<std::pair<cplx, cplx>> residualPoints() {
    std::vector<std::pair<cplx, cplx>> pts;
    for (int i = 0; i < 16; ++i) {
        const cplx t(-0.3 + 0.04 * i, 0.5 + 0.02 * i);
        pts.push_back({t, std::polar(0.4 + 0.05 * i, 0.5 * (std::arg(t) + std::arg(t - 1.0)) + pi / 2.0)});
    }
    return pts;
}

hk::Exec mode(const benchmark::State& s) { return s.range(0) ? hk::Exec::Parallel : hk::Exec::Serial; }

void MetricScan(benchmark::State& state) {
    const auto pts = metricPanel();
    for (auto _ : state) benchmark::DoNotOptimize(hk::metricScan(pts, {}, mode(state)));
    state.SetItemsProcessed(state.iterations() * long(pts.size()));
}

void TwistorOmega3(benchmark::State& state) {
    twistor::TwistorOptions o;
    o.exec = mode(state);
    const hk::FiberPoint p{cplx(0.15, 0.25), 0.3, 0.4};
    for (auto _ : state) benchmark::DoNotOptimize(twistor::omega3FromTwistor(p, o));
}

void ResidualPanel(benchmark::State& state) {
    const auto pts = residualPoints();
    for (auto _ : state) benchmark::DoNotOptimize(conjecture::residualPanel(pts, mode(state)));
    state.SetItemsProcessed(state.iterations() * long(pts.size()));
}

}  // namespace

// Arg(0): serial reference, Arg(1): OpenMP
BENCHMARK(MetricScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(TwistorOmega3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(ResidualPanel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
