#include <benchmark/benchmark.h>

#include "shellrr/extfield.hpp"
#include "shellrr/history.hpp"
#include "shellrr/integrator.hpp"
#include "shellrr/retardation.hpp"
#include "shellrr/selffield.hpp"
#include "shellrr/worldline.hpp"

using namespace shellrr;

namespace {

TrajectoryHistory circular_history(double h, int count) {
    const CircularWorldline w(0.2, 1.5);
    const Kinematics k0 = w.at(0.0);
    TrajectoryHistory out(0.0, k0.r, k0.u);
    for (int i = 1; i <= count; ++i) {
        const Kinematics k = w.at(i * h);
        out.append({i * h, k.r, k.u, k.a});
    }
    return out;
}

void BM_HistoryEval(benchmark::State& state) {
    const TrajectoryHistory hist = circular_history(0.01, 10000);
    double s = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hist.eval(s));
        s += 0.0037;
        if (s > 99.0) s = 10.0;
    }
}
BENCHMARK(BM_HistoryEval);

void BM_ProperDelay(benchmark::State& state) {
    const TrajectoryHistory hist = circular_history(0.01, 10000);
    for (auto _ : state) {
        benchmark::DoNotOptimize(proper_delay(hist, 50.005, 0.1, 0.1));
    }
}
BENCHMARK(BM_ProperDelay);

void BM_SelfFaraday(benchmark::State& state) {
    const TrajectoryHistory hist = circular_history(0.01, 10000);
    const Kinematics k = hist.eval(50.005);
    const ShellParticle p(1.0, 0.1, 0.1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(self_faraday(hist, {50.005, k.r, k.u}, p, 0.1));
    }
}
BENCHMARK(BM_SelfFaraday);

void BM_SurfaceAverage(benchmark::State& state) {
    const PlaneWaveField wave{0.5, {0.0, 0.0, 2.0}, {1.0, 0.0, 0.0}};
    const SphereQuadrature quad(static_cast<int>(state.range(0)));
    const ParticleState st{0.0, {0.3, 0.1, 0.0, 0.2}, {1.25, 0.0, 0.75, 0.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(surface_average_faraday(wave, st, 0.1, quad));
    }
}
BENCHMARK(BM_SurfaceAverage)->Arg(4)->Arg(8)->Arg(16);

void BM_Rhs(benchmark::State& state) {
    const TrajectoryHistory hist = circular_history(0.01, 10000);
    const Kinematics k = hist.eval(50.005);
    const ShellParticle p(1.0, 0.1, 0.1);
    const UniformStaticField field{{}, {0.0, 0.0, 10.0}};
    const RampSchedule on{0.0, 0.1, std::nullopt, 0.0};
    const SphereQuadrature quad;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rhs({50.005, k.r, k.u}, hist, p, field, on, quad, 0.1));
    }
}
BENCHMARK(BM_Rhs);

void BM_GyrationThousandSteps(benchmark::State& state) {
    const ShellParticle p(1.0, 0.1, 0.1);
    IntegratorConfig c;
    c.step = 0.01;
    c.s_end = 10.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(integrate(p, {0.0, {}, {1.25, 0.0, 0.75, 0.0}}, UniformStaticField{{}, {0.0, 0.0, 10.0}},
                                           {0.0, 0.1, std::nullopt, 0.0}, c));
    }
}
BENCHMARK(BM_GyrationThousandSteps)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
