#include <benchmark/benchmark.h>

#include "frameshift/frames.hpp"
#include "frameshift/network.hpp"
#include "frameshift/signal.hpp"
#include "frameshift/threading.hpp"

namespace fs = frameshift;

static void BM_Convolve2D(benchmark::State& state) {
    fs::Grid g{2, static_cast<int>(state.range(0)), 1.0};
    const fs::SampledSignal f = fs::random_bandlimited({g.nyquist() / 4.0, 1}, g);
    const fs::FilterBank bank = fs::build_directional_wavelet_2d(g, 3, 8);
    const auto& atom = bank.atom(bank.labels.front());
    for (auto _ : state) {
        benchmark::DoNotOptimize(fs::circular_convolve(f, atom));
    }
}
BENCHMARK(BM_Convolve2D)->Arg(64)->Arg(128)->Arg(256);

static void BM_Extract(benchmark::State& state) {
    fs::Grid g{2, 64, 1.0};
    const fs::SampledSignal f = fs::random_bandlimited({g.nyquist() / 4.0, 1}, g);
    const fs::ModuleSequence seq =
        fs::preset_scattering(g, 2, 4, static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fs::extract(seq, f));
    }
}
BENCHMARK(BM_Extract)->Arg(1)->Arg(2)->Arg(3);

static void BM_ExtractThreads(benchmark::State& state) {
    fs::threading::set_threads(static_cast<int>(state.range(0)));
    fs::Grid g{2, 64, 1.0};
    const fs::SampledSignal f = fs::random_bandlimited({g.nyquist() / 4.0, 1}, g);
    const fs::ModuleSequence seq = fs::preset_scattering(g, 2, 4, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fs::extract(seq, f));
    }
    fs::threading::set_threads(0);
}
BENCHMARK(BM_ExtractThreads)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

BENCHMARK_MAIN();
