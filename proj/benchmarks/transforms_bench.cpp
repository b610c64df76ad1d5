#include "lcvwm/attacks.hpp"
#include "lcvwm/codec.hpp"
#include "lcvwm/transforms.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace {

using namespace lcvwm;

CoeffGrid noise_grid(std::size_t side, std::uint64_t seed = 1) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 255.0);
    CoeffGrid g(side, side);
    for (auto& v : g.values())
        v = dist(rng);
    return g;
}

GrayImage test_image(std::size_t side) {
    std::vector<std::uint8_t> px(side * side);
    for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c)
            px[r * side + c] = static_cast<std::uint8_t>((r * 3 + c * 5 + (r * c) % 17) & 0xFF);
    return GrayImage(side, side, std::move(px));
}

void BM_Dct2(benchmark::State& state) {
    const auto block = noise_grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dct2(block));
}
BENCHMARK(BM_Dct2)->Arg(4)->Arg(16);

void BM_LaplacianPyramid(benchmark::State& state) {
    const auto x = noise_grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        auto lvl = lp_decompose(x);
        benchmark::DoNotOptimize(lp_reconstruct(lvl.approximate, lvl.bandpass));
    }
}
BENCHMARK(BM_LaplacianPyramid)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_DirectionalFilterBank(benchmark::State& state) {
    const auto x = noise_grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(dfb_reconstruct(dfb_decompose(x)));
}
BENCHMARK(BM_DirectionalFilterBank)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_ContourletRoundTrip(benchmark::State& state) {
    const auto x = noise_grid(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(ct_reconstruct(ct_decompose(x)));
}
BENCHMARK(BM_ContourletRoundTrip)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_Embed(benchmark::State& state) {
    const auto img = test_image(512);
    EmbedConfig cfg;
    cfg.adaptive = state.range(0) != 0;
    const DatasetStats stats{40.0, 20.0, 10};
    for (auto _ : state)
        benchmark::DoNotOptimize(embed_image(img, SecretKey{1}, 128, cfg, stats));
}
BENCHMARK(BM_Embed)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Extract(benchmark::State& state) {
    const auto marked = embed_image(test_image(512), SecretKey{1}, 128, EmbedConfig{}, DatasetStats{40.0, 20.0, 10});
    for (auto _ : state)
        benchmark::DoNotOptimize(extract_image(marked.image, 128, EmbedConfig{}));
}
BENCHMARK(BM_Extract)->Unit(benchmark::kMillisecond);

void BM_Attack(benchmark::State& state, const char* spec) {
    const auto img = test_image(512);
    const auto attack = parse_attack(spec);
    for (auto _ : state)
        benchmark::DoNotOptimize(apply_attack(img, attack));
}
BENCHMARK_CAPTURE(BM_Attack, jpeg70, "jpeg:70")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Attack, rotate20, "rotate:20")->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Attack, median3, "median:3")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
