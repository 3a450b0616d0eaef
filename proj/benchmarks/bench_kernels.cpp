#include "rsbandit/linear/episodic_memory.hpp"
#include "rsbandit/linear/linear_stats.hpp"
#include "rsbandit/neural/policies.hpp"
#include "rsbandit/numeric/adam.hpp"
#include "rsbandit/numeric/mlp.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rsb;

namespace {

Vector random_vector(std::size_t n, Rng& rng) {
    std::normal_distribution<double> g;
    Vector v(static_cast<Eigen::Index>(n));
    for (auto& x : v) x = g(rng);
    return v;
}

void BM_MlpTrainStep(benchmark::State& state) {
    const auto batch_size = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    MlpParams params = MlpParams::he_normal({64, 128, 2, 4}, rng);
    AdamState adam(params);
    std::vector<Sample> samples;
    for (std::size_t i = 0; i < batch_size; ++i) samples.push_back({random_vector(64, rng), i % 4, 0.5});
    const Batch batch = Batch::from_samples(samples);
    for (auto _ : state) benchmark::DoNotOptimize(mlp_train_step(params, adam, batch));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(batch_size));
}
BENCHMARK(BM_MlpTrainStep)->Arg(64)->Arg(1024);

void BM_MlpForward(benchmark::State& state) {
    Rng rng(2);
    const MlpParams params = MlpParams::he_normal({64, 128, 2, 4}, rng);
    const Vector x = random_vector(64, rng);
    for (auto _ : state) benchmark::DoNotOptimize(mlp_forward(params, x));
}
BENCHMARK(BM_MlpForward);

void BM_KnnReliability(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    EpisodicMemory memory(10000, 4, 64);
    for (std::size_t i = 0; i < size; ++i) memory.append(random_vector(64, rng), i % 4);
    const Vector x = random_vector(64, rng);
    for (auto _ : state) benchmark::DoNotOptimize(knn_reliability(x, memory, 50, 1e-4));
}
BENCHMARK(BM_KnnReliability)->Arg(1000)->Arg(10000);

void BM_LinearRefresh(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    Rng rng(4);
    LinearStats stats(4, dim);
    for (std::size_t i = 0; i < 200; ++i) stats.update(random_vector(dim, rng), i % 4, 0.5);
    for (auto _ : state) stats.refresh();
}
BENCHMARK(BM_LinearRefresh)->Arg(9)->Arg(64);

void BM_LinearUpdate(benchmark::State& state) {
    Rng rng(5);
    LinearStats stats(4, 64);
    const Vector x = random_vector(64, rng);
    for (auto _ : state) stats.update(x, 0, 0.5);
}
BENCHMARK(BM_LinearUpdate);

void BM_NeuralUcbSelect(benchmark::State& state) {
    Rng rng(6);
    NeuralUcbPolicy policy(4, 64, NeuralUcbParams{}, NeuralConfig{}, 6);
    const Vector x = random_vector(64, rng);
    for (auto _ : state) benchmark::DoNotOptimize(policy.select(x));
}
BENCHMARK(BM_NeuralUcbSelect);

}  // namespace

BENCHMARK_MAIN();
