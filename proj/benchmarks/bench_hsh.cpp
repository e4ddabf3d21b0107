#include <benchmark/benchmark.h>

#include <random>

#include "hsh/catalog.hpp"
#include "hsh/coefficients.hpp"
#include "hsh/quadrature.hpp"
#include "hsh/tree.hpp"
#include "hsh/verify.hpp"

namespace {

const hsh::ParamTree& six_tree()
{
    static const auto tree = hsh::ParamTree::split(hsh::ParamTree::leaf3(), hsh::ParamTree::leaf3());
    return tree;
}

void BM_SplitWeight(benchmark::State& state)
{
    const int j = static_cast<int>(state.range(0));
    const hsh::SplitSignature sig{6, 3, j, 1, 1};
    double theta = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsh::split_weight(sig, theta));
        theta += 1e-6;
    }
}
BENCHMARK(BM_SplitWeight)->Arg(4)->Arg(12)->Arg(24);

void BM_TreeEvaluate(benchmark::State& state)
{
    const int j = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const auto indices = hsh::enumerate_indices(six_tree(), j);
    const auto point = hsh::random_point(six_tree(), rng);
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsh::evaluate(six_tree(), indices[i], point));
        i = (i + 1) % indices.size();
    }
}
BENCHMARK(BM_TreeEvaluate)->Arg(2)->Arg(6);

void BM_WignerD(benchmark::State& state)
{
    const int two_j = static_cast<int>(state.range(0));
    double beta = 0.4;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hsh::catalog::wigner_d(two_j, two_j % 2, two_j % 2, beta));
        beta += 1e-6;
    }
}
BENCHMARK(BM_WignerD)->Arg(2)->Arg(8)->Arg(20);

void BM_GramD6(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    const hsh::QuadratureGrid grid(six_tree(), order);
    for (auto _ : state)
        benchmark::DoNotOptimize(hsh::gram_matrix(six_tree(), 3, grid));
}
BENCHMARK(BM_GramD6)->Arg(16)->Arg(48)->Unit(benchmark::kMillisecond);

void BM_ZeroVector(benchmark::State& state)
{
    std::mt19937_64 rng(11);
    const auto seed = hsh::ZeroLengthSeed::random(3, 3, rng);
    const hsh::QuadratureGrid grid(six_tree(), static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hsh::zero_vector_check(six_tree(), 4, seed, grid));
}
BENCHMARK(BM_ZeroVector)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

} // namespace

int main(int argc, char** argv)
{
    ::benchmark::Initialize(&argc, argv);
    if (::benchmark::ReportUnrecognizedArguments(argc, argv))
        return 1;
    ::benchmark::RunSpecifiedBenchmarks();
    return 0;
}
