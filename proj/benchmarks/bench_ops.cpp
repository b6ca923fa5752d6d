#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "symrig/algebra.hpp"
#include "symrig/enumeration.hpp"
#include "symrig/realization.hpp"
#include "symrig/rng.hpp"
#include "symrig/sparsity.hpp"

using namespace symrig;

namespace {

ColoredGraph member_instance(SparsityClass cls, int n, int k, GroupKind kind) {
    std::mt19937_64 rng(mix_seed(12345, static_cast<std::uint64_t>(n) * 31 + k));
    auto g = random_class_member(rng, cls, n, k, kind, 200000);
    if (!g) throw std::runtime_error("no benchmark instance found");
    return *g;
}

}  // namespace

static void BM_MatroidUnionReflection22(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ColoredGraph g =
        member_instance(SparsityClass::Reflection22, n, 2, GroupKind::Reflection);
    for (auto _ : state)
        benchmark::DoNotOptimize(matroid_union_decompose(g, SparsityClass::Reflection22));
}
BENCHMARK(BM_MatroidUnionReflection22)->ArgName("n")->DenseRange(2, 10, 2);

static void BM_BruteforceSparsity(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ColoredGraph g =
        member_instance(SparsityClass::Reflection22, n, 2, GroupKind::Reflection);
    for (auto _ : state)
        benchmark::DoNotOptimize(is_sparse_bruteforce(g, SparsityClass::Reflection22));
}
BENCHMARK(BM_BruteforceSparsity)->ArgName("n")->DenseRange(2, 8, 2);

static void BM_GenericRankDirectionNet(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    std::mt19937_64 rng(7);
    const ColoredGraph g = random_connected_colored_graph(rng, n, 2 * n - 1, 3, GroupKind::Rotation);
    for (auto _ : state)
        benchmark::DoNotOptimize(generic_rank(g, SystemKind::DirectionNet, 3, 1));
}
BENCHMARK(BM_GenericRankDirectionNet)->ArgName("n")->DenseRange(2, 12, 2);

static void BM_ConeCollapseDirections(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ColoredGraph g = member_instance(SparsityClass::Cone22, n, 4, GroupKind::Rotation);
    for (auto _ : state) benchmark::DoNotOptimize(cone_collapse_directions(g, 1));
}
BENCHMARK(BM_ConeCollapseDirections)->ArgName("n")->DenseRange(2, 5, 1);

static void BM_SpecialPair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ColoredGraph g =
        member_instance(SparsityClass::ReflectionLaman, n, 2, GroupKind::Reflection);
    for (auto _ : state) benchmark::DoNotOptimize(construct_special_pair(g, 1));
}
BENCHMARK(BM_SpecialPair)->ArgName("n")->DenseRange(2, 6, 1);

static void BM_DecideRigidityRotation(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const ColoredGraph g = member_instance(SparsityClass::ConeLaman, n, 3, GroupKind::Rotation);
    for (auto _ : state) benchmark::DoNotOptimize(decide_rigidity(g));
}
BENCHMARK(BM_DecideRigidityRotation)->ArgName("n")->DenseRange(2, 5, 1);

BENCHMARK_MAIN();
