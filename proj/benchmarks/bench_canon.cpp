#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <vector>

#include "circlecanon/chord.hpp"
#include "circlecanon/graph.hpp"
#include "circlecanon/pipeline.hpp"
#include "circlecanon/split.hpp"
#include "circlecanon/treecanon.hpp"

namespace {

using namespace circlecanon;

std::vector<Encoding> random_sequences(int count, int max_len, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> val_dist(0, 7);
    std::vector<Encoding> out(static_cast<std::size_t>(count));
    for (auto& s : out) {
        s.resize(static_cast<std::size_t>(len_dist(rng)));
        for (int& v : s) v = val_dist(rng);
    }
    return out;
}

void BM_lex_sort_sequences(benchmark::State& state) {
    auto seqs = random_sequences(static_cast<int>(state.range(0)), 16, 7);
    for (auto _ : state) benchmark::DoNotOptimize(lex_sort_sequences(seqs));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_lex_sort_sequences)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oN);

void BM_min_rotation(benchmark::State& state) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> val_dist(0, 7);
    std::vector<int> w(static_cast<std::size_t>(state.range(0)));
    for (int& v : w) v = val_dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(min_rotation(w));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_min_rotation)->RangeMultiplier(4)->Range(1 << 8, 1 << 18)->Complexity(benchmark::oN);

void BM_count_crossings(benchmark::State& state) {
    CircleRep r = random_rep(static_cast<int>(state.range(0)), 23);
    for (auto _ : state) benchmark::DoNotOptimize(count_crossings(r));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_count_crossings)->RangeMultiplier(4)->Range(1 << 8, 1 << 16)->Complexity(benchmark::oNLogN);

// The canonization phase alone: a single prime node with a precomputed tree
// and representation (the regime of the scaling acceptance check).
void BM_canon_tree_prime(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RootedTree rt = center_root(single_prime_tree(n));
    std::map<int, CircleRep> reps{{rt.root, random_rep(n, 41)}};
    for (auto _ : state) benchmark::DoNotOptimize(canon_tree(rt, reps, false));
    state.SetComplexityN(n);
}
BENCHMARK(BM_canon_tree_prime)->RangeMultiplier(2)->Range(1 << 12, 1 << 16)->Complexity(benchmark::oN);

// End-to-end canonization of a random diagram (almost surely prime, so this
// is dominated by the split search certifying primality).
void BM_canon_graph(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    CanonInput in = CanonInput::from_rep(random_rep(n, 57));
    for (auto _ : state) benchmark::DoNotOptimize(canon_graph(in));
    state.SetComplexityN(n);
}
BENCHMARK(BM_canon_graph)->RangeMultiplier(2)->Range(16, 256);

}  // namespace

BENCHMARK_MAIN();
