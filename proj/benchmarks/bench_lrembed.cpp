#include <benchmark/benchmark.h>

#include <random>

#include "lrembed/embed.hpp"
#include "lrembed/oracle.hpp"
#include "lrembed/realize.hpp"

using namespace lrembed;

static void BM_EnumerateLr(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  // beta = staircase, alpha = gamma = half staircase
  std::vector<int> stair;
  for (int k = n; k > 0; --k) stair.push_back(k);
  const Partition beta(stair);
  std::vector<int> half;
  for (int k = n - 1; k > 0; k -= 2) half.push_back(k);
  const Partition a(half);
  const auto gammas = partitions_of(beta.weight() - a.weight());
  for (auto _ : state) {
    std::size_t total = 0;
    for (const auto& g : gammas) total += lr_coefficient({a, beta, g});
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateLr)->DenseRange(3, 5);

static void BM_Census(benchmark::State& state) {
  const PModule b(2, Partition(std::vector<int>(static_cast<std::size_t>(state.range(0)), 1)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_submodules(b).entries.size());
}
BENCHMARK(BM_Census)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_RealizeFull(benchmark::State& state) {
  const auto seqs = enumerate_lr({{3, 2, 1}, {4, 3, 2, 1}, {2, 1, 1}});
  for (auto _ : state) {
    for (const auto& s : seqs) benchmark::DoNotOptimize(realize_full(s, state.range(0)).a);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(seqs.size()));
}
BENCHMARK(BM_RealizeFull)->Arg(2)->Arg(3)->Arg(101);

static void BM_Decompose(benchmark::State& state) {
  SummandMultiset m;
  for (int k = 0; k < state.range(0); ++k) {
    m.add(Summand::Q(4 + k % 3, 1 + k % 2));
    m.add(Summand::P(3, k % 3));
  }
  const Embedding e = direct_sum_of_models(m, 2);
  std::mt19937_64 rng(9);
  const Embedding moved(random_automorphism(e.ambient(), rng).apply(e.sub));
  for (auto _ : state) benchmark::DoNotOptimize(decompose(moved));
}
BENCHMARK(BM_Decompose)->DenseRange(1, 4);

static void BM_Isomorphic(benchmark::State& state) {
  const PModule b(2, {2, 2, 1, 1});
  const auto census = enumerate_submodules(b);
  std::mt19937_64 rng(4);
  for (auto _ : state) {
    const auto& x = census.entries[rng() % census.entries.size()];
    const auto& y = census.entries[rng() % census.entries.size()];
    benchmark::DoNotOptimize(embeddings_isomorphic(Embedding(x.sub), Embedding(y.sub)));
  }
}
BENCHMARK(BM_Isomorphic);

static void BM_CrossValidate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(2, static_cast<int>(state.range(0))).ok());
}
BENCHMARK(BM_CrossValidate)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
