#include <benchmark/benchmark.h>

#include <random>

#include "armine/apriori.hpp"
#include "armine/measures.hpp"
#include "armine/rules.hpp"

namespace {

armine::TransactionDatabase synthetic(std::size_t items, std::size_t rows, double density) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution coin(density);
  armine::ItemDictionary dict;
  for (std::size_t i = 0; i < items; ++i) dict.intern("item" + std::to_string(i));
  std::vector<armine::Transaction> transactions;
  for (std::size_t t = 0; t < rows; ++t) {
    std::vector<armine::ItemId> ids;
    for (std::size_t i = 0; i < items; ++i) {
      if (coin(rng)) ids.push_back(static_cast<armine::ItemId>(i));
    }
    transactions.emplace_back(std::move(ids));
  }
  return armine::TransactionDatabase(std::move(dict), std::move(transactions));
}

void BM_SupportCount(benchmark::State& state) {
  const auto db = synthetic(32, static_cast<std::size_t>(state.range(0)), 0.3);
  const armine::Itemset s{1, 5, 9};
  for (auto _ : state) benchmark::DoNotOptimize(db.support_count(s));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SupportCount)->Range(1 << 10, 1 << 20);

void BM_Apriori(benchmark::State& state) {
  const auto db = synthetic(40, 20000, 0.25);
  armine::MiningConfig cfg;
  cfg.min_support = armine::Threshold::parse("0.02");
  cfg.num_workers = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(armine::apriori(db, cfg));
}
BENCHMARK(BM_Apriori)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_GenerateRules(benchmark::State& state) {
  const auto db = synthetic(30, 5000, 0.3);
  armine::MiningConfig cfg;
  cfg.min_support = armine::Threshold::parse("0.01");
  cfg.min_confidence = armine::Threshold::parse("0.2");
  const auto frequent = armine::apriori(db, cfg);
  for (auto _ : state) benchmark::DoNotOptimize(armine::generate_rules(frequent, cfg, db));
}
BENCHMARK(BM_GenerateRules)->Unit(benchmark::kMillisecond);

void BM_AllMeasures(benchmark::State& state) {
  const armine::ContingencyTable ct{36, 6, 14, 4};
  for (auto _ : state) {
    for (const auto& m : armine::all_measures()) {
      benchmark::DoNotOptimize(armine::evaluate_extended(m.id, ct));
    }
  }
}
BENCHMARK(BM_AllMeasures);

}  // namespace

BENCHMARK_MAIN();
