#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "qaens/decoder.hpp"
#include "qaens/ensemble.hpp"
#include "qaens/metrics.hpp"
#include "qaens/random.hpp"
#include "qaens/simulator.hpp"
#include "qaens/weighting.hpp"

using namespace qaens;

namespace {

std::vector<double> random_probs(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) total += (x = rng.uniform01() + 1e-6);
  for (auto& x : v) x /= total;
  return v;
}

void BM_DecodeSpan(benchmark::State& state) {
  const auto t = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const SpanDistribution d{random_probs(t, rng), random_probs(t, rng)};
  const DecodeConfig cfg{30};
  for (auto _ : state) benchmark::DoNotOptimize(decode_span(d, cfg));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_DecodeSpan)->Arg(64)->Arg(256)->Arg(1024);

void BM_CombineWeighted(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t t = 256;
  Rng rng(2);
  std::vector<SpanDistribution> dists;
  std::vector<std::string> ids;
  WeightVector w;
  for (std::size_t j = 0; j < n; ++j) {
    dists.push_back({random_probs(t, rng), random_probs(t, rng)});
    ids.push_back("m" + std::to_string(j));
    w.entries[ids.back()] = 0.2 + 0.5 * rng.uniform01();
  }
  EnsembleConfig cfg;
  cfg.alpha = 3;
  for (auto _ : state) benchmark::DoNotOptimize(combine_weighted(dists, ids, w, cfg));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CombineWeighted)->Arg(2)->Arg(5)->Arg(10);

void BM_TokenF1(benchmark::State& state) {
  const std::string pred = "The quick brown fox, jumped over a lazy dog!";
  const std::string gold = "quick brown foxes jumped over the lazy dogs";
  for (auto _ : state) benchmark::DoNotOptimize(token_f1(pred, gold));
}
BENCHMARK(BM_TokenF1);

void BM_SelectAlpha(benchmark::State& state) {
  SimConfig cfg;
  cfg.seed = 3;
  cfg.skill.noise_seed = 4;
  const auto per_domain = static_cast<std::size_t>(state.range(0));
  cfg.domains = {{"c1", per_domain}, {"c2", per_domain}, {"c3", per_domain}};
  cfg.models = {"m1", "m2", "m3", "m4", "m5"};
  for (std::size_t j = 0; j < cfg.models.size(); ++j) {
    for (const auto& d : cfg.domains) cfg.skill.skills[cfg.models[j]][d.name] = 0.2 + 0.1 * static_cast<double>(j);
  }
  const auto corpus = generate_corpus(cfg);
  const auto preds = generate_predictions(corpus, cfg);
  std::vector<CalibrationPredictions> models;
  for (const auto& m : cfg.models) {
    CalibrationPredictions cp{m, {}};
    for (const auto& [d, set] : preds.at(m)) cp.by_dataset.emplace(d, set);
    models.push_back(std::move(cp));
  }
  std::vector<Dataset> cal;
  for (const auto& [name, ds] : corpus) cal.push_back(ds);
  const auto pool = sample_calibration({cal, 5000, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(select_alpha(models, pool, AlphaGrid{}, MetricKind::TokenF1, EnsembleConfig{}, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(pool.size()));
}
BENCHMARK(BM_SelectAlpha)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
