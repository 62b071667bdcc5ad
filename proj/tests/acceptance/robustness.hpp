#pragma once

// Runs the multi-domain robustness scenario in memory and reports mean/std
// F1 over the unseen test domains for every method.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qaens/pipeline.hpp"
#include "qaens/simulator.hpp"
#include "qaens/weighting.hpp"

namespace qaens::robustness {

struct MethodStats {
  double mean = 0.0;
  double stddev = 0.0;  // population std over test domains
};

struct Outcome {
  std::uint64_t seed = 0;
  double alpha = 0.0;
  MethodStats weighted;
  MethodStats simple;
  MethodStats best_single;
  std::string best_model;

  bool beats_best_single() const { return weighted.mean >= best_single.mean; }
  bool beats_simple() const { return weighted.mean >= simple.mean; }
  bool steadier() const { return weighted.stddev <= best_single.stddev; }
  bool holds() const { return beats_best_single() && beats_simple() && steadier(); }
};

inline MethodStats stats(const std::vector<double>& xs) {
  MethodStats s;
  for (double x : xs) s.mean += x;
  s.mean /= static_cast<double>(xs.size());
  for (double x : xs) s.stddev += (x - s.mean) * (x - s.mean);
  s.stddev = std::sqrt(s.stddev / static_cast<double>(xs.size()));
  return s;
}

inline Outcome run(std::uint64_t seed, const ScenarioShape& shape = {}) {
  const auto sc = robustness_scenario(seed, shape);
  const auto corpus = generate_corpus(sc.config);
  const auto preds = generate_predictions(corpus, sc.config);

  std::vector<Dataset> calibration;
  for (const auto& d : sc.calibration_domains) calibration.push_back(corpus.at(d));
  std::vector<CalibrationPredictions> cal_preds;
  for (const auto& m : sc.config.models) {
    CalibrationPredictions cp{m, {}};
    for (const auto& d : sc.calibration_domains) cp.by_dataset.emplace(d, preds.at(m).at(d));
    cal_preds.push_back(std::move(cp));
  }

  EnsembleConfig cfg;
  const auto pool = sample_calibration({calibration, 5000, seed});
  const auto weights = estimate_weights(cal_preds, pool, cfg.weight_metric, cfg.decode);
  const auto sel = select_alpha(cal_preds, pool, AlphaGrid{}, cfg.weight_metric, cfg, seed);
  cfg.alpha = sel.alpha;

  Outcome out;
  out.seed = seed;
  out.alpha = sel.alpha;
  std::vector<double> weighted, simple;
  std::map<std::string, std::vector<double>> single;
  for (const auto& d : sc.test_domains) {
    const auto& ds = corpus.at(d);
    std::vector<const PredictionSet*> ptrs;
    for (const auto& m : sc.config.models) {
      ptrs.push_back(&preds.at(m).at(d));
      single[m].push_back(evaluate_answers(decode_model(ds, preds.at(m).at(d), cfg.decode), ds).f1);
    }
    weighted.push_back(evaluate_answers(decode_weighted(ds, ptrs, weights, cfg), ds).f1);
    simple.push_back(evaluate_answers(decode_simple(ds, ptrs, cfg.decode), ds).f1);
  }
  out.weighted = stats(weighted);
  out.simple = stats(simple);
  out.best_single.mean = -1.0;
  for (const auto& [m, xs] : single) {
    const auto s = stats(xs);
    if (s.mean > out.best_single.mean) {
      out.best_single = s;
      out.best_model = m;
    }
  }
  return out;
}

}  // namespace qaens::robustness
