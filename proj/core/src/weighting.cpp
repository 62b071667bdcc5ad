#include "qaens/weighting.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qaens/decoder.hpp"
#include "qaens/errors.hpp"
#include "qaens/metrics.hpp"
#include "qaens/random.hpp"

namespace qaens {

const ModelPrediction* CalibrationPredictions::find(const PooledExample& item) const {
  const auto it = by_dataset.find(item.dataset_name);
  return it == by_dataset.end() ? nullptr : it->second.find(item.example.id());
}

void AlphaGrid::validate() const {
  if (values.empty()) fail(ErrorCode::InvalidArgument, "alpha grid is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      fail(ErrorCode::InvalidArgument, "alpha grid values must be finite and positive");
    }
    if (i > 0 && !(values[i - 1] < values[i])) {
      fail(ErrorCode::InvalidArgument, "alpha grid must be strictly ascending");
    }
  }
  if (folds < 2) fail(ErrorCode::InvalidArgument, "need at least 2 folds");
}

std::vector<PooledExample> sample_calibration(const CalibrationBundle& bundle) {
  if (bundle.datasets.empty()) fail(ErrorCode::InvalidArgument, "no calibration datasets");
  if (bundle.per_dataset_cap && *bundle.per_dataset_cap < 1) {
    fail(ErrorCode::InvalidArgument, "per-dataset cap must be >= 1");
  }
  std::set<std::string_view> names;
  std::vector<PooledExample> pool;
  for (const auto& ds : bundle.datasets) {
    if (ds.empty()) fail(ErrorCode::EmptyDataset, "calibration dataset '" + ds.name() + "' is empty");
    if (!names.insert(ds.name()).second) {
      fail(ErrorCode::InvalidArgument, "calibration dataset '" + ds.name() + "' given twice");
    }
    const std::size_t take = std::min(bundle.per_dataset_cap.value_or(ds.size()), ds.size());
    Rng rng(derive_seed(bundle.seed, ds.name()));
    for (std::size_t idx : sample_without_replacement(ds.size(), take, rng)) {
      pool.push_back({ds.name(), ds.examples()[idx]});
    }
  }
  std::sort(pool.begin(), pool.end(), [](const PooledExample& a, const PooledExample& b) {
    if (a.dataset_name != b.dataset_name) return a.dataset_name < b.dataset_name;
    return a.example.id() < b.example.id();
  });
  return pool;
}

namespace {

// lookup[i][j]: model j's prediction on pool item i.
std::vector<std::vector<const ModelPrediction*>> index_predictions(
    std::span<const CalibrationPredictions> models, std::span<const PooledExample> pool) {
  if (models.empty()) fail(ErrorCode::EmptyModelSet, "no base models");
  std::vector<std::vector<const ModelPrediction*>> lookup(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    lookup[i].reserve(models.size());
    for (const auto& model : models) {
      const auto* p = model.find(pool[i]);
      if (p == nullptr) {
        fail(ErrorCode::MissingPrediction, "model '" + model.model_id + "' has no prediction for '" +
                                               pool[i].dataset_name + "/" + pool[i].example.id() + "'");
      }
      lookup[i].push_back(p);
    }
  }
  return lookup;
}

// scores[j][i]: model j's metric on pool item i.
std::vector<std::vector<double>> score_table(
    const std::vector<std::vector<const ModelPrediction*>>& lookup, std::span<const PooledExample> pool,
    std::size_t n_models, MetricKind metric, const DecodeConfig& cfg) {
  std::vector<std::vector<double>> scores(n_models, std::vector<double>(pool.size()));
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const Example& e = pool[i].example;
    for (std::size_t j = 0; j < n_models; ++j) {
      scores[j][i] = score_example(decode_to_text(e, *lookup[i][j], cfg), e.gold_answers(), metric);
    }
  }
  return scores;
}

}  // namespace

WeightVector estimate_weights(std::span<const CalibrationPredictions> models,
                              std::span<const PooledExample> pool, MetricKind metric,
                              const DecodeConfig& cfg) {
  if (pool.empty()) fail(ErrorCode::EmptyDataset, "calibration pool is empty");
  const auto lookup = index_predictions(models, pool);
  const auto scores = score_table(lookup, pool, models.size(), metric, cfg);
  WeightVector w;
  for (std::size_t j = 0; j < models.size(); ++j) {
    double total = 0.0;
    for (double s : scores[j]) total += s;
    if (!w.entries.emplace(models[j].model_id, total / static_cast<double>(pool.size())).second) {
      fail(ErrorCode::InvalidArgument, "duplicate base model id '" + models[j].model_id + "'");
    }
  }
  return w;
}

std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t folds, std::uint64_t seed) {
  if (folds < 2) fail(ErrorCode::InvalidArgument, "need at least 2 folds");
  if (n < folds) {
    fail(ErrorCode::PoolTooSmall, "pool of " + std::to_string(n) + " examples cannot fill " +
                                      std::to_string(folds) + " folds");
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  Rng rng(derive_seed(seed, "folds"));
  rng.shuffle(std::span<std::size_t>(order));
  std::vector<std::vector<std::size_t>> out(folds);
  for (std::size_t f = 0; f < folds; ++f) {
    const auto begin = order.begin() + static_cast<std::ptrdiff_t>(f * n / folds);
    const auto end = order.begin() + static_cast<std::ptrdiff_t>((f + 1) * n / folds);
    out[f].assign(begin, end);
    std::sort(out[f].begin(), out[f].end());
  }
  return out;
}

AlphaSelection select_alpha(std::span<const CalibrationPredictions> models,
                            std::span<const PooledExample> pool, const AlphaGrid& grid,
                            MetricKind metric, const EnsembleConfig& base, std::uint64_t seed) {
  grid.validate();
  base.decode.validate();
  const auto folds = make_folds(pool.size(), grid.folds, seed);
  const auto lookup = index_predictions(models, pool);
  const auto scores = score_table(lookup, pool, models.size(), metric, base.decode);

  std::vector<std::string> ids;
  for (const auto& m : models) ids.push_back(m.model_id);

  // Weights depend only on the training side of each fold, not on alpha.
  std::vector<WeightVector> fold_weights(folds.size());
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<bool> held_out(pool.size(), false);
    for (std::size_t i : folds[f]) held_out[i] = true;
    const auto train_size = static_cast<double>(pool.size() - folds[f].size());
    for (std::size_t j = 0; j < models.size(); ++j) {
      double total = 0.0;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (!held_out[i]) total += scores[j][i];
      }
      fold_weights[f].entries[ids[j]] = total / train_size;
    }
  }

  AlphaSelection result;
  bool first = true;
  for (double alpha : grid.values) {
    EnsembleConfig cfg = base;
    cfg.alpha = alpha;
    double sum_of_fold_means = 0.0;
    for (std::size_t f = 0; f < folds.size(); ++f) {
      double fold_total = 0.0;
      for (std::size_t i : folds[f]) {
        const Example& e = pool[i].example;
        const auto answer = ensemble_predict(e, lookup[i], fold_weights[f], cfg);
        fold_total += score_example(answer, e.gold_answers(), metric);
      }
      sum_of_fold_means += fold_total / static_cast<double>(folds[f].size());
    }
    const double mean = sum_of_fold_means / static_cast<double>(folds.size());
    result.per_alpha_scores.emplace_back(alpha, mean);
    if (first || mean > result.score) {
      result.alpha = alpha;
      result.score = mean;
      first = false;
    }
  }
  return result;
}

}  // namespace qaens
