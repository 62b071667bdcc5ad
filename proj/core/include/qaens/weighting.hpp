#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qaens/config.hpp"
#include "qaens/ensemble.hpp"
#include "qaens/types.hpp"

namespace qaens {

struct CalibrationBundle {
  std::vector<Dataset> datasets;
  std::optional<std::size_t> per_dataset_cap = 5000;
  std::uint64_t seed = 0;
};

struct PooledExample {
  std::string dataset_name;
  Example example;
};

/// One base model's predictions over the calibration datasets, keyed by
/// dataset name (pooled examples from different datasets may share ids).
struct CalibrationPredictions {
  std::string model_id;
  std::map<std::string, PredictionSet, std::less<>> by_dataset;

  const ModelPrediction* find(const PooledExample& item) const;
};

struct AlphaGrid {
  std::vector<double> values{1.0, 2.0, 3.0, 4.0};
  std::size_t folds = 5;

  void validate() const;
};

struct AlphaSelection {
  double alpha = 1.0;
  double score = 0.0;
  /// Mean out-of-fold score for every grid value, in grid order.
  std::vector<std::pair<double, double>> per_alpha_scores;
};

/// Draws min(cap, size) examples without replacement from every dataset, each
/// with its own generator seeded by (seed, dataset name), and pools them
/// ordered by (dataset name, example id). Throws EmptyDataset.
std::vector<PooledExample> sample_calibration(const CalibrationBundle& bundle);

/// w_j = mean over the pool of model j's per-example score (micro-average).
/// Throws MissingPrediction.
WeightVector estimate_weights(std::span<const CalibrationPredictions> models,
                              std::span<const PooledExample> pool, MetricKind metric,
                              const DecodeConfig& cfg);

/// Seeded shuffle of [0, n) cut into `folds` contiguous chunks whose sizes
/// differ by at most one; each fold is returned sorted ascending.
std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t folds, std::uint64_t seed);

/// k-fold out-of-fold grid search. For each alpha and fold, weights are
/// estimated on the other folds and the weighted ensemble is scored on the
/// held-out fold; the alpha with the best mean fold score wins, ties going to
/// the smallest alpha. Throws PoolTooSmall.
AlphaSelection select_alpha(std::span<const CalibrationPredictions> models,
                            std::span<const PooledExample> pool, const AlphaGrid& grid,
                            MetricKind metric, const EnsembleConfig& base, std::uint64_t seed);

}  // namespace qaens
