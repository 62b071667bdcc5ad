#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qaens/config.hpp"
#include "qaens/ensemble.hpp"
#include "qaens/types.hpp"
#include "qaens/weighting.hpp"

namespace qaens {

using AnswerMap = std::map<std::string, std::string, std::less<>>;

struct Scores {
  double f1 = 0.0;
  double em = 0.0;

  friend bool operator==(const Scores&, const Scores&) = default;
};

Scores evaluate_answers(const AnswerMap& answers, const Dataset& ds);

/// Decoded answer for every example of `ds`; throws MissingPrediction.
AnswerMap decode_model(const Dataset& ds, const PredictionSet& preds, const DecodeConfig& cfg);
AnswerMap decode_weighted(const Dataset& ds, std::span<const PredictionSet* const> models,
                          const WeightVector& w, const EnsembleConfig& cfg);
AnswerMap decode_simple(const Dataset& ds, std::span<const PredictionSet* const> models,
                        const DecodeConfig& cfg);

struct RunReport {
  RunManifest manifest;  // manifest.config.alpha holds the selected alpha
  WeightVector weights;
  double selected_alpha = 1.0;
  std::vector<std::pair<double, double>> per_alpha_scores;
  std::size_t pool_size = 0;
  std::map<std::string, Scores> per_dataset_scores;      // weighted ensemble
  std::map<std::string, Scores> simple_ensemble_scores;  // arithmetic-mean baseline
  std::map<std::string, Scores> per_model_scores;        // on the target dataset
  std::map<std::string, double> timing_ms;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

struct PipelineInputs {
  /// Model order, calibration names, target name, seed and the base config.
  RunManifest manifest;
  std::vector<Dataset> calibration;
  /// One entry per base model, in manifest order.
  std::vector<CalibrationPredictions> calibration_predictions;
  Dataset target;
  std::vector<PredictionSet> target_predictions;
  std::optional<std::size_t> cap = 5000;
  AlphaGrid grid;
};

/// Calibration sampling, weight estimation, alpha selection, then weighted
/// and simple ensembles plus every base model on the target dataset.
RunReport run_pipeline(const PipelineInputs& in);

}  // namespace qaens
