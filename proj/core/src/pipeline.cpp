#include "qaens/pipeline.hpp"

#include <chrono>

#include "qaens/decoder.hpp"
#include "qaens/errors.hpp"
#include "qaens/metrics.hpp"

namespace qaens {
namespace {

std::vector<const ModelPrediction*> predictions_for(const Example& e,
                                                    std::span<const PredictionSet* const> models) {
  if (models.empty()) fail(ErrorCode::EmptyModelSet, "no base model predictions");
  std::vector<const ModelPrediction*> out;
  out.reserve(models.size());
  for (const auto* set : models) {
    const auto* p = set->find(e.id());
    if (p == nullptr) {
      fail(ErrorCode::MissingPrediction,
           "model '" + set->model_id() + "' has no prediction for '" + e.id() + "'");
    }
    out.push_back(p);
  }
  return out;
}

class StageTimer {
 public:
  explicit StageTimer(std::map<std::string, double>& sink) : sink_(sink) {}

  void lap(const std::string& stage) {
    const auto now = std::chrono::steady_clock::now();
    sink_[stage] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  std::map<std::string, double>& sink_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

}  // namespace

Scores evaluate_answers(const AnswerMap& answers, const Dataset& ds) {
  return {dataset_accuracy(answers, ds, MetricKind::TokenF1),
          dataset_accuracy(answers, ds, MetricKind::ExactMatch)};
}

AnswerMap decode_model(const Dataset& ds, const PredictionSet& preds, const DecodeConfig& cfg) {
  AnswerMap out;
  for (const auto& e : ds.examples()) {
    const auto* p = preds.find(e.id());
    if (p == nullptr) {
      fail(ErrorCode::MissingPrediction,
           "model '" + preds.model_id() + "' has no prediction for '" + e.id() + "'");
    }
    out.emplace(e.id(), decode_to_text(e, *p, cfg));
  }
  return out;
}

AnswerMap decode_weighted(const Dataset& ds, std::span<const PredictionSet* const> models,
                          const WeightVector& w, const EnsembleConfig& cfg) {
  AnswerMap out;
  for (const auto& e : ds.examples()) {
    const auto preds = predictions_for(e, models);
    out.emplace(e.id(), ensemble_predict(e, preds, w, cfg));
  }
  return out;
}

AnswerMap decode_simple(const Dataset& ds, std::span<const PredictionSet* const> models,
                        const DecodeConfig& cfg) {
  AnswerMap out;
  for (const auto& e : ds.examples()) {
    const auto preds = predictions_for(e, models);
    out.emplace(e.id(), simple_ensemble_predict(e, preds, cfg));
  }
  return out;
}

RunReport run_pipeline(const PipelineInputs& in) {
  in.manifest.validate();
  const auto& ids = in.manifest.base_model_ids;
  if (in.calibration_predictions.size() != ids.size() || in.target_predictions.size() != ids.size()) {
    fail(ErrorCode::ConfigMismatch, "prediction sets do not match the manifest's base models");
  }
  for (std::size_t j = 0; j < ids.size(); ++j) {
    if (in.calibration_predictions[j].model_id != ids[j] || in.target_predictions[j].model_id() != ids[j]) {
      fail(ErrorCode::ConfigMismatch, "prediction sets are not in manifest model order");
    }
  }

  RunReport report;
  report.manifest = in.manifest;
  StageTimer timer(report.timing_ms);

  const auto pool = sample_calibration({in.calibration, in.cap, in.manifest.seed});
  report.pool_size = pool.size();
  timer.lap("sample_calibration");

  const auto& base = in.manifest.config;
  report.weights = estimate_weights(in.calibration_predictions, pool, base.weight_metric, base.decode);
  timer.lap("estimate_weights");

  const auto selection =
      select_alpha(in.calibration_predictions, pool, in.grid, base.weight_metric, base, in.manifest.seed);
  report.selected_alpha = selection.alpha;
  report.per_alpha_scores = selection.per_alpha_scores;
  report.manifest.config.alpha = selection.alpha;
  timer.lap("select_alpha");

  std::vector<const PredictionSet*> target;
  for (const auto& set : in.target_predictions) target.push_back(&set);
  const auto& name = in.target.name();
  report.per_dataset_scores[name] =
      evaluate_answers(decode_weighted(in.target, target, report.weights, report.manifest.config), in.target);
  report.simple_ensemble_scores[name] = evaluate_answers(decode_simple(in.target, target, base.decode), in.target);
  for (const auto* set : target) {
    report.per_model_scores[set->model_id()] = evaluate_answers(decode_model(in.target, *set, base.decode), in.target);
  }
  timer.lap("evaluate_target");
  return report;
}

}  // namespace qaens
