#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qaens/config.hpp"
#include "qaens/types.hpp"

namespace qaens {

/// Model id -> weight. Ordered so serialization and iteration are stable.
struct WeightVector {
  std::map<std::string, double, std::less<>> entries;

  double at(std::string_view model_id) const;  // throws MissingWeight
  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

/// Exponentiated weighted sum  y[t] = sum_j w_j^alpha * y_j[t]  over start and
/// end vectors, divided by sum_j w_j^alpha when cfg.normalize_weights is set.
/// `model_ids[j]` names the weight of `dists[j]`; summation follows that order.
SpanDistribution combine_weighted(std::span<const SpanDistribution* const> dists,
                                  std::span<const std::string> model_ids, const WeightVector& w,
                                  const EnsembleConfig& cfg);
SpanDistribution combine_weighted(std::span<const SpanDistribution> dists,
                                  std::span<const std::string> model_ids, const WeightVector& w,
                                  const EnsembleConfig& cfg);

/// Elementwise arithmetic mean (the unweighted baseline).
SpanDistribution combine_mean(std::span<const SpanDistribution* const> dists);
SpanDistribution combine_mean(std::span<const SpanDistribution> dists);

/// Combines one prediction per base model for a single example and decodes
/// the answer text. Every prediction must share the same tokenization.
/// Model order is the order of `preds`.
std::string ensemble_predict(const Example& e, std::span<const ModelPrediction* const> preds,
                             const WeightVector& w, const EnsembleConfig& cfg);
std::string ensemble_predict(const Example& e, std::span<const ModelPrediction> preds,
                             const WeightVector& w, const EnsembleConfig& cfg);

/// Baseline counterpart of ensemble_predict using combine_mean.
std::string simple_ensemble_predict(const Example& e, std::span<const ModelPrediction* const> preds,
                                    const DecodeConfig& cfg);

}  // namespace qaens
