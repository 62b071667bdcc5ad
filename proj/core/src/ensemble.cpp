#include "qaens/ensemble.hpp"

#include <cmath>

#include "qaens/decoder.hpp"
#include "qaens/errors.hpp"

namespace qaens {

double WeightVector::at(std::string_view model_id) const {
  const auto it = entries.find(model_id);
  if (it == entries.end()) fail(ErrorCode::MissingWeight, "no weight for model '" + std::string(model_id) + "'");
  return it->second;
}

namespace {

std::size_t common_length(std::span<const SpanDistribution* const> dists) {
  if (dists.empty()) fail(ErrorCode::EmptyModelSet, "no model distributions to combine");
  const std::size_t n = dists.front()->size();
  for (const auto* d : dists) {
    if (d->size() != n || d->end_probs.size() != n) {
      fail(ErrorCode::LengthMismatchAcrossModels,
           "model distributions differ in length (" + std::to_string(n) + " vs " +
               std::to_string(d->size()) + ")");
    }
  }
  return n;
}

// out = sum_j coef[j] * dists[j], accumulated in model order.
SpanDistribution linear_combination(std::span<const SpanDistribution* const> dists,
                                    std::span<const double> coef, std::size_t n) {
  SpanDistribution out{std::vector<double>(n, 0.0), std::vector<double>(n, 0.0)};
  for (std::size_t j = 0; j < dists.size(); ++j) {
    const double c = coef[j];
    const auto& d = *dists[j];
    for (std::size_t t = 0; t < n; ++t) {
      out.start_probs[t] += c * d.start_probs[t];
      out.end_probs[t] += c * d.end_probs[t];
    }
  }
  return out;
}

template <typename T>
std::vector<const T*> addresses(std::span<const T> items) {
  std::vector<const T*> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(&item);
  return out;
}

void check_shared_tokens(const Example& e, std::span<const ModelPrediction* const> preds) {
  if (preds.empty()) fail(ErrorCode::EmptyModelSet, "no model predictions for example '" + e.id() + "'");
  const auto& reference = *preds.front();
  for (const auto* p : preds) {
    if (p->example_id != e.id()) {
      fail(ErrorCode::TokenizationMismatch, "prediction of model '" + p->model_id + "' is for example '" +
                                                p->example_id + "', expected '" + e.id() + "'");
    }
    if (p->tokens != reference.tokens) {
      fail(ErrorCode::TokenizationMismatch, "models '" + reference.model_id + "' and '" + p->model_id +
                                                "' tokenize example '" + e.id() + "' differently");
    }
  }
}

}  // namespace

SpanDistribution combine_weighted(std::span<const SpanDistribution* const> dists,
                                  std::span<const std::string> model_ids, const WeightVector& w,
                                  const EnsembleConfig& cfg) {
  cfg.validate();
  const std::size_t n = common_length(dists);
  if (model_ids.size() != dists.size()) {
    fail(ErrorCode::InvalidArgument, "model id list does not match the number of distributions");
  }
  std::vector<double> coef(dists.size());
  double total = 0.0;
  for (std::size_t j = 0; j < dists.size(); ++j) {
    const double weight = w.at(model_ids[j]);
    if (!(weight >= 0.0) || !std::isfinite(weight)) {
      fail(ErrorCode::InvalidArgument, "weight of model '" + model_ids[j] + "' must be finite and >= 0");
    }
    coef[j] = std::pow(weight, cfg.alpha);
    total += coef[j];
  }
  if (!(total > 0.0)) fail(ErrorCode::AllWeightsZero, "every model weight is zero");
  if (cfg.normalize_weights) {
    // Scaling the coefficients first keeps a lone model's distribution exact (c / c == 1).
    for (double& c : coef) c /= total;
  }
  return linear_combination(dists, coef, n);
}

SpanDistribution combine_weighted(std::span<const SpanDistribution> dists,
                                  std::span<const std::string> model_ids, const WeightVector& w,
                                  const EnsembleConfig& cfg) {
  const auto ptrs = addresses(dists);
  return combine_weighted(std::span<const SpanDistribution* const>(ptrs), model_ids, w, cfg);
}

SpanDistribution combine_mean(std::span<const SpanDistribution* const> dists) {
  const std::size_t n = common_length(dists);
  const std::vector<double> coef(dists.size(), 1.0 / static_cast<double>(dists.size()));
  return linear_combination(dists, coef, n);
}

SpanDistribution combine_mean(std::span<const SpanDistribution> dists) {
  const auto ptrs = addresses(dists);
  return combine_mean(std::span<const SpanDistribution* const>(ptrs));
}

std::string ensemble_predict(const Example& e, std::span<const ModelPrediction* const> preds,
                             const WeightVector& w, const EnsembleConfig& cfg) {
  check_shared_tokens(e, preds);
  std::vector<const SpanDistribution*> dists;
  std::vector<std::string> ids;
  dists.reserve(preds.size());
  ids.reserve(preds.size());
  for (const auto* p : preds) {
    dists.push_back(&p->dist);
    ids.push_back(p->model_id);
  }
  const auto combined = combine_weighted(std::span<const SpanDistribution* const>(dists), ids, w, cfg);
  return span_to_text(e, preds.front()->tokens, decode_span(combined, cfg.decode));
}

std::string ensemble_predict(const Example& e, std::span<const ModelPrediction> preds,
                             const WeightVector& w, const EnsembleConfig& cfg) {
  const auto ptrs = addresses(preds);
  return ensemble_predict(e, std::span<const ModelPrediction* const>(ptrs), w, cfg);
}

std::string simple_ensemble_predict(const Example& e, std::span<const ModelPrediction* const> preds,
                                    const DecodeConfig& cfg) {
  check_shared_tokens(e, preds);
  std::vector<const SpanDistribution*> dists;
  dists.reserve(preds.size());
  for (const auto* p : preds) dists.push_back(&p->dist);
  const auto combined = combine_mean(std::span<const SpanDistribution* const>(dists));
  return span_to_text(e, preds.front()->tokens, decode_span(combined, cfg));
}

}  // namespace qaens
