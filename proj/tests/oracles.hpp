#pragma once

// Independent reference implementations used only by tests. They share no
// code path with the library beyond the data types and the metric functions.

#include <cmath>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qaens/metrics.hpp"
#include "qaens/random.hpp"
#include "qaens/types.hpp"
#include "qaens/weighting.hpp"

namespace qaens::oracle {

/// Exhaustive decode: enumerate every valid (i, j) in lexicographic order and
/// keep the first strict maximum.
inline Span brute_force_decode(const std::vector<double>& start, const std::vector<double>& end,
                               std::size_t max_len) {
  bool have = false;
  Span best{};
  double best_score = 0.0;
  for (std::size_t i = 0; i < start.size(); ++i) {
    for (std::size_t j = 0; j < end.size(); ++j) {
      if (j < i || j - i + 1 > max_len) continue;
      const double s = start[i] * end[j];
      if (!have || s > best_score) {
        have = true;
        best = {i, j};
        best_score = s;
      }
    }
  }
  return best;
}

inline std::string span_text(const Example& e, const std::vector<Token>& tokens, Span s) {
  return std::string(e.context_slice(tokens[s.start].char_start, tokens[s.end].char_end));
}

/// Direct transcription of the weighted sum, normalized by the weight total.
inline std::vector<double> weighted_sum(const std::vector<const std::vector<double>*>& vecs,
                                        const std::vector<double>& weights, double alpha) {
  std::vector<double> out(vecs.front()->size(), 0.0);
  double norm = 0.0;
  for (double w : weights) norm += std::pow(w, alpha);
  for (std::size_t t = 0; t < out.size(); ++t) {
    double acc = 0.0;
    for (std::size_t j = 0; j < vecs.size(); ++j) acc += std::pow(weights[j], alpha) * (*vecs[j])[t];
    out[t] = acc / norm;
  }
  return out;
}

struct AlphaOracleResult {
  std::map<double, double> per_alpha;
  double best_alpha = 0.0;
};

/// Recomputes every fold's weights and held-out ensemble scores from scratch.
inline AlphaOracleResult brute_force_alpha(const std::vector<CalibrationPredictions>& models,
                                           const std::vector<PooledExample>& pool,
                                           const std::vector<double>& grid,
                                           const std::vector<std::vector<std::size_t>>& folds,
                                           MetricKind metric, std::size_t max_len) {
  AlphaOracleResult res;
  for (double alpha : grid) {
    double fold_sum = 0.0;
    for (const auto& fold : folds) {
      std::vector<bool> held(pool.size(), false);
      for (std::size_t i : fold) held[i] = true;
      std::vector<double> weights;
      for (const auto& m : models) {
        double total = 0.0;
        std::size_t count = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (held[i]) continue;
          const auto* p = m.find(pool[i]);
          const Span s = brute_force_decode(p->dist.start_probs, p->dist.end_probs, max_len);
          total += score_example(span_text(pool[i].example, p->tokens, s), pool[i].example.gold_answers(), metric);
          ++count;
        }
        weights.push_back(total / static_cast<double>(count));
      }
      double score_total = 0.0;
      for (std::size_t i : fold) {
        std::vector<const std::vector<double>*> starts, ends;
        const ModelPrediction* first = nullptr;
        for (const auto& m : models) {
          const auto* p = m.find(pool[i]);
          if (first == nullptr) first = p;
          starts.push_back(&p->dist.start_probs);
          ends.push_back(&p->dist.end_probs);
        }
        const Span s = brute_force_decode(weighted_sum(starts, weights, alpha),
                                          weighted_sum(ends, weights, alpha), max_len);
        score_total += score_example(span_text(pool[i].example, first->tokens, s),
                                     pool[i].example.gold_answers(), metric);
      }
      fold_sum += score_total / static_cast<double>(fold.size());
    }
    res.per_alpha[alpha] = fold_sum / static_cast<double>(folds.size());
  }
  double best = -1.0;
  for (double alpha : grid) {
    if (res.per_alpha[alpha] > best) {
      best = res.per_alpha[alpha];
      res.best_alpha = alpha;
    }
  }
  return res;
}

/// Random distribution with strictly positive entries summing to one.
inline std::vector<double> random_distribution(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  double total = 0.0;
  for (auto& x : v) {
    x = rng.uniform01() + 1e-3;
    total += x;
  }
  for (auto& x : v) x /= total;
  return v;
}

}  // namespace qaens::oracle
