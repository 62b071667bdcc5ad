#pragma once

#include <map>
#include <span>
#include <string>
#include <string_view>

#include "qaens/config.hpp"
#include "qaens/types.hpp"

namespace qaens {

/// SQuAD-style normalization: lowercase, drop punctuation (Unicode P* plus the
/// ASCII symbol set), drop standalone "a"/"an"/"the", collapse whitespace.
std::string normalize_answer(std::string_view text);

double token_f1(std::string_view pred, std::string_view gold);
double exact_match(std::string_view pred, std::string_view gold);
double score(std::string_view pred, std::string_view gold, MetricKind kind);

/// Max of the metric over all references; throws EmptyGoldSet.
double score_example(std::string_view pred, std::span<const std::string> golds, MetricKind kind);

/// Mean of score_example over every example of the dataset, summed in
/// example-id order. Throws MissingPrediction.
double dataset_accuracy(const std::map<std::string, std::string, std::less<>>& preds,
                        const Dataset& ds, MetricKind kind);

}  // namespace qaens
