#include "qaens/metrics.hpp"

#include <algorithm>
#include <vector>

#include "qaens/errors.hpp"
#include "qaens/utf8.hpp"

namespace qaens {
namespace {

constexpr std::u32string_view kAsciiPunctuation = U"!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";

bool is_dropped(char32_t cp) {
  return kAsciiPunctuation.find(cp) != std::u32string_view::npos || unicode::is_punctuation(cp);
}

bool is_article(std::u32string_view word) { return word == U"a" || word == U"an" || word == U"the"; }

std::vector<std::u32string> normalized_tokens(std::string_view text) {
  std::u32string cleaned;
  for (char32_t cp : utf8::decode_lenient(text)) {
    if (!is_dropped(cp)) cleaned.push_back(unicode::to_lower(cp));
  }
  std::vector<std::u32string> words;
  std::size_t i = 0;
  while (i < cleaned.size()) {
    while (i < cleaned.size() && unicode::is_whitespace(cleaned[i])) ++i;
    std::size_t j = i;
    while (j < cleaned.size() && !unicode::is_whitespace(cleaned[j])) ++j;
    if (j > i) {
      std::u32string_view word(cleaned.data() + i, j - i);
      if (!is_article(word)) words.emplace_back(word);
    }
    i = j;
  }
  return words;
}

}  // namespace

std::string normalize_answer(std::string_view text) {
  std::string out;
  for (const auto& word : normalized_tokens(text)) {
    if (!out.empty()) out.push_back(' ');
    out += utf8::encode(word);
  }
  return out;
}

double token_f1(std::string_view pred, std::string_view gold) {
  auto p = normalized_tokens(pred);
  auto g = normalized_tokens(gold);
  if (p.empty() && g.empty()) return 1.0;
  if (p.empty() || g.empty()) return 0.0;
  std::sort(p.begin(), p.end());
  std::sort(g.begin(), g.end());
  // Multiset intersection size.
  std::size_t overlap = 0;
  for (auto a = p.begin(), b = g.begin(); a != p.end() && b != g.end();) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++overlap, ++a, ++b;
    }
  }
  if (overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(p.size());
  const double recall = static_cast<double>(overlap) / static_cast<double>(g.size());
  return 2.0 * precision * recall / (precision + recall);
}

double exact_match(std::string_view pred, std::string_view gold) {
  return normalized_tokens(pred) == normalized_tokens(gold) ? 1.0 : 0.0;
}

double score(std::string_view pred, std::string_view gold, MetricKind kind) {
  return kind == MetricKind::TokenF1 ? token_f1(pred, gold) : exact_match(pred, gold);
}

double score_example(std::string_view pred, std::span<const std::string> golds, MetricKind kind) {
  if (golds.empty()) fail(ErrorCode::EmptyGoldSet, "no gold answers to score against");
  double best = 0.0;
  for (const auto& gold : golds) best = std::max(best, score(pred, gold, kind));
  return best;
}

double dataset_accuracy(const std::map<std::string, std::string, std::less<>>& preds,
                        const Dataset& ds, MetricKind kind) {
  if (ds.empty()) fail(ErrorCode::EmptyDataset, "dataset '" + ds.name() + "' is empty");
  std::vector<const Example*> ordered;
  ordered.reserve(ds.size());
  for (const auto& e : ds.examples()) ordered.push_back(&e);
  std::sort(ordered.begin(), ordered.end(),
            [](const Example* a, const Example* b) { return a->id() < b->id(); });
  double total = 0.0;
  for (const Example* e : ordered) {
    const auto it = preds.find(e->id());
    if (it == preds.end()) {
      fail(ErrorCode::MissingPrediction, "no prediction for example '" + e->id() + "'");
    }
    total += score_example(it->second, e->gold_answers(), kind);
  }
  return total / static_cast<double>(ordered.size());
}

}  // namespace qaens
