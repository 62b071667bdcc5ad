#include <doctest.h>

#include <algorithm>

#include "qaens/errors.hpp"
#include "qaens/metrics.hpp"
#include "qaens/random.hpp"

using namespace qaens;

TEST_CASE("normalize_answer") {
  CHECK(normalize_answer("The Cat!") == "cat");
  CHECK(normalize_answer("") == "");
  CHECK(normalize_answer("a an the") == "");
  CHECK(normalize_answer("  Hello,\tWorld  ") == "hello world");
  CHECK(normalize_answer("theory of a thing") == "theory of thing");
  CHECK(normalize_answer("«Où?» dit-il") == "où ditil");
  CHECK(normalize_answer("bad \xff byte") == "bad \xEF\xBF\xBD byte");
}

TEST_CASE("token_f1") {
  CHECK(token_f1("cat sat", "cat sat") == 1.0);
  CHECK(token_f1("red car", "blue car") == 0.5);
  CHECK(token_f1("the cat sat", "cat sat") == 1.0);
  CHECK(token_f1("", "") == 1.0);
  CHECK(token_f1("", "cat") == 0.0);
  CHECK(token_f1("dog", "cat") == 0.0);
  CHECK(token_f1("cat cat", "cat") == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("exact_match") {
  CHECK(exact_match("The Cat", "cat") == 1.0);
  CHECK(exact_match("cat", "cats") == 0.0);
  CHECK(exact_match("", "") == 1.0);
}

TEST_CASE("score_example takes the best reference") {
  const std::vector<std::string> two{"dog", "cat"};
  CHECK(score_example("cat", two, MetricKind::ExactMatch) == 1.0);
  const std::vector<std::string> cars{"blue car", "green bike"};
  CHECK(score_example("red car", cars, MetricKind::TokenF1) == 0.5);
  CHECK_THROWS_AS(score_example("x", std::vector<std::string>{}, MetricKind::TokenF1), Error);
  try {
    score_example("x", std::vector<std::string>{}, MetricKind::ExactMatch);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyGoldSet);
  }
}

TEST_CASE("dataset_accuracy") {
  std::vector<Example> examples;
  std::map<std::string, std::string, std::less<>> preds;
  const double scores[] = {1, 1, 0, 0, 1};
  for (int i = 0; i < 5; ++i) {
    const auto id = "e" + std::to_string(i);
    examples.emplace_back(id, "q", "ctx", std::vector<std::string>{"gold"});
    preds[id] = scores[i] == 1 ? "gold" : "wrong";
  }
  const Dataset ds("d", examples);
  CHECK(dataset_accuracy(preds, ds, MetricKind::TokenF1) == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(dataset_accuracy(preds, ds, MetricKind::ExactMatch) == doctest::Approx(0.6).epsilon(1e-15));

  std::reverse(examples.begin(), examples.end());
  CHECK(dataset_accuracy(preds, Dataset("d", examples), MetricKind::TokenF1) ==
        dataset_accuracy(preds, ds, MetricKind::TokenF1));

  for (auto& [id, answer] : preds) answer = "gold";
  CHECK(dataset_accuracy(preds, ds, MetricKind::TokenF1) == 1.0);

  preds.erase("e3");
  try {
    dataset_accuracy(preds, ds, MetricKind::TokenF1);
    FAIL("expected MissingPrediction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MissingPrediction);
  }
}

namespace {

std::string random_phrase(Rng& rng) {
  static const char* const words[] = {"the", "a", "an", "cat", "Cat", "dog", "sat", "on", "mat",
                                      "red", "car", "!", ",", "é", "É", "New", "york", "the"};
  std::string out;
  const std::size_t n = rng.below(6);
  for (std::size_t i = 0; i < n; ++i) {
    if (!out.empty() || rng.below(2)) out += rng.below(4) == 0 ? "  " : " ";
    out += words[rng.below(std::size(words))];
  }
  return out;
}

}  // namespace

TEST_CASE("metric properties hold on random phrases") {
  Rng rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = random_phrase(rng);
    const auto b = random_phrase(rng);
    const double f = token_f1(a, b);
    const double em = exact_match(a, b);
    CHECK(f >= 0.0);
    CHECK(f <= 1.0);
    CHECK(f == token_f1(b, a));
    if (em == 1.0) CHECK(f == 1.0);
    // Case, punctuation, articles and spacing never move the score.
    std::string noisy = "The " + a + " !!  ";
    for (auto& c : noisy) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    CHECK(token_f1(noisy, b) == f);
  }
}
