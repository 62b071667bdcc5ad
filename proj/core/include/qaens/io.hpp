#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qaens/ensemble.hpp"
#include "qaens/errors.hpp"
#include "qaens/pipeline.hpp"
#include "qaens/simulator.hpp"
#include "qaens/types.hpp"
#include "qaens/weighting.hpp"

namespace qaens::io {

// Line-delimited JSON, UTF-8, one record per line. Blank lines are skipped.
//
//   dataset      {"id", "question", "context", "answers": [..]}
//   predictions  {"model_id", "example_id", "tokens": [{"text", "start", "end"}],
//                 "start_probs": [..], "end_probs": [..]}
//   weights      header {"format": "qaens-weights", ...} then {model_id: weight}
//   answers      {"id", "answer"}
//
// Probabilities and weights are written with 17 significant digits.

/// A problem found while reading a file; `line` is 1-based, 0 for file-level.
struct Issue {
  std::size_t line = 0;
  ErrorCode code = ErrorCode::ParseError;
  std::string message;
};

/// When `issues` is null the first problem throws; otherwise every problem is
/// appended and the offending record skipped.
Dataset read_dataset(std::istream& in, std::string name, std::vector<Issue>* issues = nullptr);
void write_dataset(std::ostream& out, const Dataset& ds);

PredictionSet read_predictions(std::istream& in, const Dataset& expected,
                               std::vector<Issue>* issues = nullptr);
void write_predictions(std::ostream& out, const PredictionSet& set);

struct WeightsMeta {
  MetricKind metric = MetricKind::TokenF1;
  std::vector<std::string> models;  // manifest order
  std::vector<std::string> calibration_datasets;
  std::size_t pool_size = 0;
  std::optional<std::size_t> cap;
  std::uint64_t seed = 0;

  friend bool operator==(const WeightsMeta&, const WeightsMeta&) = default;
};

struct WeightsFile {
  WeightsMeta meta;
  WeightVector weights;

  friend bool operator==(const WeightsFile&, const WeightsFile&) = default;
};

WeightsFile read_weights(std::istream& in);
void write_weights(std::ostream& out, const WeightsFile& file);

struct AlphaFile {
  AlphaSelection selection;
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  MetricKind metric = MetricKind::TokenF1;
  std::size_t pool_size = 0;
};

AlphaFile read_alpha(std::istream& in);
void write_alpha(std::ostream& out, const AlphaFile& file);

AnswerMap read_answers(std::istream& in);
void write_answers(std::ostream& out, const AnswerMap& answers);

RunReport read_report(std::istream& in);
/// Timing is wall-clock dependent, so it is only written when asked for.
void write_report(std::ostream& out, const RunReport& report, bool include_timing = false);

/// Simulator configuration plus optional dataset roles used to emit run specs.
struct SimFile {
  SimConfig config;
  std::vector<std::string> calibration;
  std::vector<std::string> targets;
};

SimFile read_sim_config(std::istream& in);
void write_sim_config(std::ostream& out, const SimFile& file);

struct DatasetFiles {
  std::string name;
  std::filesystem::path dataset;
  std::map<std::string, std::filesystem::path> predictions;  // model id -> file
};

/// Input of the `report` command: every file the end-to-end run needs.
struct RunSpec {
  std::vector<std::string> base_models;
  std::vector<DatasetFiles> calibration;
  DatasetFiles target;
  std::uint64_t seed = 0;
  std::optional<std::size_t> cap = 5000;
  AlphaGrid grid;
  MetricKind metric = MetricKind::TokenF1;
  std::size_t max_span_len = 30;
  bool normalize_weights = true;
};

/// Relative paths are resolved against `base_dir`.
RunSpec read_run_spec(std::istream& in, const std::filesystem::path& base_dir);
void write_run_spec(std::ostream& out, const RunSpec& spec);
RunSpec load_run_spec(const std::filesystem::path& path);

// Path-based wrappers. Reading a missing file throws IoError. A dataset's
// name defaults to the file stem.
Dataset load_dataset(const std::filesystem::path& path, std::string name = {});
void save_dataset(const std::filesystem::path& path, const Dataset& ds);
PredictionSet load_predictions(const std::filesystem::path& path, const Dataset& expected);
void save_predictions(const std::filesystem::path& path, const PredictionSet& set);
WeightsFile load_weights(const std::filesystem::path& path);
void save_weights(const std::filesystem::path& path, const WeightsFile& file);
AlphaFile load_alpha(const std::filesystem::path& path);
void save_alpha(const std::filesystem::path& path, const AlphaFile& file);
AnswerMap load_answers(const std::filesystem::path& path);
void save_answers(const std::filesystem::path& path, const AnswerMap& answers);
RunReport load_report(const std::filesystem::path& path);
void save_report(const std::filesystem::path& path, const RunReport& report, bool include_timing = false);

/// "%.17g" rendering; parses back to the identical double.
std::string format_double(double value);

}  // namespace qaens::io
