#include "qaens/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qaens/errors.hpp"

namespace qaens::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr const char* kWeightsFormat = "qaens-weights";

std::string quoted(const std::string& s) { return json(s).dump(); }

const json& field(const json& obj, const char* name) {
  if (!obj.is_object()) fail(ErrorCode::SchemaViolation, "record is not a JSON object");
  const auto it = obj.find(name);
  if (it == obj.end()) fail(ErrorCode::SchemaViolation, std::string("missing field '") + name + "'");
  return *it;
}

std::string string_field(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_string()) fail(ErrorCode::SchemaViolation, std::string("field '") + name + "' must be a string");
  return v.get<std::string>();
}

std::size_t index_field(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_number_unsigned()) {
    fail(ErrorCode::SchemaViolation, std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> number_array(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_array()) fail(ErrorCode::SchemaViolation, std::string("field '") + name + "' must be an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.is_number()) {
      fail(ErrorCode::SchemaViolation, std::string("field '") + name + "' must hold only numbers");
    }
    out.push_back(x.get<double>());
  }
  return out;
}

std::vector<std::string> string_array(const json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_array()) fail(ErrorCode::SchemaViolation, std::string("field '") + name + "' must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) {
    if (!x.is_string()) {
      fail(ErrorCode::SchemaViolation, std::string("field '") + name + "' must hold only strings");
    }
    out.push_back(x.get<std::string>());
  }
  return out;
}

// Calls fn(line_number, record) for every non-blank line. In collect mode an
// Error raised for one record is logged and reading continues.
template <typename Fn>
void for_each_record(std::istream& in, std::vector<Issue>* issues, Fn&& fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      json record;
      try {
        record = json::parse(line);
      } catch (const json::exception& err) {
        fail(ErrorCode::ParseError, err.what());
      }
      fn(line_no, record);
    } catch (const Error& err) {
      if (issues == nullptr) {
        throw Error(err.code(), "line " + std::to_string(line_no) + ": " + err.what());
      }
      issues->push_back({line_no, err.code(), err.what()});
    } catch (const json::exception& err) {
      if (issues == nullptr) {
        fail(ErrorCode::SchemaViolation, "line " + std::to_string(line_no) + ": " + err.what());
      }
      issues->push_back({line_no, ErrorCode::SchemaViolation, err.what()});
    }
  }
}

void write_numbers(std::ostream& out, const std::vector<double>& values) {
  out << '[';
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out << ',';
    out << format_double(values[i]);
  }
  out << ']';
}

json scores_json(const std::map<std::string, Scores>& scores) {
  json out = json::object();
  for (const auto& [name, s] : scores) out[name] = {{"em", s.em}, {"f1", s.f1}};
  return out;
}

std::map<std::string, Scores> scores_from(const json& obj) {
  std::map<std::string, Scores> out;
  for (const auto& [name, s] : obj.items()) out[name] = {s.at("f1").get<double>(), s.at("em").get<double>()};
  return out;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for reading");
  return in;
}

template <typename WriteFn>
void write_file(const std::filesystem::path& path, WriteFn&& fn) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  fn(out);
  out.flush();
  if (!out) fail(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

template <typename ReadFn>
auto read_file(const std::filesystem::path& path, ReadFn&& fn) {
  auto in = open_in(path);
  try {
    return fn(in);
  } catch (const Error& err) {
    throw Error(err.code(), path.string() + ": " + err.what());
  }
}

}  // namespace

std::string format_double(double value) {
  if (!std::isfinite(value)) fail(ErrorCode::InvalidArgument, "cannot serialize a non-finite number");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

Dataset read_dataset(std::istream& in, std::string name, std::vector<Issue>* issues) {
  std::vector<Example> examples;
  std::set<std::string> seen;
  for_each_record(in, issues, [&](std::size_t, const json& r) {
    Example e(string_field(r, "id"), string_field(r, "question"), string_field(r, "context"),
              string_array(r, "answers"));
    if (!seen.insert(e.id()).second) {
      fail(ErrorCode::DuplicateExampleId, "duplicate example id '" + e.id() + "'");
    }
    examples.push_back(std::move(e));
  });
  return Dataset(std::move(name), std::move(examples));
}

void write_dataset(std::ostream& out, const Dataset& ds) {
  for (const auto& e : ds.examples()) {
    ordered_json r;
    r["id"] = e.id();
    r["question"] = e.question();
    r["context"] = e.context();
    r["answers"] = e.gold_answers();
    out << r.dump() << '\n';
  }
}

PredictionSet read_predictions(std::istream& in, const Dataset& expected, std::vector<Issue>* issues) {
  std::optional<PredictionSet> set;
  for_each_record(in, issues, [&](std::size_t, const json& r) {
    ModelPrediction p;
    p.model_id = string_field(r, "model_id");
    p.example_id = string_field(r, "example_id");
    const auto& tokens = field(r, "tokens");
    if (!tokens.is_array()) fail(ErrorCode::SchemaViolation, "field 'tokens' must be an array");
    p.tokens.reserve(tokens.size());
    for (const auto& t : tokens) {
      p.tokens.push_back({string_field(t, "text"), index_field(t, "start"), index_field(t, "end")});
    }
    p.dist.start_probs = number_array(r, "start_probs");
    p.dist.end_probs = number_array(r, "end_probs");
    if (p.model_id.empty()) fail(ErrorCode::SchemaViolation, "field 'model_id' must be non-empty");
    if (!set) set.emplace(p.model_id);
    if (p.model_id != set->model_id()) {
      fail(ErrorCode::SchemaViolation, "model_id '" + p.model_id + "' differs from the file's '" +
                                           set->model_id() + "'");
    }
    const Example* e = expected.find(p.example_id);
    if (e == nullptr) {
      fail(ErrorCode::UnknownExampleId,
           "example '" + p.example_id + "' is not in dataset '" + expected.name() + "'");
    }
    if (set->find(p.example_id) != nullptr) {
      fail(ErrorCode::DuplicateExampleId, "second prediction for example '" + p.example_id + "'");
    }
    set->add(validate_prediction(std::move(p), *e));
  });
  if (!set) {
    const std::string msg = "prediction file has no records";
    if (issues == nullptr) fail(ErrorCode::SchemaViolation, msg);
    issues->push_back({0, ErrorCode::SchemaViolation, msg});
    return PredictionSet{};
  }
  return std::move(*set);
}

void write_predictions(std::ostream& out, const PredictionSet& set) {
  for (const auto& [id, p] : set.predictions()) {
    out << "{\"model_id\":" << quoted(p.model_id) << ",\"example_id\":" << quoted(p.example_id)
        << ",\"tokens\":[";
    for (std::size_t i = 0; i < p.tokens.size(); ++i) {
      const auto& t = p.tokens[i];
      if (i > 0) out << ',';
      out << "{\"text\":" << quoted(t.text) << ",\"start\":" << t.char_start << ",\"end\":" << t.char_end << '}';
    }
    out << "],\"start_probs\":";
    write_numbers(out, p.dist.start_probs);
    out << ",\"end_probs\":";
    write_numbers(out, p.dist.end_probs);
    out << "}\n";
  }
}

WeightsFile read_weights(std::istream& in) {
  std::vector<json> records;
  for_each_record(in, nullptr, [&](std::size_t, const json& r) { records.push_back(r); });
  if (records.size() != 2) {
    fail(ErrorCode::SchemaViolation, "weights file must hold a header line and a weights line");
  }
  const auto& header = records[0];
  if (string_field(header, "format") != kWeightsFormat) {
    fail(ErrorCode::SchemaViolation, "header 'format' must be \"" + std::string(kWeightsFormat) + "\"");
  }
  WeightsFile file;
  file.meta.metric = parse_metric(string_field(header, "metric"));
  file.meta.models = string_array(header, "models");
  file.meta.calibration_datasets = string_array(header, "calibration_datasets");
  file.meta.pool_size = index_field(header, "pool_size");
  if (const auto it = header.find("cap"); it != header.end() && !it->is_null()) {
    file.meta.cap = index_field(header, "cap");
  }
  file.meta.seed = field(header, "seed").get<std::uint64_t>();
  if (!records[1].is_object()) fail(ErrorCode::SchemaViolation, "weights line must be an object");
  for (const auto& [model, w] : records[1].items()) {
    if (!w.is_number()) fail(ErrorCode::SchemaViolation, "weight of '" + model + "' must be a number");
    file.weights.entries[model] = w.get<double>();
  }
  for (const auto& m : file.meta.models) {
    if (!file.weights.entries.contains(m)) fail(ErrorCode::SchemaViolation, "no weight for listed model '" + m + "'");
  }
  return file;
}

void write_weights(std::ostream& out, const WeightsFile& file) {
  ordered_json header;
  header["format"] = kWeightsFormat;
  header["version"] = 1;
  header["metric"] = std::string(to_string(file.meta.metric));
  header["models"] = file.meta.models;
  header["calibration_datasets"] = file.meta.calibration_datasets;
  header["pool_size"] = file.meta.pool_size;
  header["cap"] = file.meta.cap ? ordered_json(*file.meta.cap) : ordered_json(nullptr);
  header["seed"] = file.meta.seed;
  out << header.dump() << '\n';
  // Listed models first, in manifest order, then any others.
  std::vector<std::string> order = file.meta.models;
  for (const auto& [m, w] : file.weights.entries) {
    if (std::find(order.begin(), order.end(), m) == order.end()) order.push_back(m);
  }
  out << '{';
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out << ',';
    out << quoted(order[i]) << ':' << format_double(file.weights.at(order[i]));
  }
  out << "}\n";
}

AlphaFile read_alpha(std::istream& in) {
  json r;
  try {
    r = json::parse(in);
  } catch (const json::exception& err) {
    fail(ErrorCode::ParseError, err.what());
  }
  try {
    AlphaFile file;
    file.selection.alpha = r.at("selected_alpha").get<double>();
    file.selection.score = r.at("score").get<double>();
    for (const auto& entry : r.at("per_alpha_scores")) {
      file.selection.per_alpha_scores.emplace_back(entry.at("alpha").get<double>(), entry.at("score").get<double>());
    }
    file.folds = r.at("folds").get<std::size_t>();
    file.seed = r.at("seed").get<std::uint64_t>();
    file.metric = parse_metric(r.at("metric").get<std::string>());
    file.pool_size = r.at("pool_size").get<std::size_t>();
    return file;
  } catch (const json::exception& err) {
    fail(ErrorCode::SchemaViolation, err.what());
  }
}

void write_alpha(std::ostream& out, const AlphaFile& file) {
  ordered_json r;
  r["selected_alpha"] = file.selection.alpha;
  r["score"] = file.selection.score;
  r["per_alpha_scores"] = ordered_json::array();
  for (const auto& [alpha, score] : file.selection.per_alpha_scores) {
    r["per_alpha_scores"].push_back({{"alpha", alpha}, {"score", score}});
  }
  r["folds"] = file.folds;
  r["seed"] = file.seed;
  r["metric"] = std::string(to_string(file.metric));
  r["pool_size"] = file.pool_size;
  out << r.dump(2) << '\n';
}

AnswerMap read_answers(std::istream& in) {
  AnswerMap out;
  for_each_record(in, nullptr, [&](std::size_t, const json& r) {
    auto id = string_field(r, "id");
    if (!out.emplace(id, string_field(r, "answer")).second) {
      fail(ErrorCode::DuplicateExampleId, "duplicate answer for '" + id + "'");
    }
  });
  return out;
}

void write_answers(std::ostream& out, const AnswerMap& answers) {
  for (const auto& [id, answer] : answers) {
    ordered_json r;
    r["id"] = id;
    r["answer"] = answer;
    out << r.dump() << '\n';
  }
}

RunReport read_report(std::istream& in) {
  json r;
  try {
    r = json::parse(in);
  } catch (const json::exception& err) {
    fail(ErrorCode::ParseError, err.what());
  }
  try {
    RunReport rep;
    const auto& m = r.at("manifest");
    rep.manifest.base_model_ids = m.at("base_models").get<std::vector<std::string>>();
    rep.manifest.calibration_dataset_names = m.at("calibration_datasets").get<std::vector<std::string>>();
    rep.manifest.target_dataset_name = m.at("target_dataset").get<std::string>();
    rep.manifest.seed = m.at("seed").get<std::uint64_t>();
    const auto& c = m.at("config");
    rep.manifest.config.alpha = c.at("alpha").get<double>();
    rep.manifest.config.normalize_weights = c.at("normalize_weights").get<bool>();
    rep.manifest.config.decode.max_span_len = c.at("max_span_len").get<std::size_t>();
    rep.manifest.config.weight_metric = parse_metric(c.at("weight_metric").get<std::string>());
    for (const auto& [model, w] : r.at("weights").items()) rep.weights.entries[model] = w.get<double>();
    rep.selected_alpha = r.at("selected_alpha").get<double>();
    for (const auto& entry : r.at("per_alpha_scores")) {
      rep.per_alpha_scores.emplace_back(entry.at("alpha").get<double>(), entry.at("score").get<double>());
    }
    rep.pool_size = r.at("pool_size").get<std::size_t>();
    rep.per_dataset_scores = scores_from(r.at("per_dataset_scores"));
    rep.simple_ensemble_scores = scores_from(r.at("simple_ensemble_scores"));
    rep.per_model_scores = scores_from(r.at("per_model_scores"));
    if (const auto it = r.find("timing_ms"); it != r.end()) {
      for (const auto& [stage, ms] : it->items()) rep.timing_ms[stage] = ms.get<double>();
    }
    return rep;
  } catch (const json::exception& err) {
    fail(ErrorCode::SchemaViolation, err.what());
  }
}

void write_report(std::ostream& out, const RunReport& report, bool include_timing) {
  ordered_json r;
  const auto& m = report.manifest;
  r["manifest"] = {
      {"base_models", m.base_model_ids},
      {"calibration_datasets", m.calibration_dataset_names},
      {"target_dataset", m.target_dataset_name},
      {"seed", m.seed},
      {"config",
       {{"alpha", m.config.alpha},
        {"normalize_weights", m.config.normalize_weights},
        {"max_span_len", m.config.decode.max_span_len},
        {"weight_metric", std::string(to_string(m.config.weight_metric))}}},
  };
  r["weights"] = json(report.weights.entries);
  r["selected_alpha"] = report.selected_alpha;
  r["per_alpha_scores"] = ordered_json::array();
  for (const auto& [alpha, score] : report.per_alpha_scores) {
    r["per_alpha_scores"].push_back({{"alpha", alpha}, {"score", score}});
  }
  r["pool_size"] = report.pool_size;
  r["per_dataset_scores"] = scores_json(report.per_dataset_scores);
  r["simple_ensemble_scores"] = scores_json(report.simple_ensemble_scores);
  r["per_model_scores"] = scores_json(report.per_model_scores);
  if (include_timing) r["timing_ms"] = json(report.timing_ms);
  out << r.dump(2) << '\n';
}

namespace {

std::pair<std::size_t, std::size_t> range_from(const json& v) {
  if (!v.is_array() || v.size() != 2) fail(ErrorCode::SchemaViolation, "length range must be [min, max]");
  return {v[0].get<std::size_t>(), v[1].get<std::size_t>()};
}

DatasetFiles dataset_files_from(const json& v, const std::filesystem::path& base_dir) {
  const auto resolve = [&](const std::string& p) {
    const std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  DatasetFiles out;
  out.name = v.at("name").get<std::string>();
  out.dataset = resolve(v.at("dataset").get<std::string>());
  for (const auto& [model, path] : v.at("predictions").items()) out.predictions[model] = resolve(path.get<std::string>());
  return out;
}

ordered_json dataset_files_json(const DatasetFiles& files) {
  ordered_json out;
  out["name"] = files.name;
  out["dataset"] = files.dataset.generic_string();
  out["predictions"] = ordered_json::object();
  for (const auto& [model, path] : files.predictions) out["predictions"][model] = path.generic_string();
  return out;
}

}  // namespace

SimFile read_sim_config(std::istream& in) {
  json r;
  try {
    r = json::parse(in);
  } catch (const json::exception& err) {
    fail(ErrorCode::ParseError, err.what());
  }
  try {
    SimFile file;
    auto& cfg = file.config;
    cfg.seed = r.value("seed", std::uint64_t{0});
    cfg.skill.noise_seed = r.value("noise_seed", std::uint64_t{0});
    cfg.skill.sharpness = r.value("sharpness", cfg.skill.sharpness);
    cfg.vocab_size = r.value("vocab_size", cfg.vocab_size);
    if (r.contains("context_len")) cfg.context_len_range = range_from(r["context_len"]);
    if (r.contains("answer_len")) cfg.answer_len_range = range_from(r["answer_len"]);
    for (const auto& d : r.at("domains")) {
      cfg.domains.push_back({d.at("name").get<std::string>(), d.at("count").get<std::size_t>()});
    }
    cfg.models = r.at("models").get<std::vector<std::string>>();
    for (const auto& [model, row] : r.at("skills").items()) {
      for (const auto& [domain, skill] : row.items()) cfg.skill.skills[model][domain] = skill.get<double>();
    }
    file.calibration = r.value("calibration", std::vector<std::string>{});
    file.targets = r.value("targets", std::vector<std::string>{});
    return file;
  } catch (const json::exception& err) {
    fail(ErrorCode::SchemaViolation, err.what());
  }
}

void write_sim_config(std::ostream& out, const SimFile& file) {
  const auto& cfg = file.config;
  ordered_json r;
  r["seed"] = cfg.seed;
  r["noise_seed"] = cfg.skill.noise_seed;
  r["sharpness"] = cfg.skill.sharpness;
  r["vocab_size"] = cfg.vocab_size;
  r["context_len"] = {cfg.context_len_range.first, cfg.context_len_range.second};
  r["answer_len"] = {cfg.answer_len_range.first, cfg.answer_len_range.second};
  r["domains"] = ordered_json::array();
  for (const auto& d : cfg.domains) r["domains"].push_back({{"name", d.name}, {"count", d.count}});
  r["models"] = cfg.models;
  r["skills"] = json(cfg.skill.skills);
  r["calibration"] = file.calibration;
  r["targets"] = file.targets;
  out << r.dump(2) << '\n';
}

RunSpec read_run_spec(std::istream& in, const std::filesystem::path& base_dir) {
  json r;
  try {
    r = json::parse(in);
  } catch (const json::exception& err) {
    fail(ErrorCode::ParseError, err.what());
  }
  try {
    RunSpec spec;
    spec.base_models = r.at("base_models").get<std::vector<std::string>>();
    for (const auto& c : r.at("calibration")) spec.calibration.push_back(dataset_files_from(c, base_dir));
    spec.target = dataset_files_from(r.at("target"), base_dir);
    spec.seed = r.value("seed", std::uint64_t{0});
    if (const auto it = r.find("cap"); it != r.end()) {
      spec.cap = it->is_null() ? std::nullopt : std::optional<std::size_t>(it->get<std::size_t>());
    }
    spec.grid.values = r.value("alpha_grid", spec.grid.values);
    spec.grid.folds = r.value("folds", spec.grid.folds);
    spec.metric = parse_metric(r.value("metric", std::string("f1")));
    spec.max_span_len = r.value("max_span_len", spec.max_span_len);
    spec.normalize_weights = r.value("normalize_weights", spec.normalize_weights);
    return spec;
  } catch (const json::exception& err) {
    fail(ErrorCode::SchemaViolation, err.what());
  }
}

void write_run_spec(std::ostream& out, const RunSpec& spec) {
  ordered_json r;
  r["base_models"] = spec.base_models;
  r["calibration"] = ordered_json::array();
  for (const auto& c : spec.calibration) r["calibration"].push_back(dataset_files_json(c));
  r["target"] = dataset_files_json(spec.target);
  r["seed"] = spec.seed;
  r["cap"] = spec.cap ? ordered_json(*spec.cap) : ordered_json(nullptr);
  r["alpha_grid"] = spec.grid.values;
  r["folds"] = spec.grid.folds;
  r["metric"] = std::string(to_string(spec.metric));
  r["max_span_len"] = spec.max_span_len;
  r["normalize_weights"] = spec.normalize_weights;
  out << r.dump(2) << '\n';
}

RunSpec load_run_spec(const std::filesystem::path& path) {
  return read_file(path, [&](std::istream& in) { return read_run_spec(in, path.parent_path()); });
}

Dataset load_dataset(const std::filesystem::path& path, std::string name) {
  if (name.empty()) name = path.stem().string();
  return read_file(path, [&](std::istream& in) { return read_dataset(in, name); });
}

void save_dataset(const std::filesystem::path& path, const Dataset& ds) {
  write_file(path, [&](std::ostream& out) { write_dataset(out, ds); });
}

PredictionSet load_predictions(const std::filesystem::path& path, const Dataset& expected) {
  return read_file(path, [&](std::istream& in) { return read_predictions(in, expected); });
}

void save_predictions(const std::filesystem::path& path, const PredictionSet& set) {
  write_file(path, [&](std::ostream& out) { write_predictions(out, set); });
}

WeightsFile load_weights(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return read_weights(in); });
}

void save_weights(const std::filesystem::path& path, const WeightsFile& file) {
  write_file(path, [&](std::ostream& out) { write_weights(out, file); });
}

AlphaFile load_alpha(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return read_alpha(in); });
}

void save_alpha(const std::filesystem::path& path, const AlphaFile& file) {
  write_file(path, [&](std::ostream& out) { write_alpha(out, file); });
}

AnswerMap load_answers(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return read_answers(in); });
}

void save_answers(const std::filesystem::path& path, const AnswerMap& answers) {
  write_file(path, [&](std::ostream& out) { write_answers(out, answers); });
}

RunReport load_report(const std::filesystem::path& path) {
  return read_file(path, [](std::istream& in) { return read_report(in); });
}

void save_report(const std::filesystem::path& path, const RunReport& report, bool include_timing) {
  write_file(path, [&](std::ostream& out) { write_report(out, report, include_timing); });
}

}  // namespace qaens::io
