#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "json.hpp"

#include "graphforge/dataset.hpp"
#include "graphforge/error.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/harness.hpp"
#include "graphforge/metrics.hpp"
#include "graphforge/params.hpp"

namespace graphforge::io {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

inline constexpr int kBundleFormatVersion = 1;
inline constexpr int kResultsSchemaVersion = 1;
inline constexpr std::string_view kResultsSchemaName = "graphforge-results";

// ---------------------------------------------------------------------------
// Numbers

/// Shortest decimal that round-trips; independent of the C locale.
inline std::string format_double(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw Error(ErrorCode::kFormatError, "cannot format number");
  return std::string(buf, end);
}

inline double parse_double(std::string_view s) {
  double x = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw Error(ErrorCode::kFormatError, "bad number '" + std::string(s) + "'");
  }
  return x;
}

template <typename Int>
Int parse_int(std::string_view s) {
  Int x{};
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || end != s.data() + s.size()) {
    throw Error(ErrorCode::kFormatError, "bad integer '" + std::string(s) + "'");
  }
  return x;
}

// ---------------------------------------------------------------------------
// Files

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const fs::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

inline Json parse_json(std::string_view text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormatError, what + ": " + e.what());
  }
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_fields(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t end = line.find(sep, pos);
    if (end == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, end - pos));
    pos = end + 1;
  }
}

// ---------------------------------------------------------------------------
// Parameter configs

namespace detail {

template <typename Record>
bool set_scalar(Record& record, const std::string& key, const Json& value) {
  bool matched = false;
  Record::visit_fields(record, [&](std::string_view k, auto& field) {
    if (k != key) return;
    matched = true;
    using Field = std::remove_reference_t<decltype(field)>;
    if (!value.is_number()) {
      throw Error(ErrorCode::kInvalidParams, "'" + key + "' must be a number");
    }
    if constexpr (std::is_integral_v<Field>) {
      const double d = value.get<double>();
      if (d != std::floor(d)) {
        throw Error(ErrorCode::kInvalidParams, "'" + key + "' must be an integer");
      }
      field = static_cast<Field>(d);
    } else {
      field = value.get<double>();
    }
  });
  return matched;
}

inline std::vector<std::size_t> parse_sizes(const Json& value) {
  if (!value.is_array()) {
    throw Error(ErrorCode::kInvalidParams, "fixed_community_sizes must be an array");
  }
  std::vector<std::size_t> sizes;
  for (const auto& v : value) {
    if (!v.is_number_unsigned()) {
      throw Error(ErrorCode::kInvalidParams, "fixed_community_sizes entries must be positive integers");
    }
    sizes.push_back(v.get<std::size_t>());
  }
  return sizes;
}

}  // namespace detail

/// Parses a flat config object of snake_case parameter names. Missing keys
/// keep their defaults; unknown keys are errors. "inter_link_strength" is
/// accepted as an alias of the CABAM intra_link_strength.
inline DatasetConfig parse_dataset_config(const Json& j, GeneratorKind kind) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidParams, "config must be a JSON object");
  DatasetConfig cfg;
  cfg.generator = default_params(kind);
  for (const auto& [raw_key, value] : j.items()) {
    std::string key = raw_key;
    if (key == "generator") {
      if (!value.is_string() || parse_generator(value.get<std::string>()) != kind) {
        throw Error(ErrorCode::kInvalidParams, "config generator does not match");
      }
      continue;
    }
    if (kind == GeneratorKind::kCabam && key == "inter_link_strength") key = "intra_link_strength";
    if (key == "fixed_community_sizes" && kind != GeneratorKind::kLfr) {
      const auto sizes = detail::parse_sizes(value);
      std::visit(
          [&](auto& p) {
            if constexpr (!std::is_same_v<std::decay_t<decltype(p)>, LfrParams>) {
              p.fixed_community_sizes = sizes;
            }
          },
          cfg.generator);
      continue;
    }
    bool known = std::visit([&](auto& p) { return detail::set_scalar(p, key, value); },
                            cfg.generator);
    known = known || detail::set_scalar(cfg.features, key, value);
    known = known || detail::set_scalar(cfg.split, key, value);
    if (!known) {
      throw Error(ErrorCode::kInvalidParams, "unknown config key '" + raw_key + "' for " +
                                                 std::string(generator_name(kind)));
    }
  }
  cfg.validate();
  return cfg;
}

inline Json params_to_json(const DatasetConfig& cfg) {
  Json j = Json::object();
  for (const auto& [key, value] : flatten(cfg)) j[key] = value;
  return j;
}

inline std::optional<std::vector<std::size_t>> fixed_sizes(const DatasetConfig& cfg) {
  return std::visit(
      [](const auto& p) -> std::optional<std::vector<std::size_t>> {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, LfrParams>) {
          return std::nullopt;
        } else {
          return p.fixed_community_sizes;
        }
      },
      cfg.generator);
}

// ---------------------------------------------------------------------------
// Dataset bundles

inline Json meta_to_json(const DatasetMeta& meta, const GeneratedDataset& d) {
  Json j;
  j["format_version"] = kBundleFormatVersion;
  j["generator"] = meta.generator;
  j["params"] = params_to_json(meta.config);
  if (auto sizes = fixed_sizes(meta.config)) j["fixed_community_sizes"] = *sizes;
  j["seed"] = meta.seed;
  j["sample_index"] = meta.sample_index;
  j["edges_dropped"] = meta.edges_dropped;
  j["num_nodes"] = d.graph.num_nodes();
  j["num_edges"] = d.graph.num_edges();
  j["num_communities"] = d.communities.num_communities();
  Json diag = Json::object();
  for (const auto& [key, value] : meta.diagnostics) diag[key] = value;
  j["diagnostics"] = diag;
  return j;
}

inline std::string edges_tsv(const Graph& g) {
  std::string out;
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += '\t';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

inline std::string labels_csv(const CommunityAssignment& c) {
  std::string out = "node_id,label\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    out += std::to_string(i) + "," + std::to_string(c[i]) + "\n";
  }
  return out;
}

inline std::string features_csv(const NodeFeatures& f) {
  std::string out = "node_id";
  for (std::size_t j = 0; j < f.dim(); ++j) out += ",f" + std::to_string(j);
  out += '\n';
  for (std::size_t i = 0; i < f.rows(); ++i) {
    out += std::to_string(i);
    for (double x : f.row(i)) {
      out += ',';
      out += format_double(x);
    }
    out += '\n';
  }
  return out;
}

inline std::string split_json(const DataSplit& s) {
  Json j;
  j["train"] = s.train;
  j["val"] = s.val;
  j["test"] = s.test;
  return j.dump() + "\n";
}

/// Writes edges.tsv, labels.csv, features.csv, split.json, and meta.json.
inline void export_bundle(const GeneratedDataset& d, const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoError, "cannot create " + dir.string() + ": " + ec.message());
  write_file(dir / "edges.tsv", edges_tsv(d.graph));
  write_file(dir / "labels.csv", labels_csv(d.communities));
  write_file(dir / "features.csv", features_csv(d.features));
  write_file(dir / "split.json", split_json(d.split));
  write_file(dir / "meta.json", meta_to_json(d.meta, d).dump(2) + "\n");
}

inline DatasetMeta meta_from_json(const Json& j) {
  if (!j.contains("format_version") || !j["format_version"].is_number_integer()) {
    throw Error(ErrorCode::kFormatError, "meta.json lacks format_version");
  }
  if (j["format_version"].get<int>() != kBundleFormatVersion) {
    throw Error(ErrorCode::kFormatError,
                "unsupported bundle format version " + j["format_version"].dump());
  }
  try {
    DatasetMeta meta;
    meta.generator = j.at("generator").get<std::string>();
    Json params = j.at("params");
    if (j.contains("fixed_community_sizes")) {
      params["fixed_community_sizes"] = j["fixed_community_sizes"];
    }
    meta.config = parse_dataset_config(params, parse_generator(meta.generator));
    meta.seed = j.at("seed").get<std::uint64_t>();
    meta.sample_index = j.at("sample_index").get<std::uint64_t>();
    meta.edges_dropped = j.at("edges_dropped").get<std::size_t>();
    if (j.contains("diagnostics")) {
      for (const auto& [key, value] : j["diagnostics"].items()) {
        meta.diagnostics.emplace_back(key, value.get<double>());
      }
    }
    return meta;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormatError, std::string("meta.json: ") + e.what());
  }
}

inline GeneratedDataset load_bundle(const fs::path& dir) {
  for (const char* name : {"meta.json", "edges.tsv", "labels.csv", "features.csv", "split.json"}) {
    if (!fs::exists(dir / name)) {
      throw Error(ErrorCode::kIoError, "missing " + (dir / name).string());
    }
  }
  const Json meta_json = parse_json(read_file(dir / "meta.json"), "meta.json");
  DatasetMeta meta = meta_from_json(meta_json);
  const auto n = meta_json.at("num_nodes").get<std::size_t>();

  const std::string labels_text = read_file(dir / "labels.csv");
  const auto label_lines = split_lines(labels_text);
  if (label_lines.empty() || label_lines[0] != "node_id,label") {
    throw Error(ErrorCode::kFormatError, "labels.csv header must be 'node_id,label'");
  }
  if (label_lines.size() - 1 != n) {
    throw Error(ErrorCode::kFormatError, "labels.csv row count disagrees with meta.json");
  }
  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = split_fields(label_lines[i + 1], ',');
    if (f.size() != 2 || parse_int<std::size_t>(f[0]) != i) {
      throw Error(ErrorCode::kFormatError, "labels.csv row " + std::to_string(i) + " malformed");
    }
    labels[i] = parse_int<std::uint32_t>(f[1]);
  }

  const std::string edges_text = read_file(dir / "edges.tsv");
  std::vector<Edge> edges;
  for (auto line : split_lines(edges_text)) {
    const auto f = split_fields(line, '\t');
    if (f.size() != 2) throw Error(ErrorCode::kFormatError, "edges.tsv line malformed");
    const Edge e{parse_int<NodeId>(f[0]), parse_int<NodeId>(f[1])};
    if (!(e.u < e.v) || e.v >= n || (!edges.empty() && !(edges.back() < e))) {
      throw Error(ErrorCode::kFormatError, "edges.tsv must be sorted, unique, and have u < v < n");
    }
    edges.push_back(e);
  }

  const std::string features_text = read_file(dir / "features.csv");
  const auto feature_lines = split_lines(features_text);
  if (feature_lines.empty()) throw Error(ErrorCode::kFormatError, "features.csv is empty");
  const auto header = split_fields(feature_lines[0], ',');
  const std::size_t dim = header.size() - 1;
  if (header[0] != "node_id" || dim == 0) {
    throw Error(ErrorCode::kFormatError, "features.csv header malformed");
  }
  if (feature_lines.size() - 1 != n) {
    throw Error(ErrorCode::kFormatError, "features.csv row count disagrees with meta.json");
  }
  NodeFeatures features(n, dim);
  for (std::size_t i = 0; i < n; ++i) {
    const auto f = split_fields(feature_lines[i + 1], ',');
    if (f.size() != dim + 1 || parse_int<std::size_t>(f[0]) != i) {
      throw Error(ErrorCode::kFormatError, "features.csv row " + std::to_string(i) + " malformed");
    }
    for (std::size_t j = 0; j < dim; ++j) features(i, j) = parse_double(f[j + 1]);
  }

  const Json split_j = parse_json(read_file(dir / "split.json"), "split.json");
  DataSplit split;
  try {
    split.train = split_j.at("train").get<std::vector<NodeId>>();
    split.val = split_j.at("val").get<std::vector<NodeId>>();
    split.test = split_j.at("test").get<std::vector<NodeId>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormatError, std::string("split.json: ") + e.what());
  }
  split.validate(n);

  GeneratedDataset d;
  d.graph = Graph::from_edges(n, std::move(edges));
  d.communities = CommunityAssignment::from_labels(std::move(labels));
  d.features = std::move(features);
  d.split = std::move(split);
  d.meta = std::move(meta);
  return d;
}

// ---------------------------------------------------------------------------
// Sweep configs

inline SweepConfig parse_sweep_config(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kInvalidParams, "sweep config must be an object");
  SweepConfig cfg;
  auto need_bool = [](const Json& v, const std::string& key) {
    if (!v.is_boolean()) throw Error(ErrorCode::kInvalidParams, "'" + key + "' must be a boolean");
    return v.get<bool>();
  };
  auto need_uint = [](const Json& v, const std::string& key) {
    if (!v.is_number_unsigned()) {
      throw Error(ErrorCode::kInvalidParams, "'" + key + "' must be a nonnegative integer");
    }
    return v.get<std::uint64_t>();
  };
  for (const auto& [key, value] : j.items()) {
    if (key == "generators") {
      if (!value.is_array() || value.empty()) {
        throw Error(ErrorCode::kInvalidParams, "'generators' must be a nonempty array");
      }
      cfg.generators.clear();
      for (const auto& g : value) {
        if (!g.is_string()) throw Error(ErrorCode::kInvalidParams, "generator names are strings");
        cfg.generators.push_back(parse_generator(g.get<std::string>()));
      }
    } else if (key == "samples_per_generator") {
      cfg.samples_per_generator = need_uint(value, key);
    } else if (key == "master_seed") {
      cfg.master_seed = need_uint(value, key);
    } else if (key == "matched") {
      cfg.matched = need_bool(value, key);
    } else if (key == "baseline") {
      cfg.baseline = need_bool(value, key);
    } else if (key == "export_datasets") {
      cfg.export_datasets = need_bool(value, key);
    } else if (key == "record_timing") {
      cfg.record_timing = need_bool(value, key);
    } else if (key == "train_per_class") {
      cfg.split.train_per_class = static_cast<std::int64_t>(need_uint(value, key));
    } else if (key == "val_per_class") {
      cfg.split.val_per_class = static_cast<std::int64_t>(need_uint(value, key));
    } else if (key == "ppr_damping") {
      if (!value.is_number()) throw Error(ErrorCode::kInvalidParams, "'ppr_damping' must be a number");
      cfg.ppr.damping = value.get<double>();
    } else if (key == "ranges") {
      if (!value.is_object()) throw Error(ErrorCode::kInvalidParams, "'ranges' must be an object");
      for (const auto& [gen, table] : value.items()) {
        const GeneratorKind kind = parse_generator(gen);
        ParamRanges& ranges = cfg.ranges[kind];
        if (!table.is_object()) {
          throw Error(ErrorCode::kInvalidParams, "ranges for " + gen + " must be an object");
        }
        for (const auto& [raw_param, bounds] : table.items()) {
          std::string param = raw_param;
          if (kind == GeneratorKind::kCabam && param == "inter_link_strength") {
            param = "intra_link_strength";
          }
          Range* target = nullptr;
          for (auto& [k, r] : ranges) {
            if (k == param) target = &r;
          }
          if (!target) {
            throw Error(ErrorCode::kInvalidParams,
                        "unknown range key '" + raw_param + "' for " + gen);
          }
          if (bounds.is_number()) {
            *target = {bounds.get<double>(), bounds.get<double>()};
          } else if (bounds.is_array() && bounds.size() == 2 && bounds[0].is_number() &&
                     bounds[1].is_number()) {
            *target = {bounds[0].get<double>(), bounds[1].get<double>()};
          } else {
            throw Error(ErrorCode::kInvalidParams,
                        "range '" + raw_param + "' must be [lo, hi] or a number");
          }
        }
      }
    } else {
      throw Error(ErrorCode::kInvalidParams, "unknown sweep config key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

/// Canonical form of the settings that affect sweep output.
inline Json sweep_config_to_json(const SweepConfig& cfg) {
  Json j;
  Json gens = Json::array();
  for (auto g : cfg.generators) gens.push_back(std::string(generator_name(g)));
  j["generators"] = gens;
  j["samples_per_generator"] = cfg.samples_per_generator;
  j["master_seed"] = cfg.master_seed;
  j["matched"] = cfg.matched;
  j["baseline"] = cfg.baseline;
  j["record_timing"] = cfg.record_timing;
  j["train_per_class"] = cfg.split.train_per_class;
  j["val_per_class"] = cfg.split.val_per_class;
  j["ppr_damping"] = cfg.ppr.damping;
  Json ranges = Json::object();
  for (auto g : cfg.generators) {
    Json table = Json::object();
    for (const auto& [key, r] : cfg.ranges_for(g)) table[key] = {r.lo, r.hi};
    ranges[std::string(generator_name(g))] = table;
  }
  j["ranges"] = ranges;
  return j;
}

// ---------------------------------------------------------------------------
// Results files (JSON lines)

inline std::string config_digest(const SweepConfig& cfg) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(tag_hash(sweep_config_to_json(cfg).dump())));
  return buf;
}

inline std::string results_header(const SweepConfig& cfg) {
  Json j;
  j["schema"] = kResultsSchemaName;
  j["schema_version"] = kResultsSchemaVersion;
  j["master_seed"] = cfg.master_seed;
  j["samples_per_generator"] = cfg.samples_per_generator;
  j["config_digest"] = config_digest(cfg);
  return j.dump();
}

struct ResultsHeader {
  int schema_version = 0;
  std::uint64_t master_seed = 0;
  std::string config_digest;
};

inline ResultsHeader parse_results_header(std::string_view line) {
  const Json j = parse_json(line, "results header");
  if (!j.is_object() || j.value("schema", "") != kResultsSchemaName) {
    throw Error(ErrorCode::kFormatError, "not a results file");
  }
  ResultsHeader h;
  h.schema_version = j.value("schema_version", 0);
  if (h.schema_version != kResultsSchemaVersion) {
    throw Error(ErrorCode::kFormatError,
                "unsupported results schema version " + std::to_string(h.schema_version));
  }
  h.master_seed = j.value("master_seed", std::uint64_t{0});
  h.config_digest = j.value("config_digest", "");
  return h;
}

inline Json row_to_json(const ResultRow& row) {
  Json j;
  j["generator"] = row.generator;
  j["sample_index"] = row.sample_index;
  j["seed"] = row.seed;
  j["status"] = row.ok ? "ok" : "failed";
  j["reason"] = row.failure ? Json(std::string(to_string(*row.failure))) : Json(nullptr);
  j["message"] = row.failure_message;
  Json params = Json::object();
  for (const auto& [key, value] : row.params) params[key] = value;
  j["params"] = params;
  Json metrics = Json::object();
  Json errors = Json::object();
  const auto values = row.metrics.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::string name(GraphMetrics::kNames[i]);
    metrics[name] = values[i]->value ? Json(*values[i]->value) : Json(nullptr);
    if (values[i]->reason) errors[name] = std::string(to_string(*values[i]->reason));
  }
  j["metrics"] = metrics;
  j["metric_errors"] = errors;
  Json scores = Json::object();
  for (const auto& [model, auc] : row.scores) scores[model] = auc;
  j["scores"] = scores;
  Json diag = Json::object();
  for (const auto& [key, value] : row.diagnostics) diag[key] = value;
  j["diagnostics"] = diag;
  j["wall_time_ms"] = row.wall_time_ms ? Json(*row.wall_time_ms) : Json(nullptr);
  return j;
}

inline std::string row_to_line(const ResultRow& row) { return row_to_json(row).dump(); }

inline ResultRow row_from_json(const Json& j) {
  try {
    ResultRow row;
    row.generator = j.at("generator").get<std::string>();
    row.sample_index = j.at("sample_index").get<std::uint64_t>();
    row.seed = j.at("seed").get<std::uint64_t>();
    const std::string status = j.at("status").get<std::string>();
    if (status != "ok" && status != "failed") {
      throw Error(ErrorCode::kFormatError, "status must be 'ok' or 'failed'");
    }
    row.ok = status == "ok";
    if (!j.at("reason").is_null()) row.failure = parse_error_code(j["reason"].get<std::string>());
    row.failure_message = j.value("message", "");
    for (const auto& [key, value] : j.at("params").items()) {
      row.params.emplace_back(key, value.get<double>());
    }
    const Json& metrics = j.at("metrics");
    const Json errors = j.value("metric_errors", Json::object());
    auto values = row.metrics.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::string name(GraphMetrics::kNames[i]);
      if (metrics.contains(name) && !metrics[name].is_null()) {
        values[i]->value = metrics[name].get<double>();
      }
      if (errors.contains(name)) values[i]->reason = parse_error_code(errors[name].get<std::string>());
    }
    for (const auto& [model, auc] : j.at("scores").items()) {
      if (!auc.is_null()) row.scores.emplace_back(model, auc.get<double>());
    }
    if (j.contains("diagnostics")) {
      for (const auto& [key, value] : j["diagnostics"].items()) {
        row.diagnostics.emplace_back(key, value.get<double>());
      }
    }
    if (j.contains("wall_time_ms") && !j["wall_time_ms"].is_null()) {
      row.wall_time_ms = j["wall_time_ms"].get<double>();
    }
    return row;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kFormatError, std::string("results row: ") + e.what());
  }
}

struct ResultsFile {
  ResultsHeader header;
  std::vector<ResultRow> rows;
};

inline ResultsFile load_results(const fs::path& path) {
  const std::string text = read_file(path);
  const auto lines = split_lines(text);
  if (lines.empty()) throw Error(ErrorCode::kFormatError, "results file is empty");
  ResultsFile out;
  out.header = parse_results_header(lines[0]);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    out.rows.push_back(row_from_json(parse_json(lines[i], "results line " + std::to_string(i + 1))));
  }
  return out;
}

/// Number of leading complete rows in an interrupted results file that
/// match the expected (generator, sample index) order, and the byte offset
/// just past them. Throws if the header belongs to another configuration.
struct ResumePoint {
  std::size_t rows = 0;
  std::size_t byte_offset = 0;
};

inline ResumePoint find_resume_point(std::string_view text, const SweepConfig& cfg) {
  const std::size_t header_end = text.find('\n');
  if (header_end == std::string_view::npos) return {};
  const ResultsHeader h = parse_results_header(text.substr(0, header_end));
  if (h.config_digest != config_digest(cfg)) {
    throw Error(ErrorCode::kFormatError, "results file was written with a different configuration");
  }
  ResumePoint point{0, header_end + 1};
  const std::size_t per = cfg.samples_per_generator;
  const std::size_t total = per * cfg.generators.size();
  std::size_t pos = header_end + 1;
  while (point.rows < total) {
    const std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) break;
    try {
      const ResultRow row = row_from_json(Json::parse(text.substr(pos, end - pos)));
      const GeneratorKind kind = cfg.generators[point.rows / per];
      if (row.generator != generator_name(kind) || row.sample_index != point.rows % per) break;
    } catch (const std::exception&) {
      break;
    }
    ++point.rows;
    pos = end + 1;
    point.byte_offset = pos;
  }
  return point;
}

// ---------------------------------------------------------------------------
// CSV outputs

inline std::string kde_csv(const std::vector<GeneratorKde>& curves) {
  std::string out = "generator,x,density\n";
  for (const auto& [gen, curve] : curves) {
    for (std::size_t i = 0; i < curve.grid.size(); ++i) {
      out += gen + "," + format_double(curve.grid[i]) + "," + format_double(curve.density[i]) + "\n";
    }
  }
  return out;
}

inline std::string curves_csv(const std::vector<CurvePoint>& points) {
  std::string out = "generator,bucket_center,mean_auc,count\n";
  for (const auto& p : points) {
    out += p.generator + "," + format_double(p.bucket_center) + "," +
           (p.mean_auc ? format_double(*p.mean_auc) : std::string()) + "," +
           std::to_string(p.count) + "\n";
  }
  return out;
}

}  // namespace graphforge::io
