#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "graphforge/baselines.hpp"
#include "graphforge/dataset.hpp"
#include "graphforge/error.hpp"
#include "graphforge/generators.hpp"
#include "graphforge/metrics.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"

namespace graphforge {

struct Range {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
  friend bool operator==(const Range&, const Range&) = default;
};

/// Sampling range per parameter key, in config-key order.
using ParamRanges = std::vector<std::pair<std::string, Range>>;

inline bool is_integer_param(std::string_view key) {
  return key == "nvertex" || key == "min_degree" || key == "num_clusters" ||
         key == "feature_dim" || key == "num_tries";
}

inline ParamRanges default_ranges(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kSbm:
      return {{"nvertex", {1028, 4096}},
              {"avg_degree", {1, 32}},
              {"min_degree", {2, 20}},
              {"pq_ratio", {1, 16}},
              {"exponent", {0.2, 3.0}},
              {"num_clusters", {2, 10}},
              {"cluster_size_slope", {0.0, 1.0}},
              {"feature_center_distance", {0.0, 2.0}},
              {"feature_dim", {16, 16}}};
    case GeneratorKind::kCabam:
      return {{"nvertex", {1028, 4096}},
              {"min_degree", {2, 20}},
              {"intra_link_strength", {0.5, 1.0}},
              {"num_clusters", {2, 10}},
              {"cluster_size_slope", {0.0, 1.0}},
              {"feature_center_distance", {0.0, 2.0}},
              {"feature_dim", {16, 16}}};
    case GeneratorKind::kLfr:
      return {{"nvertex", {1028, 4096}},
              {"avg_degree", {1, 32}},
              {"max_degree_proportion", {2, 20}},
              {"mixing_param", {0.0, 1.0}},
              {"min_community_size_proportion", {0.05, 0.0825}},
              {"max_community_size_proportion", {0.25, 0.33}},
              {"community_exponent", {1.0, 2.0}},
              {"exponent", {2.0, 3.0}},
              {"num_tries", {20, 20}},
              {"feature_center_distance", {0.0, 2.0}},
              {"feature_dim", {16, 16}}};
  }
  return {};
}

inline const Range* find_range(const ParamRanges& ranges, std::string_view key) {
  for (const auto& [k, r] : ranges) {
    if (k == key) return &r;
  }
  return nullptr;
}

struct SweepConfig {
  std::vector<GeneratorKind> generators = {GeneratorKind::kSbm, GeneratorKind::kCabam,
                                           GeneratorKind::kLfr};
  std::map<GeneratorKind, ParamRanges> ranges = {
      {GeneratorKind::kSbm, default_ranges(GeneratorKind::kSbm)},
      {GeneratorKind::kCabam, default_ranges(GeneratorKind::kCabam)},
      {GeneratorKind::kLfr, default_ranges(GeneratorKind::kLfr)}};
  bool matched = true;
  std::size_t samples_per_generator = 300;
  std::uint64_t master_seed = 0;
  bool baseline = true;
  bool export_datasets = false;
  bool record_timing = false;
  SplitParams split;
  PprOptions ppr;

  const ParamRanges& ranges_for(GeneratorKind kind) const { return ranges.at(kind); }

  void validate() const {
    detail::require(!generators.empty(), "sweep needs at least one generator");
    detail::require(samples_per_generator >= 1, "samples_per_generator must be >= 1");
    for (auto kind : generators) {
      auto it = ranges.find(kind);
      detail::require(it != ranges.end(), "missing ranges for a generator");
      for (const auto& [key, r] : it->second) {
        detail::require(r.lo <= r.hi, "empty range for '" + key + "'");
      }
    }
    split.validate();
  }
};

namespace detail {

inline double draw(Rng& rng, std::string_view key, const Range& r) {
  if (is_integer_param(key)) {
    const auto lo = static_cast<std::int64_t>(std::ceil(r.lo));
    const auto hi = static_cast<std::int64_t>(std::floor(r.hi));
    return static_cast<double>(rng.uniform_int(lo, std::max(lo, hi)));
  }
  return r.lo == r.hi ? r.lo : rng.uniform(r.lo, r.hi);
}

template <typename Record>
void assign_field(Record& record, std::string_view key, double value) {
  Record::visit_fields(record, [&](std::string_view k, auto& field) {
    if (k == key) field = static_cast<std::remove_reference_t<decltype(field)>>(value);
  });
}

inline void assign(DatasetConfig& cfg, std::string_view key, double value) {
  std::visit([&](auto& p) { assign_field(p, key, value); }, cfg.generator);
  assign_field(cfg.features, key, value);
}

inline Range intersect(const std::vector<Range>& rs) {
  Range out{-1e300, 1e300};
  for (const auto& r : rs) {
    out.lo = std::max(out.lo, r.lo);
    out.hi = std::min(out.hi, r.hi);
  }
  if (out.lo > out.hi) {
    throw Error(ErrorCode::kInvalidParams, "matched parameter ranges do not intersect");
  }
  return out;
}

inline Range range_or(const ParamRanges& r, std::string_view key, Range fallback) {
  const Range* found = find_range(r, key);
  return found ? *found : fallback;
}

}  // namespace detail

/// Ranges of the shared draw: the intersection of what every generator in
/// the sweep accepts for the matched roles.
struct SharedRanges {
  Range nvertex;
  Range degree_scale;
  Range homophily;
  Range num_clusters;
  Range cluster_size_slope;
  Range feature_center_distance;
};

inline SharedRanges shared_ranges(const SweepConfig& cfg) {
  using detail::range_or;
  std::vector<Range> n, degree, homophily, clusters, slope, centers;
  for (auto kind : cfg.generators) {
    const ParamRanges& r = cfg.ranges_for(kind);
    n.push_back(range_or(r, "nvertex", {1028, 4096}));
    centers.push_back(range_or(r, "feature_center_distance", {0, 2}));
    switch (kind) {
      case GeneratorKind::kSbm: {
        degree.push_back(range_or(r, "avg_degree", {1, 32}));
        const Range pq = range_or(r, "pq_ratio", {1, 16});
        homophily.push_back({(pq.lo - 1.0) / 15.0, (pq.hi - 1.0) / 15.0});
        clusters.push_back(range_or(r, "num_clusters", {2, 10}));
        slope.push_back(range_or(r, "cluster_size_slope", {0, 1}));
        break;
      }
      case GeneratorKind::kCabam: {
        degree.push_back(range_or(r, "min_degree", {2, 20}));
        const Range intra = range_or(r, "intra_link_strength", {0.5, 1});
        homophily.push_back({(intra.lo - 0.5) / 0.5, (intra.hi - 0.5) / 0.5});
        clusters.push_back(range_or(r, "num_clusters", {2, 10}));
        slope.push_back(range_or(r, "cluster_size_slope", {0, 1}));
        break;
      }
      case GeneratorKind::kLfr: {
        degree.push_back(range_or(r, "avg_degree", {1, 32}));
        const Range mu = range_or(r, "mixing_param", {0, 1});
        homophily.push_back({1.0 - mu.hi, 1.0 - mu.lo});
        break;
      }
    }
  }
  // SBM needs avg_degree >= min_degree >= its lower bound.
  for (auto kind : cfg.generators) {
    if (kind == GeneratorKind::kSbm) {
      degree.push_back({detail::range_or(cfg.ranges_for(kind), "min_degree", {2, 20}).lo, 1e300});
    }
  }
  if (clusters.empty()) clusters.push_back({2, 10});
  if (slope.empty()) slope.push_back({0, 1});
  return {detail::intersect(n),        detail::intersect(degree), detail::intersect(homophily),
          detail::intersect(clusters), detail::intersect(slope),  detail::intersect(centers)};
}

/// Shared draw for one sample index; identical for every generator.
inline SharedDraw sample_shared(const SweepConfig& cfg, std::uint64_t sample_index) {
  const SharedRanges r = shared_ranges(cfg);
  Rng rng = Rng::child(cfg.master_seed, "shared", sample_index);
  SharedDraw s;
  s.nvertex = static_cast<std::int64_t>(detail::draw(rng, "nvertex", r.nvertex));
  s.degree_scale = detail::draw(rng, "degree_scale", r.degree_scale);
  s.homophily = detail::draw(rng, "homophily", r.homophily);
  s.num_clusters = static_cast<std::int64_t>(detail::draw(rng, "num_clusters", r.num_clusters));
  s.cluster_size_slope = detail::draw(rng, "cluster_size_slope", r.cluster_size_slope);
  s.feature_center_distance =
      detail::draw(rng, "feature_center_distance", r.feature_center_distance);
  s.degree_exponent_quantile = rng.uniform();
  return s;
}

/// Parameters of one sample. Every value is uniform over its configured
/// range; in matched mode the shared roles come from sample_shared and only
/// the remaining parameters are drawn per generator.
inline DatasetConfig sample_params(const SweepConfig& cfg, GeneratorKind kind,
                                   std::uint64_t sample_index) {
  const ParamRanges& ranges = cfg.ranges_for(kind);
  Rng rng = Rng::child(cfg.master_seed, std::string("params/") + std::string(generator_name(kind)),
                       sample_index);
  DatasetConfig out;
  out.generator = default_params(kind);
  out.split = cfg.split;

  if (!cfg.matched) {
    for (const auto& [key, r] : ranges) detail::assign(out, key, detail::draw(rng, key, r));
    if (auto* sbm = std::get_if<SbmParams>(&out.generator)) {
      const Range avg = detail::range_or(ranges, "avg_degree", {1, 32});
      if (sbm->avg_degree < static_cast<double>(sbm->min_degree)) {
        sbm->avg_degree =
            rng.uniform(std::max(avg.lo, static_cast<double>(sbm->min_degree)), avg.hi);
        sbm->avg_degree = std::max(sbm->avg_degree, static_cast<double>(sbm->min_degree));
      }
    }
    return out;
  }

  const SharedDraw shared = sample_shared(cfg, sample_index);
  ExponentRanges exps;
  if (kind == GeneratorKind::kSbm) {
    const Range e = detail::range_or(ranges, "exponent", {0.2, 3.0});
    exps.sbm_lo = e.lo;
    exps.sbm_hi = e.hi;
  } else if (kind == GeneratorKind::kLfr) {
    const Range e = detail::range_or(ranges, "exponent", {2.0, 3.0});
    exps.lfr_lo = e.lo;
    exps.lfr_hi = e.hi;
  }
  const MatchedParams matched = map_shared_to_generator(shared, exps);
  out.features.center_distance = shared.feature_center_distance;
  out.features.dim = static_cast<std::int64_t>(
      detail::draw(rng, "feature_dim", detail::range_or(ranges, "feature_dim", {16, 16})));

  switch (kind) {
    case GeneratorKind::kSbm: {
      SbmParams p = matched.sbm;
      const Range md = detail::range_or(ranges, "min_degree", {2, 20});
      p.min_degree = static_cast<std::int64_t>(
          detail::draw(rng, "min_degree", {md.lo, std::min(md.hi, std::floor(p.avg_degree))}));
      out.generator = p;
      break;
    }
    case GeneratorKind::kCabam:
      out.generator = matched.cabam;
      break;
    case GeneratorKind::kLfr: {
      LfrParams p = matched.lfr;
      DatasetConfig tmp;
      tmp.generator = p;
      for (const char* key : {"max_degree_proportion", "min_community_size_proportion",
                              "max_community_size_proportion", "community_exponent",
                              "num_tries"}) {
        if (const Range* r = find_range(ranges, key)) {
          detail::assign(tmp, key, detail::draw(rng, key, *r));
        }
      }
      out.generator = tmp.generator;
      break;
    }
  }
  return out;
}

struct ResultRow {
  std::string generator;
  std::uint64_t sample_index = 0;
  std::uint64_t seed = 0;
  ParamList params;
  GraphMetrics metrics;
  /// Model name -> ROC-AUC-OvR on the test split.
  std::vector<std::pair<std::string, double>> scores;
  bool ok = true;
  std::optional<ErrorCode> failure;
  std::string failure_message;
  ParamList diagnostics;
  std::optional<double> wall_time_ms;

  std::optional<double> score(std::string_view model) const {
    for (const auto& [name, auc] : scores) {
      if (name == model) return auc;
    }
    return std::nullopt;
  }

  std::optional<double> param(std::string_view key) const {
    for (const auto& [name, value] : params) {
      if (name == key) return value;
    }
    return std::nullopt;
  }
};

inline std::uint64_t sample_seed(std::uint64_t master, GeneratorKind kind, std::uint64_t index) {
  return derive_seed(master, std::string("sample/") + std::string(generator_name(kind)), index);
}

/// Generates, measures, and (optionally) scores one sample. Generation
/// failures become failure rows; they are never resampled.
inline ResultRow run_sample(const SweepConfig& cfg, GeneratorKind kind, std::uint64_t index,
                            GeneratedDataset* dataset_out = nullptr) {
  const auto start = std::chrono::steady_clock::now();
  ResultRow row;
  row.generator = std::string(generator_name(kind));
  row.sample_index = index;
  row.seed = sample_seed(cfg.master_seed, kind, index);
  const DatasetConfig params = sample_params(cfg, kind, index);
  row.params = flatten(params);
  try {
    GeneratedDataset d = build_dataset(params, row.seed, index, {.adaptive_split = true});
    row.params = flatten(d.meta.config);
    row.diagnostics = d.meta.diagnostics;
    row.metrics = compute_all(d.graph, d.communities);
    if (cfg.baseline) {
      try {
        const ScoreMatrix s = ppr_classifier(d, cfg.ppr);
        row.scores.emplace_back("ppr", roc_auc_ovr(s, d.communities, d.split.test).macro);
      } catch (const Error&) {
        // Undefined AUC leaves the score absent.
      }
    }
    if (dataset_out) *dataset_out = std::move(d);
  } catch (const Error& e) {
    row.ok = false;
    row.failure = e.code();
    row.failure_message = e.what();
    row.metrics = {};
  }
  if (cfg.record_timing) {
    row.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
  }
  return row;
}

/// Raised when the row sink fails; rows before `cursor` were delivered.
class SweepAborted : public Error {
 public:
  SweepAborted(std::size_t cursor, const std::string& what)
      : Error(ErrorCode::kIoError, what), cursor_(cursor) {}
  std::size_t cursor() const noexcept { return cursor_; }

 private:
  std::size_t cursor_;
};

struct SweepHooks {
  /// Receives rows in (generator, sample index) order.
  std::function<void(const ResultRow&)> on_row;
  /// Called from worker threads for successful samples when set.
  std::function<void(const ResultRow&, const GeneratedDataset&)> on_dataset;
};

/// Runs every (generator, sample index) pair, starting at global position
/// `start` in generator-major order. Output order is independent of
/// `workers`.
inline std::size_t run_sweep(const SweepConfig& cfg, const SweepHooks& hooks,
                             std::size_t workers = 1, std::size_t start = 0) {
  cfg.validate();
  const std::size_t per = cfg.samples_per_generator;
  const std::size_t total = cfg.generators.size() * per;
  if (start >= total) return total;

  auto work = [&](std::size_t pos) {
    const GeneratorKind kind = cfg.generators[pos / per];
    const std::uint64_t index = pos % per;
    if (hooks.on_dataset) {
      GeneratedDataset d;
      ResultRow row = run_sample(cfg, kind, index, &d);
      if (row.ok) hooks.on_dataset(row, d);
      return row;
    }
    return run_sample(cfg, kind, index);
  };

  auto emit = [&](std::size_t pos, const ResultRow& row) {
    try {
      if (hooks.on_row) hooks.on_row(row);
    } catch (const std::exception& e) {
      throw SweepAborted(pos, e.what());
    }
  };

  if (workers <= 1) {
    for (std::size_t pos = start; pos < total; ++pos) emit(pos, work(pos));
    return total;
  }

  std::vector<std::optional<ResultRow>> done(total - start);
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{start};
  std::atomic<bool> stop{false};
  std::exception_ptr worker_error;

  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t pos = next.fetch_add(1);
        if (pos >= total || stop) break;
        try {
          ResultRow row = work(pos);
          std::lock_guard lock(mu);
          done[pos - start] = std::move(row);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!worker_error) worker_error = std::current_exception();
          stop = true;
        }
        ready.notify_all();
      }
    });
  }

  std::exception_ptr emit_error;
  for (std::size_t pos = start; pos < total; ++pos) {
    std::optional<ResultRow> row;
    {
      std::unique_lock lock(mu);
      ready.wait(lock, [&] { return done[pos - start].has_value() || stop.load(); });
      if (!done[pos - start]) break;
      row = std::move(done[pos - start]);
      done[pos - start].reset();
    }
    try {
      emit(pos, *row);
    } catch (...) {
      emit_error = std::current_exception();
      stop = true;
      break;
    }
  }
  stop = true;
  ready.notify_all();
  for (auto& t : pool) t.join();
  if (emit_error) std::rethrow_exception(emit_error);
  if (worker_error) std::rethrow_exception(worker_error);
  return total;
}

/// Collects all rows in memory.
inline std::vector<ResultRow> run_sweep(const SweepConfig& cfg, std::size_t workers = 1) {
  std::vector<ResultRow> rows;
  SweepHooks hooks;
  hooks.on_row = [&](const ResultRow& r) { rows.push_back(r); };
  run_sweep(cfg, hooks, workers);
  return rows;
}

struct KdeCurve {
  std::string metric;
  std::vector<double> grid;
  std::vector<double> density;
  double bandwidth = 0.0;
};

/// Scott's bandwidth sigma * m^(-1/5), sigma the sample standard deviation.
inline double scott_bandwidth(std::span<const double> values) {
  const auto m = static_cast<double>(values.size());
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= m;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / (m - 1.0)) * std::pow(m, -0.2);
}

/// Gaussian KDE with Scott's bandwidth on a uniform grid over
/// [grid_min, grid_max].
inline KdeCurve kde(std::span<const double> values, double grid_min, double grid_max,
                    std::size_t points = 256) {
  if (values.size() < 2) throw Error(ErrorCode::kDegenerateSample, "need at least two values");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kDegenerateSample, "non-finite value");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  if (*lo == *hi) throw Error(ErrorCode::kDegenerateSample, "values have zero spread");
  if (!(grid_max > grid_min) || points < 2) {
    throw Error(ErrorCode::kInvalidParams, "grid must have positive width");
  }

  KdeCurve curve;
  curve.bandwidth = scott_bandwidth(values);
  const double h = curve.bandwidth;
  const double norm = 1.0 / (static_cast<double>(values.size()) * h * std::sqrt(2.0 * std::numbers::pi));
  curve.grid.resize(points);
  curve.density.resize(points);
  for (std::size_t i = 0; i < points; ++i) {
    // Offsets are taken from the nearer end so that a symmetric grid is
    // exactly symmetric.
    const double width = grid_max - grid_min;
    const auto last = static_cast<double>(points - 1);
    const double x = i * 2 < points
                         ? grid_min + width * static_cast<double>(i) / last
                         : grid_max - width * static_cast<double>(points - 1 - i) / last;
    double sum = 0.0;
    for (double v : values) {
      const double z = (x - v) / h;
      sum += std::exp(-0.5 * z * z);
    }
    curve.grid[i] = x;
    curve.density[i] = sum * norm;
  }
  return curve;
}

/// Grid that covers every value plus four bandwidths on each side.
inline std::pair<double, double> kde_support(std::span<const double> values) {
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  const double pad = 4.0 * scott_bandwidth(values);
  return {*lo - pad, *hi + pad};
}

struct CurvePoint {
  std::string generator;
  double bucket_center = 0.0;
  std::optional<double> mean_auc;
  std::size_t count = 0;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Value of a metric or sampled parameter in a row.
inline std::optional<double> row_value(const ResultRow& row, std::string_view name) {
  if (const MetricValue* m = row.metrics.find(name)) return m->value;
  return row.param(name);
}

struct GeneratorKde {
  std::string generator;
  KdeCurve curve;
};

/// One KDE per generator on a shared grid covering every generator's
/// support. Generators whose values are degenerate are listed in `skipped`.
inline std::vector<GeneratorKde> kde_by_generator(std::span<const ResultRow> rows,
                                                  std::string_view metric,
                                                  std::vector<std::string>* skipped = nullptr,
                                                  std::size_t points = 256) {
  const bool is_metric = GraphMetrics{}.find(metric) != nullptr;
  bool known = is_metric;
  std::vector<std::string> generators;
  std::vector<std::vector<double>> values;
  for (const ResultRow& row : rows) {
    if (!is_metric && row.param(metric)) known = true;
    auto it = std::find(generators.begin(), generators.end(), row.generator);
    if (it == generators.end()) {
      it = generators.insert(generators.end(), row.generator);
      values.emplace_back();
    }
    if (!row.ok) continue;
    if (const auto x = row_value(row, metric)) {
      values[static_cast<std::size_t>(it - generators.begin())].push_back(*x);
    }
  }
  if (!known) throw Error(ErrorCode::kInvalidQuery, "unknown metric '" + std::string(metric) + "'");

  double lo = 0.0;
  double hi = 0.0;
  std::vector<std::size_t> usable;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const auto& v = values[g];
    const bool spread = v.size() >= 2 && *std::min_element(v.begin(), v.end()) <
                                             *std::max_element(v.begin(), v.end());
    if (!spread) {
      if (skipped) skipped->push_back(generators[g]);
      continue;
    }
    const auto [a, b] = kde_support(v);
    lo = usable.empty() ? a : std::min(lo, a);
    hi = usable.empty() ? b : std::max(hi, b);
    usable.push_back(g);
  }
  if (usable.empty()) {
    throw Error(ErrorCode::kDegenerateSample,
                "no generator has two or more distinct values of '" + std::string(metric) + "'");
  }
  std::vector<GeneratorKde> out;
  for (std::size_t g : usable) {
    GeneratorKde entry{generators[g], kde(values[g], lo, hi, points)};
    entry.curve.metric = std::string(metric);
    out.push_back(std::move(entry));
  }
  return out;
}

/// Mean AUC per generator over equal-width buckets of `metric` spanning the
/// observed range of rows that carry both the metric and the model score.
inline std::vector<CurvePoint> performance_curves(std::span<const ResultRow> rows,
                                                  std::string_view metric, std::string_view model,
                                                  std::size_t buckets = 20) {
  if (buckets == 0) throw Error(ErrorCode::kInvalidQuery, "bucket count must be positive");
  const bool is_metric = GraphMetrics{}.find(metric) != nullptr;
  bool metric_seen = is_metric;
  bool model_seen = false;
  std::vector<std::string> generators;
  struct Point {
    std::size_t generator;
    double x;
    double auc;
  };
  std::vector<Point> points;
  for (const ResultRow& row : rows) {
    if (!is_metric && row.param(metric)) metric_seen = true;
    const auto auc = row.score(model);
    if (auc) model_seen = true;
    if (!row.ok) continue;
    const auto x = row_value(row, metric);
    if (!x || !auc) continue;
    auto it = std::find(generators.begin(), generators.end(), row.generator);
    if (it == generators.end()) it = generators.insert(generators.end(), row.generator);
    points.push_back({static_cast<std::size_t>(it - generators.begin()), *x, *auc});
  }
  if (!metric_seen) {
    throw Error(ErrorCode::kInvalidQuery, "unknown metric '" + std::string(metric) + "'");
  }
  if (!model_seen) {
    throw Error(ErrorCode::kInvalidQuery, "unknown model '" + std::string(model) + "'");
  }
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidQuery, "no rows carry both the metric and the model score");
  }

  double lo = points.front().x;
  double hi = lo;
  for (const auto& p : points) {
    lo = std::min(lo, p.x);
    hi = std::max(hi, p.x);
  }
  const double width = (hi - lo) / static_cast<double>(buckets);
  std::vector<double> sum(generators.size() * buckets, 0.0);
  std::vector<std::size_t> count(generators.size() * buckets, 0);
  for (const auto& p : points) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = std::min(buckets - 1, static_cast<std::size_t>(std::floor((p.x - lo) / width)));
    }
    sum[p.generator * buckets + b] += p.auc;
    ++count[p.generator * buckets + b];
  }

  std::vector<CurvePoint> out;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    for (std::size_t b = 0; b < buckets; ++b) {
      CurvePoint cp;
      cp.generator = generators[g];
      cp.bucket_center = lo + (static_cast<double>(b) + 0.5) * width;
      cp.count = count[g * buckets + b];
      if (cp.count > 0) cp.mean_auc = sum[g * buckets + b] / static_cast<double>(cp.count);
      out.push_back(std::move(cp));
    }
  }
  return out;
}

}  // namespace graphforge
