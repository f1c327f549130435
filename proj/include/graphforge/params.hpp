#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "graphforge/error.hpp"

namespace graphforge {

/// Ordered key -> value list used for metadata and result rows.
using ParamList = std::vector<std::pair<std::string, double>>;

enum class GeneratorKind { kSbm, kCabam, kLfr };

inline constexpr std::string_view generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kSbm: return "sbm";
    case GeneratorKind::kCabam: return "cabam";
    case GeneratorKind::kLfr: return "lfr";
  }
  return "unknown";
}

inline GeneratorKind parse_generator(std::string_view name) {
  if (name == "sbm") return GeneratorKind::kSbm;
  if (name == "cabam") return GeneratorKind::kCabam;
  if (name == "lfr") return GeneratorKind::kLfr;
  throw Error(ErrorCode::kInvalidParams, "unknown generator '" + std::string(name) + "'");
}

namespace detail {
inline void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidParams, what);
}
}  // namespace detail

// Each parameter record exposes its scalar fields through visit_fields so
// that serialization and config parsing share one field list. Field names
// are the snake_case parameter names used in config files.

/// Degree-corrected stochastic block model.
struct SbmParams {
  std::int64_t nvertex = 2562;
  double avg_degree = 16.5;
  std::int64_t min_degree = 11;
  double pq_ratio = 8.5;
  double degree_exponent = 1.6;
  std::int64_t num_clusters = 6;
  double cluster_size_slope = 0.5;
  std::optional<std::vector<std::size_t>> fixed_community_sizes;

  template <typename Self, typename Visitor>
  static void visit_fields(Self& self, Visitor&& v) {
    v("nvertex", self.nvertex);
    v("avg_degree", self.avg_degree);
    v("min_degree", self.min_degree);
    v("pq_ratio", self.pq_ratio);
    v("exponent", self.degree_exponent);
    v("num_clusters", self.num_clusters);
    v("cluster_size_slope", self.cluster_size_slope);
  }

  void validate() const {
    using detail::require;
    if (fixed_community_sizes) {
      std::size_t total = 0;
      for (auto s : *fixed_community_sizes) {
        require(s > 0, "fixed community sizes must be positive");
        total += s;
      }
      require(total == static_cast<std::size_t>(nvertex),
              "fixed community sizes must sum to nvertex");
      require(fixed_community_sizes->size() >= 1, "fixed community sizes must be nonempty");
    } else {
      require(num_clusters >= 2, "num_clusters must be >= 2");
      require(nvertex >= num_clusters, "nvertex must be >= num_clusters");
      require(cluster_size_slope >= 0.0 && cluster_size_slope <= 1.0,
              "cluster_size_slope must lie in [0, 1]");
    }
    require(nvertex >= 2, "nvertex must be >= 2");
    require(avg_degree > 0.0 && avg_degree < static_cast<double>(nvertex),
            "avg_degree must lie in (0, nvertex)");
    require(min_degree >= 1, "min_degree must be >= 1");
    require(avg_degree >= static_cast<double>(min_degree), "avg_degree must be >= min_degree");
    require(pq_ratio >= 1.0, "pq_ratio must be >= 1");
    require(degree_exponent > 0.0, "exponent must be positive");
  }
};

/// Class-assortative preferential attachment.
struct CabamParams {
  std::int64_t nvertex = 2562;
  std::int64_t min_degree = 11;
  double intra_link_strength = 0.75;
  std::int64_t num_clusters = 6;
  double cluster_size_slope = 0.5;
  std::optional<std::vector<std::size_t>> fixed_community_sizes;

  template <typename Self, typename Visitor>
  static void visit_fields(Self& self, Visitor&& v) {
    v("nvertex", self.nvertex);
    v("min_degree", self.min_degree);
    v("intra_link_strength", self.intra_link_strength);
    v("num_clusters", self.num_clusters);
    v("cluster_size_slope", self.cluster_size_slope);
  }

  void validate() const {
    using detail::require;
    require(min_degree >= 1, "min_degree must be >= 1");
    require(nvertex > min_degree + 1, "nvertex must exceed min_degree + 1");
    require(intra_link_strength >= 0.5 && intra_link_strength <= 1.0,
            "intra_link_strength must lie in [0.5, 1]");
    if (fixed_community_sizes) {
      std::size_t total = 0;
      for (auto s : *fixed_community_sizes) {
        require(s > 0, "fixed community sizes must be positive");
        total += s;
      }
      require(total == static_cast<std::size_t>(nvertex),
              "fixed community sizes must sum to nvertex");
    } else {
      require(num_clusters >= 1, "num_clusters must be >= 1");
      require(nvertex >= num_clusters, "nvertex must be >= num_clusters");
      require(cluster_size_slope >= 0.0 && cluster_size_slope <= 1.0,
              "cluster_size_slope must lie in [0, 1]");
    }
  }
};

/// LFR benchmark. max_degree_proportion is a percentage of nvertex.
struct LfrParams {
  std::int64_t nvertex = 2562;
  double avg_degree = 16.5;
  double max_degree_proportion = 11.0;
  double mixing_param = 0.5;
  double min_community_proportion = 0.06625;
  double max_community_proportion = 0.29;
  double community_exponent = 1.5;
  double degree_exponent = 2.5;
  std::int64_t num_tries = 20;

  template <typename Self, typename Visitor>
  static void visit_fields(Self& self, Visitor&& v) {
    v("nvertex", self.nvertex);
    v("avg_degree", self.avg_degree);
    v("max_degree_proportion", self.max_degree_proportion);
    v("mixing_param", self.mixing_param);
    v("min_community_size_proportion", self.min_community_proportion);
    v("max_community_size_proportion", self.max_community_proportion);
    v("community_exponent", self.community_exponent);
    v("exponent", self.degree_exponent);
    v("num_tries", self.num_tries);
  }

  void validate() const {
    using detail::require;
    require(nvertex >= 2, "nvertex must be >= 2");
    require(avg_degree > 0.0, "avg_degree must be positive");
    require(max_degree_proportion > 0.0 && max_degree_proportion <= 100.0,
            "max_degree_proportion must lie in (0, 100]");
    require(mixing_param >= 0.0 && mixing_param <= 1.0, "mixing_param must lie in [0, 1]");
    require(min_community_proportion > 0.0, "min_community_size_proportion must be positive");
    require(min_community_proportion <= max_community_proportion,
            "min_community_size_proportion must not exceed max_community_size_proportion");
    require(max_community_proportion <= 1.0, "max_community_size_proportion must be <= 1");
    require(community_exponent >= 1.0 && community_exponent <= 2.0,
            "community_exponent must lie in [1, 2]");
    require(degree_exponent >= 2.0 && degree_exponent <= 3.0, "exponent must lie in [2, 3]");
    require(num_tries >= 1, "num_tries must be >= 1");
  }
};

using GeneratorParams = std::variant<SbmParams, CabamParams, LfrParams>;

inline GeneratorKind kind_of(const GeneratorParams& p) {
  return static_cast<GeneratorKind>(p.index());
}

inline GeneratorParams default_params(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kSbm: return SbmParams{};
    case GeneratorKind::kCabam: return CabamParams{};
    case GeneratorKind::kLfr: return LfrParams{};
  }
  return SbmParams{};
}

inline void validate(const GeneratorParams& p) {
  std::visit([](const auto& q) { q.validate(); }, p);
}

/// Community-conditioned Gaussian features.
struct FeatureParams {
  double center_distance = 1.0;  // variance of the community centers
  std::int64_t dim = 16;

  template <typename Self, typename Visitor>
  static void visit_fields(Self& self, Visitor&& v) {
    v("feature_center_distance", self.center_distance);
    v("feature_dim", self.dim);
  }

  void validate() const {
    detail::require(dim >= 1, "feature_dim must be >= 1");
    detail::require(center_distance >= 0.0, "feature_center_distance must be >= 0");
  }
};

struct SplitParams {
  std::int64_t train_per_class = 10;
  std::int64_t val_per_class = 10;

  template <typename Self, typename Visitor>
  static void visit_fields(Self& self, Visitor&& v) {
    v("train_per_class", self.train_per_class);
    v("val_per_class", self.val_per_class);
  }

  void validate() const {
    detail::require(train_per_class >= 1, "train_per_class must be >= 1");
    detail::require(val_per_class >= 0, "val_per_class must be >= 0");
  }
};

/// Everything needed to build one dataset, besides the seed.
struct DatasetConfig {
  GeneratorParams generator = SbmParams{};
  FeatureParams features;
  SplitParams split;

  void validate() const {
    graphforge::validate(generator);
    features.validate();
    split.validate();
  }
};

template <typename Record>
void append_fields(const Record& r, ParamList& out) {
  Record::visit_fields(r, [&](std::string_view key, const auto& value) {
    out.emplace_back(std::string(key), static_cast<double>(value));
  });
}

/// Flat, ordered view of every scalar parameter in the config.
inline ParamList flatten(const DatasetConfig& cfg) {
  ParamList out;
  std::visit([&](const auto& p) { append_fields(p, out); }, cfg.generator);
  append_fields(cfg.features, out);
  append_fields(cfg.split, out);
  return out;
}

}  // namespace graphforge
