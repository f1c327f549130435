#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graphforge/error.hpp"
#include "graphforge/generators.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"

namespace graphforge {

/// Node features: each community gets a center drawn from N(0, center_distance * I);
/// each node is its community center plus N(0, I) noise.
inline NodeFeatures generate_features(const CommunityAssignment& c, const FeatureParams& fp,
                                      Rng& rng) {
  fp.validate();
  const auto dim = static_cast<std::size_t>(fp.dim);
  const double center_sd = std::sqrt(fp.center_distance);
  std::vector<double> centers(c.num_communities() * dim);
  for (auto& x : centers) x = center_sd * rng.normal();
  NodeFeatures features(c.size(), dim);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double* center = &centers[c[i] * dim];
    auto row = features.row(i);
    for (std::size_t j = 0; j < dim; ++j) row[j] = center[j] + rng.normal();
  }
  return features;
}

/// Per-class uniform train/val sample; all other nodes are test.
inline DataSplit make_split(const CommunityAssignment& c, std::size_t per_class_train,
                            std::size_t per_class_val, Rng& rng) {
  std::vector<std::vector<NodeId>> members(c.num_communities());
  for (std::size_t i = 0; i < c.size(); ++i) members[c[i]].push_back(static_cast<NodeId>(i));
  DataSplit split;
  for (std::size_t k = 0; k < members.size(); ++k) {
    auto& m = members[k];
    if (m.size() < per_class_train + per_class_val + 1) {
      throw Error(ErrorCode::kInfeasibleSplit,
                  "community " + std::to_string(k) + " has " + std::to_string(m.size()) +
                      " nodes, needs " + std::to_string(per_class_train + per_class_val + 1));
    }
    rng.shuffle(m);
    split.train.insert(split.train.end(), m.begin(),
                       m.begin() + static_cast<std::ptrdiff_t>(per_class_train));
    split.val.insert(split.val.end(), m.begin() + static_cast<std::ptrdiff_t>(per_class_train),
                     m.begin() + static_cast<std::ptrdiff_t>(per_class_train + per_class_val));
    split.test.insert(split.test.end(),
                      m.begin() + static_cast<std::ptrdiff_t>(per_class_train + per_class_val),
                      m.end());
  }
  std::sort(split.train.begin(), split.train.end());
  std::sort(split.val.begin(), split.val.end());
  std::sort(split.test.begin(), split.test.end());
  return split;
}

struct DatasetMeta {
  std::string generator;
  DatasetConfig config;
  std::uint64_t seed = 0;
  std::uint64_t sample_index = 0;
  std::size_t edges_dropped = 0;
  ParamList diagnostics;
};

struct GeneratedDataset {
  Graph graph;
  CommunityAssignment communities;
  NodeFeatures features;
  DataSplit split;
  DatasetMeta meta;
};

struct BuildOptions {
  /// Shrink the per-class split counts (equally for every class) to fit
  /// the smallest community instead of failing with InfeasibleSplit.
  bool adaptive_split = false;
};

/// Deterministic dataset construction from (config, seed, sample_index).
/// Graph, features, and split draw from separate derived streams.
inline GeneratedDataset build_dataset(const DatasetConfig& cfg, std::uint64_t seed,
                                      std::uint64_t sample_index, BuildOptions options = {}) {
  cfg.validate();
  const std::string gen(generator_name(kind_of(cfg.generator)));

  Rng graph_rng = Rng::child(seed, "graph/" + gen, sample_index);
  GeneratedGraph generated = generate(cfg.generator, graph_rng);

  Rng feature_rng = Rng::child(seed, "features", sample_index);
  NodeFeatures features = generate_features(generated.communities, cfg.features, feature_rng);

  auto train = static_cast<std::size_t>(cfg.split.train_per_class);
  auto val = static_cast<std::size_t>(cfg.split.val_per_class);
  if (options.adaptive_split) {
    const auto sizes = community_sizes(generated.communities);
    const std::size_t smallest = *std::min_element(sizes.begin(), sizes.end());
    if (smallest < train + val + 1) {
      const std::size_t budget = smallest > 0 ? (smallest - 1) / 2 : 0;
      train = std::max<std::size_t>(1, std::min(train, budget));
      val = std::min(val, budget);
    }
  }
  Rng split_rng = Rng::child(seed, "split", sample_index);
  DataSplit split = make_split(generated.communities, train, val, split_rng);

  DatasetMeta meta;
  meta.generator = gen;
  // Record the split counts actually used so that the meta alone rebuilds
  // the dataset.
  meta.config = cfg;
  meta.config.split.train_per_class = static_cast<std::int64_t>(train);
  meta.config.split.val_per_class = static_cast<std::int64_t>(val);
  meta.seed = seed;
  meta.sample_index = sample_index;
  for (const auto& [key, value] : generated.diagnostics) {
    if (key == "edges_dropped") meta.edges_dropped = static_cast<std::size_t>(value);
  }
  meta.diagnostics = std::move(generated.diagnostics);

  return GeneratedDataset{std::move(generated.graph), std::move(generated.communities),
                          std::move(features), std::move(split), std::move(meta)};
}

}  // namespace graphforge
