#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "graphforge/error.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"
#include "graphforge/sampling.hpp"

namespace graphforge {

namespace detail {

inline std::uint32_t sample_label(std::span<const double> cumulative, Rng& rng) {
  const double u = rng.uniform() * cumulative.back();
  auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  if (it == cumulative.end()) --it;
  return static_cast<std::uint32_t>(it - cumulative.begin());
}

// One run of the growth process. Returns labels in the order they were drawn
// (before the size-rank remapping) and the edge list.
struct CabamRun {
  std::vector<std::uint32_t> labels;
  std::vector<Edge> edges;
};

inline CabamRun run_cabam(std::size_t n, std::size_t m, double intra,
                          std::span<const double> cumulative, Rng& rng) {
  const std::size_t k = cumulative.size();
  CabamRun run;
  run.labels.resize(n);
  run.edges.reserve(m * (m + 1) / 2 + m * (n - m - 1));

  std::vector<std::size_t> degree(n, 0);
  // Each node appears once per incident edge, so a uniform pick from
  // endpoints[c] selects a node of community c with probability
  // proportional to its degree.
  std::vector<std::vector<NodeId>> endpoints(k);

  for (std::size_t i = 0; i <= m; ++i) run.labels[i] = sample_label(cumulative, rng);
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = i + 1; j <= m; ++j) {
      run.edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
    }
    degree[i] = m;
    endpoints[run.labels[i]].insert(endpoints[run.labels[i]].end(), m, static_cast<NodeId>(i));
  }

  std::vector<NodeId> chosen;
  std::vector<double> community_weight(k);
  std::vector<double> node_weight;
  for (std::size_t t = m + 1; t < n; ++t) {
    const std::uint32_t label = sample_label(cumulative, rng);
    run.labels[t] = label;
    auto kernel = [&](std::uint32_t other) { return other == label ? intra : 1.0 - intra; };
    auto is_chosen = [&](NodeId v) {
      return std::find(chosen.begin(), chosen.end(), v) != chosen.end();
    };

    chosen.clear();
    double total = 0.0;
    for (std::size_t c = 0; c < k; ++c) {
      community_weight[c] = kernel(static_cast<std::uint32_t>(c)) *
                            static_cast<double>(endpoints[c].size());
      total += community_weight[c];
    }

    while (chosen.size() < m) {
      bool accepted = false;
      if (total > 0.0) {
        for (int attempt = 0; attempt < 64 && !accepted; ++attempt) {
          double u = rng.uniform() * total;
          std::size_t c = 0;
          while (c + 1 < k && u >= community_weight[c]) {
            u -= community_weight[c];
            ++c;
          }
          if (community_weight[c] == 0.0) continue;
          const NodeId v = endpoints[c][rng.index(endpoints[c].size())];
          if (!is_chosen(v)) {
            chosen.push_back(v);
            accepted = true;
          }
        }
      }
      if (accepted) continue;

      // Exact draw over the remaining candidates. Reached when the kernel
      // mass left outside `chosen` is small or zero; with zero mass the
      // pick falls back to plain preferential attachment.
      node_weight.assign(t, 0.0);
      double remaining = 0.0;
      for (std::size_t j = 0; j < t; ++j) {
        if (is_chosen(static_cast<NodeId>(j))) continue;
        node_weight[j] = static_cast<double>(degree[j]) * kernel(run.labels[j]);
        remaining += node_weight[j];
      }
      if (remaining <= 0.0) {
        for (std::size_t j = 0; j < t; ++j) {
          if (is_chosen(static_cast<NodeId>(j))) continue;
          node_weight[j] = static_cast<double>(degree[j]);
          remaining += node_weight[j];
        }
      }
      double u = rng.uniform() * remaining;
      std::size_t pick = t;
      for (std::size_t j = 0; j < t; ++j) {
        if (node_weight[j] <= 0.0) continue;
        pick = j;
        if (u < node_weight[j]) break;
        u -= node_weight[j];
      }
      chosen.push_back(static_cast<NodeId>(pick));
    }

    for (NodeId v : chosen) {
      run.edges.push_back({v, static_cast<NodeId>(t)});
      ++degree[v];
      endpoints[run.labels[v]].push_back(v);
    }
    degree[t] = m;
    endpoints[label].insert(endpoints[label].end(), m, static_cast<NodeId>(t));
  }
  return run;
}

}  // namespace detail

/// Class-assortative Barabasi-Albert growth.
///
/// Starts from a complete graph on m+1 nodes; every later node draws its
/// label from the target community-size distribution and attaches m
/// distinct edges with probability proportional to degree times
/// intra_link_strength (same label) or 1 - intra_link_strength (otherwise).
/// Realized labels are then renamed so that the i-th smallest realized
/// community carries the label of the i-th smallest target.
inline GeneratedGraph generate_cabam(const CabamParams& p, Rng& rng) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.nvertex);
  const auto m = static_cast<std::size_t>(p.min_degree);
  const std::vector<std::size_t> targets =
      p.fixed_community_sizes
          ? *p.fixed_community_sizes
          : sample_community_sizes(n, static_cast<std::size_t>(p.num_clusters),
                                   p.cluster_size_slope);
  const std::size_t k = targets.size();
  std::vector<double> cumulative(k);
  double acc = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    acc += static_cast<double>(targets[c]);
    cumulative[c] = acc;
  }

  constexpr int kMaxAttempts = 16;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Rng run_rng = rng.split("cabam/run");
    detail::CabamRun run = detail::run_cabam(n, m, p.intra_link_strength, cumulative, run_rng);

    std::vector<std::size_t> realized(k, 0);
    for (auto l : run.labels) ++realized[l];
    if (std::find(realized.begin(), realized.end(), 0) != realized.end()) continue;

    std::vector<std::uint32_t> realized_order(k);
    std::vector<std::uint32_t> target_order(k);
    std::iota(realized_order.begin(), realized_order.end(), 0);
    std::iota(target_order.begin(), target_order.end(), 0);
    std::stable_sort(realized_order.begin(), realized_order.end(),
                     [&](auto a, auto b) { return realized[a] < realized[b]; });
    std::stable_sort(target_order.begin(), target_order.end(),
                     [&](auto a, auto b) { return targets[a] < targets[b]; });
    std::vector<std::uint32_t> rename(k);
    for (std::size_t r = 0; r < k; ++r) rename[realized_order[r]] = target_order[r];
    for (auto& l : run.labels) l = rename[l];

    GeneratedGraph out{Graph::from_edges(n, std::move(run.edges)),
                       CommunityAssignment(std::move(run.labels), k),
                       {}};
    out.diagnostics = {{"edges_dropped", static_cast<double>(out.graph.dropped_edges())},
                       {"attempts", static_cast<double>(attempt + 1)}};
    return out;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "every CABAM attempt left at least one community empty");
}

}  // namespace graphforge
