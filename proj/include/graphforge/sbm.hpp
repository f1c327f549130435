#pragma once

#include <cstddef>
#include <vector>

#include "graphforge/error.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"
#include "graphforge/sampling.hpp"

namespace graphforge {

/// Inter-community probability scale omega_out such that the unclipped
/// expected number of edges is n * avg_degree / 2 when intra-community
/// pairs use pq_ratio * omega_out.
inline double solve_sbm_scale(std::span<const double> theta, const CommunityAssignment& c,
                              double avg_degree, double pq_ratio) {
  std::vector<double> block_sum(c.num_communities(), 0.0);
  std::vector<double> block_sq(c.num_communities(), 0.0);
  double total = 0.0;
  double total_sq = 0.0;
  for (std::size_t i = 0; i < theta.size(); ++i) {
    block_sum[c[i]] += theta[i];
    block_sq[c[i]] += theta[i] * theta[i];
    total += theta[i];
    total_sq += theta[i] * theta[i];
  }
  double intra = 0.0;
  for (std::size_t b = 0; b < block_sum.size(); ++b) {
    intra += 0.5 * (block_sum[b] * block_sum[b] - block_sq[b]);
  }
  const double all = 0.5 * (total * total - total_sq);
  const double inter = all - intra;
  const double expected_edges = 0.5 * static_cast<double>(theta.size()) * avg_degree;
  return expected_edges / (pq_ratio * intra + inter);
}

/// Degree-corrected SBM with independent Bernoulli edges.
///
/// Pair (i, j) is linked with probability min(1, theta_i * theta_j * omega),
/// omega being pq_ratio times larger inside a community. Communities are
/// consecutive id blocks. Throws InfeasibleParams when more than half of all
/// pairs would need clipping.
inline GeneratedGraph generate_sbm(const SbmParams& p, Rng& rng) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.nvertex);
  const std::vector<std::size_t> sizes =
      p.fixed_community_sizes
          ? *p.fixed_community_sizes
          : sample_community_sizes(n, static_cast<std::size_t>(p.num_clusters),
                                   p.cluster_size_slope);
  CommunityAssignment communities = block_assignment(sizes);

  Rng theta_rng = rng.split("sbm/propensities");
  Rng edge_rng = rng.split("sbm/edges");
  const std::vector<double> theta = sample_degree_propensities(
      n, p.degree_exponent, static_cast<std::size_t>(p.min_degree), p.avg_degree, theta_rng);

  const double omega_out = solve_sbm_scale(theta, communities, p.avg_degree, p.pq_ratio);
  const double omega_in = p.pq_ratio * omega_out;

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p.avg_degree * static_cast<double>(n) * 0.55) + 16);
  std::size_t clipped = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = theta[i];
    const auto ci = communities[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const double prob = ti * theta[j] * (communities[j] == ci ? omega_in : omega_out);
      if (prob >= 1.0) {
        ++clipped;
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
        continue;
      }
      if (edge_rng.uniform() < prob) {
        edges.push_back({static_cast<NodeId>(i), static_cast<NodeId>(j)});
      }
    }
  }
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  const double clip_fraction = static_cast<double>(clipped) / pairs;
  if (clip_fraction > 0.5) {
    throw Error(ErrorCode::kInfeasibleParams,
                "edge probabilities clip at 1 for more than half of all pairs");
  }

  GeneratedGraph out{Graph::from_edges(n, std::move(edges)), std::move(communities), {}};
  out.diagnostics = {{"edges_dropped", static_cast<double>(out.graph.dropped_edges())},
                     {"clipped_pair_fraction", clip_fraction},
                     {"omega_out", omega_out}};
  return out;
}

}  // namespace graphforge
