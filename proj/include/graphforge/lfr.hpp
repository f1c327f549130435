#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "graphforge/error.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"
#include "graphforge/sampling.hpp"

namespace graphforge {

/// Lower cutoff of a power law truncated at max_degree whose mean is
/// avg_degree. Clamped at 1 when even a cutoff of 1 overshoots the mean.
inline double solve_lfr_min_degree(double exponent, double avg_degree, double max_degree) {
  if (avg_degree > max_degree) {
    throw Error(ErrorCode::kInvalidParams, "avg_degree exceeds the maximum degree");
  }
  if (TruncatedPowerLaw(exponent, 1.0, max_degree).mean() >= avg_degree) return 1.0;
  double lo = 1.0;
  double hi = max_degree;
  for (int it = 0; it < 200 && hi - lo > 1e-12 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (TruncatedPowerLaw(exponent, mid, max_degree).mean() < avg_degree) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

namespace detail {

inline std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// Degree-preserving repair of a configuration-model edge list. Self loops,
// parallel edges, and edges rejected by `allowed` are resolved by swapping
// endpoints with random partner edges; whatever is still invalid after
// `max_rounds` passes is removed. Returns the number of removed edges.
template <typename Allowed>
std::size_t repair_edges(std::vector<Edge>& edges, Allowed&& allowed, Rng& rng,
                         int max_rounds = 64) {
  if (edges.empty()) return 0;
  std::unordered_map<std::uint64_t, int> count;
  count.reserve(edges.size() * 2);
  for (const Edge& e : edges) ++count[edge_key(e.u, e.v)];

  auto valid = [&](NodeId a, NodeId b) { return a != b && allowed(a, b); };
  auto bad = [&](const Edge& e) { return !valid(e.u, e.v) || count[edge_key(e.u, e.v)] > 1; };

  std::vector<std::size_t> pending;
  for (int round = 0; round < max_rounds; ++round) {
    pending.clear();
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (bad(edges[i])) pending.push_back(i);
    }
    if (pending.empty()) break;
    for (std::size_t i : pending) {
      if (!bad(edges[i])) continue;
      for (int attempt = 0; attempt < 16; ++attempt) {
        const std::size_t j = rng.index(edges.size());
        if (j == i) continue;
        const Edge a = edges[i];
        const Edge b = edges[j];
        Edge x{a.u, b.u};
        Edge y{a.v, b.v};
        if (rng.bernoulli(0.5)) {
          x = {a.u, b.v};
          y = {a.v, b.u};
        }
        if (!valid(x.u, x.v) || !valid(y.u, y.v)) continue;
        const auto kx = edge_key(x.u, x.v);
        const auto ky = edge_key(y.u, y.v);
        if (kx == ky) continue;
        --count[edge_key(a.u, a.v)];
        --count[edge_key(b.u, b.v)];
        if (count[kx] > 0 || count[ky] > 0) {
          ++count[edge_key(a.u, a.v)];
          ++count[edge_key(b.u, b.v)];
          continue;
        }
        ++count[kx];
        ++count[ky];
        edges[i] = x;
        edges[j] = y;
        break;
      }
    }
  }

  std::size_t removed = 0;
  std::size_t kept = 0;
  for (const Edge& e : edges) {
    auto& c = count[edge_key(e.u, e.v)];
    if (!valid(e.u, e.v)) {
      --c;
      ++removed;
      continue;
    }
    if (c > 1) {
      --c;
      ++removed;
      continue;
    }
    edges[kept++] = e;
  }
  edges.resize(kept);
  return removed;
}

// Pairs shuffled stubs. Stub count must be even.
inline std::vector<Edge> pair_stubs(std::vector<NodeId>& stubs, Rng& rng) {
  rng.shuffle(stubs);
  std::vector<Edge> edges;
  edges.reserve(stubs.size() / 2);
  for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) edges.push_back({stubs[i], stubs[i + 1]});
  return edges;
}

struct LfrAttempt {
  std::vector<std::uint32_t> labels;
  std::size_t num_communities = 0;
  std::vector<Edge> edges;
  std::size_t removed = 0;
};

inline std::optional<LfrAttempt> attempt_lfr(const LfrParams& p, double min_degree,
                                             std::size_t max_degree, std::size_t min_size,
                                             std::size_t max_size, Rng& rng) {
  const auto n = static_cast<std::size_t>(p.nvertex);

  // Degrees.
  const TruncatedPowerLaw degree_law(p.degree_exponent, min_degree,
                                     static_cast<double>(max_degree));
  std::vector<std::size_t> degree(n);
  std::size_t degree_sum = 0;
  for (auto& d : degree) {
    d = std::clamp<std::size_t>(static_cast<std::size_t>(std::llround(degree_law.sample(rng))), 1,
                                max_degree);
    degree_sum += d;
  }
  if (degree_sum % 2 == 1) {
    const std::size_t start = rng.index(n);
    std::size_t v = start;
    while (degree[v] >= max_degree && (v = (v + 1) % n) != start) {
    }
    if (degree[v] < max_degree) {
      ++degree[v];
    } else {
      --degree[v];  // every node sits at max_degree
    }
  }

  std::vector<std::size_t> internal(n);
  for (std::size_t v = 0; v < n; ++v) {
    internal[v] = static_cast<std::size_t>(
        std::llround((1.0 - p.mixing_param) * static_cast<double>(degree[v])));
  }

  // Community sizes.
  const TruncatedPowerLaw size_law(p.community_exponent, static_cast<double>(min_size),
                                   static_cast<double>(max_size));
  std::vector<std::size_t> sizes;
  std::size_t total = 0;
  while (total < n) {
    const auto s = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::llround(size_law.sample(rng))), min_size, max_size);
    sizes.push_back(s);
    total += s;
  }
  for (std::size_t c = sizes.size(); c-- > 0 && total > n;) {
    const std::size_t cut = std::min(total - n, sizes[c] - min_size);
    sizes[c] -= cut;
    total -= cut;
  }
  if (total != n) return std::nullopt;
  const std::size_t k = sizes.size();

  // Membership: each node needs a community with room for its internal
  // degree. Full communities evict a random member, which is requeued.
  std::vector<std::size_t> by_size(k);
  std::iota(by_size.begin(), by_size.end(), 0);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](auto a, auto b) { return sizes[a] > sizes[b]; });
  std::vector<std::vector<NodeId>> members(k);
  std::vector<NodeId> queue(n);
  std::iota(queue.begin(), queue.end(), 0);
  rng.shuffle(queue);
  std::size_t reassignments = 0;
  const std::size_t reassignment_cap = 10 * n;
  while (!queue.empty()) {
    const NodeId v = queue.back();
    queue.pop_back();
    std::size_t feasible = 0;
    while (feasible < k && sizes[by_size[feasible]] > internal[v]) ++feasible;
    if (feasible == 0) return std::nullopt;
    const std::size_t c = by_size[rng.index(feasible)];
    if (members[c].size() < sizes[c]) {
      members[c].push_back(v);
      continue;
    }
    if (++reassignments > reassignment_cap) return std::nullopt;
    const std::size_t slot = rng.index(members[c].size());
    queue.push_back(members[c][slot]);
    members[c][slot] = v;
  }

  LfrAttempt out;
  out.num_communities = k;
  out.labels.assign(n, 0);
  for (std::size_t c = 0; c < k; ++c) {
    for (NodeId v : members[c]) out.labels[v] = static_cast<std::uint32_t>(c);
  }

  // Internal stubs must pair up inside each community; fix odd totals by
  // moving one stub between a member's internal and external share.
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t stub_total = 0;
    for (NodeId v : members[c]) stub_total += internal[v];
    if (stub_total % 2 == 0) continue;
    bool fixed = false;
    for (NodeId v : members[c]) {
      if (internal[v] < degree[v] && internal[v] + 1 < members[c].size()) {
        ++internal[v];
        fixed = true;
        break;
      }
    }
    if (!fixed) {
      for (NodeId v : members[c]) {
        if (internal[v] > 0) {
          --internal[v];
          break;
        }
      }
    }
  }

  for (std::size_t c = 0; c < k; ++c) {
    std::vector<NodeId> stubs;
    for (NodeId v : members[c]) stubs.insert(stubs.end(), internal[v], v);
    std::vector<Edge> edges = pair_stubs(stubs, rng);
    out.removed += repair_edges(edges, [](NodeId, NodeId) { return true; }, rng);
    out.edges.insert(out.edges.end(), edges.begin(), edges.end());
  }

  std::vector<NodeId> stubs;
  for (std::size_t v = 0; v < n; ++v) {
    stubs.insert(stubs.end(), degree[v] - internal[v], static_cast<NodeId>(v));
  }
  std::vector<Edge> external = pair_stubs(stubs, rng);
  out.removed += repair_edges(
      external, [&](NodeId a, NodeId b) { return out.labels[a] != out.labels[b]; }, rng);
  out.edges.insert(out.edges.end(), external.begin(), external.end());
  return out;
}

}  // namespace detail

/// LFR benchmark graph.
///
/// Degrees follow a power law with exponent tau1 between a solved minimum
/// and max_degree_proportion percent of n; community sizes follow a power
/// law with exponent tau2 between the proportional bounds. Each node keeps
/// round((1 - mu) * degree) edges inside its community. Intra- and
/// inter-community edges come from separate configuration models repaired
/// by degree-preserving swaps. Throws GenerationFailed after num_tries
/// unsuccessful attempts.
inline GeneratedGraph generate_lfr(const LfrParams& p, Rng& rng) {
  p.validate();
  const auto n = static_cast<std::size_t>(p.nvertex);
  const auto max_degree = static_cast<std::size_t>(std::clamp<long long>(
      std::llround(p.max_degree_proportion / 100.0 * static_cast<double>(n)), 1,
      static_cast<long long>(n) - 1));
  const auto min_size =
      static_cast<std::size_t>(std::ceil(p.min_community_proportion * static_cast<double>(n)));
  const auto max_size =
      static_cast<std::size_t>(std::floor(p.max_community_proportion * static_cast<double>(n)));
  if (min_size < 1 || min_size > max_size || max_size > n) {
    throw Error(ErrorCode::kInvalidParams, "community size bounds are infeasible for nvertex");
  }
  const double min_degree =
      solve_lfr_min_degree(p.degree_exponent, p.avg_degree, static_cast<double>(max_degree));

  for (std::int64_t attempt = 0; attempt < p.num_tries; ++attempt) {
    Rng try_rng = rng.split("lfr/try");
    auto result = detail::attempt_lfr(p, min_degree, max_degree, min_size, max_size, try_rng);
    if (!result) continue;
    const std::size_t k = result->num_communities;
    GeneratedGraph out{Graph::from_edges(n, std::move(result->edges)),
                       CommunityAssignment(std::move(result->labels), k),
                       {}};
    out.diagnostics = {
        {"edges_dropped", static_cast<double>(result->removed + out.graph.dropped_edges())},
        {"tries", static_cast<double>(attempt + 1)},
        {"min_degree_cutoff", min_degree},
        {"max_degree", static_cast<double>(max_degree)}};
    return out;
  }
  throw Error(ErrorCode::kGenerationFailed,
              "no valid LFR graph after " + std::to_string(p.num_tries) + " tries");
}

}  // namespace graphforge
