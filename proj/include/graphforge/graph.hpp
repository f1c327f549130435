#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graphforge/error.hpp"

namespace graphforge {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on nodes 0..n-1.
///
/// Edges are stored canonically (u < v) in sorted order, with a CSR
/// adjacency whose per-node neighbor lists are sorted ascending. Instances
/// are immutable once built.
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds a graph from an arbitrary edge list. Self loops are dropped,
  /// duplicates collapsed, and endpoints reordered so u < v; the number of
  /// input entries discarded this way is reported by dropped_edges().
  static Graph from_edges(std::size_t n, std::vector<Edge> edges) {
    Graph g;
    g.n_ = n;
    const std::size_t input_size = edges.size();
    std::size_t kept = 0;
    for (Edge e : edges) {
      if (e.u >= n || e.v >= n) {
        throw Error(ErrorCode::kInvalidParams,
                    "edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                        " out of range for n=" + std::to_string(n));
      }
      if (e.u == e.v) continue;
      if (e.u > e.v) std::swap(e.u, e.v);
      edges[kept++] = e;
    }
    edges.resize(kept);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    g.dropped_ = input_size - edges.size();
    g.edges_ = std::move(edges);

    g.offsets_.assign(n + 1, 0);
    for (const Edge& e : g.edges_) {
      ++g.offsets_[e.u + 1];
      ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.resize(2 * g.edges_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : g.edges_) {
      g.neighbors_[cursor[e.u]++] = e.v;
      g.neighbors_[cursor[e.v]++] = e.u;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i]),
                g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[i + 1]));
    }
    return g;
  }

  std::size_t num_nodes() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const NodeId> neighbors(NodeId u) const {
    return std::span<const NodeId>(neighbors_).subspan(offsets_[u],
                                                       offsets_[u + 1] - offsets_[u]);
  }

  std::size_t degree(NodeId u) const { return offsets_[u + 1] - offsets_[u]; }

  bool has_edge(NodeId u, NodeId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Input entries removed while building (self loops and duplicates).
  std::size_t dropped_edges() const noexcept { return dropped_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::size_t dropped_ = 0;
};

/// Community label per node; every community 0..k-1 is nonempty.
class CommunityAssignment {
 public:
  CommunityAssignment() = default;

  CommunityAssignment(std::vector<std::uint32_t> labels, std::size_t k)
      : labels_(std::move(labels)), k_(k) {
    std::vector<bool> seen(k, false);
    for (auto l : labels_) {
      if (l >= k) {
        throw Error(ErrorCode::kInvalidParams,
                    "label " + std::to_string(l) + " >= k=" + std::to_string(k));
      }
      seen[l] = true;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (!seen[c]) {
        throw Error(ErrorCode::kInvalidParams, "community " + std::to_string(c) + " is empty");
      }
    }
  }

  /// Infers k as max label + 1.
  static CommunityAssignment from_labels(std::vector<std::uint32_t> labels) {
    std::size_t k = 0;
    for (auto l : labels) k = std::max<std::size_t>(k, l + 1);
    return CommunityAssignment(std::move(labels), k);
  }

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t num_communities() const noexcept { return k_; }
  std::uint32_t operator[](std::size_t i) const { return labels_[i]; }
  std::span<const std::uint32_t> labels() const noexcept { return labels_; }

  friend bool operator==(const CommunityAssignment&, const CommunityAssignment&) = default;

 private:
  std::vector<std::uint32_t> labels_;
  std::size_t k_ = 0;
};

/// Dense row-major n x d feature matrix.
class NodeFeatures {
 public:
  NodeFeatures() = default;
  NodeFeatures(std::size_t rows, std::size_t dim) : rows_(rows), dim_(dim), data_(rows * dim) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t dim() const noexcept { return dim_; }
  std::span<double> row(std::size_t i) { return std::span<double>(data_).subspan(i * dim_, dim_); }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * dim_, dim_);
  }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

  friend bool operator==(const NodeFeatures&, const NodeFeatures&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t dim_ = 0;
  std::vector<double> data_;
};

struct DataSplit {
  std::vector<NodeId> train;
  std::vector<NodeId> val;
  std::vector<NodeId> test;

  /// Checks disjointness and range; throws InvalidParams otherwise.
  void validate(std::size_t n) const {
    std::vector<bool> seen(n, false);
    for (const auto* part : {&train, &val, &test}) {
      for (NodeId v : *part) {
        if (v >= n) throw Error(ErrorCode::kInvalidParams, "split index out of range");
        if (seen[v]) throw Error(ErrorCode::kInvalidParams, "split sets overlap");
        seen[v] = true;
      }
    }
  }

  friend bool operator==(const DataSplit&, const DataSplit&) = default;
};

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> deg(g.num_nodes());
  for (NodeId u = 0; u < g.num_nodes(); ++u) deg[u] = g.degree(u);
  return deg;
}

inline std::vector<std::size_t> community_sizes(const CommunityAssignment& c) {
  std::vector<std::size_t> sizes(c.num_communities(), 0);
  for (auto l : c.labels()) ++sizes[l];
  return sizes;
}

/// Assignment whose communities are consecutive id blocks of the given sizes.
inline CommunityAssignment block_assignment(std::span<const std::size_t> sizes) {
  std::vector<std::uint32_t> labels;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    labels.insert(labels.end(), sizes[c], static_cast<std::uint32_t>(c));
  }
  return CommunityAssignment(std::move(labels), sizes.size());
}

}  // namespace graphforge
