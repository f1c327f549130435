#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <vector>

#include "graphforge/error.hpp"
#include "graphforge/graph.hpp"

namespace graphforge {

/// Continuous maximum-likelihood power-law exponent,
/// 1 + n_tail / sum(ln(x / x_min)), with x_min the smallest positive value
/// (at least 1). Zeros are ignored.
template <std::ranges::input_range R>
double power_law_mle(const R& values) {
  double x_min = 0.0;
  for (const auto& raw : values) {
    const auto x = static_cast<double>(raw);
    if (x > 0.0 && (x_min == 0.0 || x < x_min)) x_min = x;
  }
  if (x_min == 0.0) throw Error(ErrorCode::kDegenerateSequence, "no positive values");
  x_min = std::max(1.0, x_min);

  std::size_t tail = 0;
  std::size_t above = 0;
  double log_sum = 0.0;
  for (const auto& raw : values) {
    const auto x = static_cast<double>(raw);
    if (x < x_min) continue;
    ++tail;
    if (x > x_min) ++above;
    log_sum += std::log(x / x_min);
  }
  if (above < 2 || log_sum <= 0.0) {
    throw Error(ErrorCode::kDegenerateSequence,
                "fewer than two values above x_min=" + std::to_string(x_min));
  }
  return 1.0 + static_cast<double>(tail) / log_sum;
}

/// Gini coefficient sum_ij |d_i - d_j| / (2 n^2 mean).
template <std::ranges::input_range R>
double degree_gini(const R& values) {
  std::vector<double> d;
  for (const auto& x : values) d.push_back(static_cast<double>(x));
  if (d.empty()) throw Error(ErrorCode::kDegenerateSequence, "empty sequence");
  std::sort(d.begin(), d.end());
  double total = 0.0;
  double weighted = 0.0;
  const auto n = static_cast<double>(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    total += d[i];
    weighted += (2.0 * static_cast<double>(i) - n + 1.0) * d[i];
  }
  if (total <= 0.0) throw Error(ErrorCode::kDegenerateSequence, "all values are zero");
  // sum_ij |d_i - d_j| = 2 * weighted over the ascending order.
  return weighted / (n * total);
}

/// Fraction of edges whose endpoints share a label.
inline double edge_homogeneity(const Graph& g, const CommunityAssignment& c) {
  if (g.num_edges() == 0) throw Error(ErrorCode::kDegenerateGraph, "graph has no edges");
  std::size_t same = 0;
  for (const Edge& e : g.edges()) same += c[e.u] == c[e.v];
  return static_cast<double>(same) / static_cast<double>(g.num_edges());
}

namespace detail {

// Calls f(u, v, w) once per triangle with u < v < w.
template <typename F>
void for_each_triangle(const Graph& g, F&& f) {
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto nu = g.neighbors(u);
    auto first_above_u = std::upper_bound(nu.begin(), nu.end(), u);
    for (auto it = first_above_u; it != nu.end(); ++it) {
      const NodeId v = *it;
      const auto nv = g.neighbors(v);
      // Intersect N(u) and N(v) restricted to ids above v.
      auto a = std::upper_bound(it, nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          f(u, v, *a);
          ++a;
          ++b;
        }
      }
    }
  }
}

}  // namespace detail

inline std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t count = 0;
  detail::for_each_triangle(g, [&](NodeId, NodeId, NodeId) { ++count; });
  return count;
}

/// Mean local clustering coefficient; nodes with degree < 2 contribute 0.
inline double avg_clustering(const Graph& g) {
  if (g.num_nodes() == 0) return 0.0;
  std::vector<std::uint64_t> local(g.num_nodes(), 0);
  detail::for_each_triangle(g, [&](NodeId u, NodeId v, NodeId w) {
    ++local[u];
    ++local[v];
    ++local[w];
  });
  double sum = 0.0;
  for (NodeId u = 0; u < g.num_nodes(); ++u) {
    const auto d = static_cast<double>(g.degree(u));
    if (d < 2.0) continue;
    sum += static_cast<double>(local[u]) / (0.5 * d * (d - 1.0));
  }
  return sum / static_cast<double>(g.num_nodes());
}

/// Probability that two random nodes share a community: sum_c (n_c / n)^2.
inline double simpson_community(const CommunityAssignment& c) {
  const auto n = static_cast<double>(c.size());
  double s = 0.0;
  for (auto size : community_sizes(c)) {
    const double f = static_cast<double>(size) / n;
    s += f * f;
  }
  return s;
}

/// A metric value, or the reason it could not be computed.
struct MetricValue {
  std::optional<double> value;
  std::optional<ErrorCode> reason;

  bool ok() const { return value.has_value(); }

  template <typename F>
  static MetricValue attempt(F&& f) {
    try {
      return {f(), std::nullopt};
    } catch (const Error& e) {
      return {std::nullopt, e.code()};
    }
  }

  friend bool operator==(const MetricValue&, const MetricValue&) = default;
};

struct GraphMetrics {
  MetricValue power_law_estimate;
  MetricValue degree_gini;
  MetricValue edge_homogeneity;
  MetricValue avg_cc;
  MetricValue triangle_count;
  MetricValue simpson_community;

  static constexpr std::string_view kNames[] = {"power_law_estimate", "degree_gini",
                                                "edge_homogeneity",   "avg_cc",
                                                "triangle_count",     "simpson_community"};

  /// Values in the order of kNames.
  std::vector<const MetricValue*> values() const {
    return {&power_law_estimate, &degree_gini,    &edge_homogeneity,
            &avg_cc,             &triangle_count, &simpson_community};
  }

  std::vector<MetricValue*> values() {
    return {&power_law_estimate, &degree_gini,    &edge_homogeneity,
            &avg_cc,             &triangle_count, &simpson_community};
  }

  /// Looks a metric up by name; nullptr for unknown names.
  const MetricValue* find(std::string_view name) const {
    const auto all = values();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (kNames[i] == name) return all[i];
    }
    return nullptr;
  }

  friend bool operator==(const GraphMetrics&, const GraphMetrics&) = default;
};

inline GraphMetrics compute_all(const Graph& g, const CommunityAssignment& c) {
  const auto degrees = degree_sequence(g);
  GraphMetrics m;
  m.power_law_estimate = MetricValue::attempt([&] { return power_law_mle(degrees); });
  m.degree_gini = MetricValue::attempt([&] { return degree_gini(degrees); });
  m.edge_homogeneity = MetricValue::attempt([&] { return edge_homogeneity(g, c); });
  m.avg_cc = MetricValue::attempt([&] { return avg_clustering(g); });
  m.triangle_count =
      MetricValue::attempt([&] { return static_cast<double>(triangle_count(g)); });
  m.simpson_community = MetricValue::attempt([&] { return simpson_community(c); });
  return m;
}

}  // namespace graphforge
