#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "graphforge/error.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"

namespace graphforge {

/// Output of any generator.
struct GeneratedGraph {
  Graph graph;
  CommunityAssignment communities;
  /// Generator-specific counters (dropped edges, clipping rate, tries).
  ParamList diagnostics;
};

/// Continuous power law with density proportional to x^-exponent on [lo, hi].
///
/// Proper for every real exponent because the support is bounded.
class TruncatedPowerLaw {
 public:
  TruncatedPowerLaw(double exponent, double lo, double hi)
      : exponent_(exponent), lo_(lo), hi_(hi) {
    if (!(lo > 0.0) || !(hi >= lo)) {
      throw Error(ErrorCode::kInvalidParams, "power law support must satisfy 0 < lo <= hi");
    }
  }

  double sample(Rng& rng) const {
    if (hi_ == lo_) return lo_;
    const double u = rng.uniform();
    const double s = 1.0 - exponent_;
    if (std::abs(s) < 1e-12) return lo_ * std::pow(hi_ / lo_, u);
    const double a = std::pow(lo_, s);
    const double b = std::pow(hi_, s);
    return std::clamp(std::pow(a + u * (b - a), 1.0 / s), lo_, hi_);
  }

  double mean() const {
    if (hi_ == lo_) return lo_;
    return integral(1.0 - exponent_) / integral(-exponent_);
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }

 private:
  // Integral of x^p over [lo, hi].
  double integral(double p) const {
    if (std::abs(p + 1.0) < 1e-12) return std::log(hi_ / lo_);
    return (std::pow(hi_, p + 1.0) - std::pow(lo_, p + 1.0)) / (p + 1.0);
  }

  double exponent_;
  double lo_;
  double hi_;
};

/// Community sizes proportional to 1 + slope * i, rounded by largest
/// remainder, each at least one. Result is nondecreasing and sums to n.
inline std::vector<std::size_t> sample_community_sizes(std::size_t n, std::size_t k, double slope) {
  if (k == 0 || k > n) {
    throw Error(ErrorCode::kInvalidParams,
                "need 1 <= k <= n (k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
  }
  if (!(slope >= 0.0 && slope <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "cluster size slope must lie in [0, 1]");
  }
  std::vector<double> weights(k);
  for (std::size_t i = 0; i < k; ++i) weights[i] = 1.0 + slope * static_cast<double>(i);
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);

  std::vector<std::size_t> sizes(k);
  std::vector<double> remainder(k);
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const double target = static_cast<double>(n) * weights[i] / total;
    sizes[i] = static_cast<std::size_t>(std::floor(target + 1e-9));
    remainder[i] = target - static_cast<double>(sizes[i]);
    assigned += sizes[i];
  }
  // The epsilon in the floor can overshoot by one per community.
  while (assigned > n) {
    auto it = std::max_element(sizes.begin(), sizes.end());
    --*it;
    --assigned;
  }
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  // Ties go to the larger index so the sizes stay nondecreasing.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(remainder[a] - remainder[b]) > 1e-12) return remainder[a] > remainder[b];
    return a > b;
  });
  for (std::size_t j = 0; assigned < n; j = (j + 1) % k) {
    ++sizes[order[j]];
    ++assigned;
  }
  for (auto& s : sizes) {
    if (s == 0) {
      auto largest = std::max_element(sizes.rbegin(), sizes.rend());
      --*largest;
      s = 1;
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Expected-degree propensities: power law on [min_degree, n-1], rescaled
/// so their mean equals avg_degree.
inline std::vector<double> sample_degree_propensities(std::size_t n, double exponent,
                                                      std::size_t min_degree, double avg_degree,
                                                      Rng& rng) {
  if (n == 0) throw Error(ErrorCode::kInvalidParams, "n must be >= 1");
  if (min_degree == 0) throw Error(ErrorCode::kInvalidParams, "min_degree must be >= 1");
  if (avg_degree < static_cast<double>(min_degree)) {
    throw Error(ErrorCode::kInvalidParams, "avg_degree must be >= min_degree");
  }
  const double lo = static_cast<double>(min_degree);
  const double hi = std::max(lo, static_cast<double>(n) - 1.0);
  const TruncatedPowerLaw law(exponent, lo, hi);
  std::vector<double> theta(n);
  for (auto& t : theta) t = law.sample(rng);
  const double mean = std::accumulate(theta.begin(), theta.end(), 0.0) / static_cast<double>(n);
  const double scale = avg_degree / mean;
  for (auto& t : theta) t *= scale;
  return theta;
}

}  // namespace graphforge
