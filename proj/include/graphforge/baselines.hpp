#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "graphforge/dataset.hpp"
#include "graphforge/error.hpp"
#include "graphforge/graph.hpp"

namespace graphforge {

/// n x k class scores, row-major.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t i, std::size_t c) { return data_[i * cols_ + c]; }
  double operator()(std::size_t i, std::size_t c) const { return data_[i * cols_ + c]; }

  std::vector<double> column(std::size_t c) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
  }

  friend bool operator==(const ScoreMatrix&, const ScoreMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

struct PprOptions {
  double damping = 0.85;
  double tol = 1e-8;
  int max_iters = 1000;
};

/// Personalized PageRank by power iteration:
/// pi = (1 - damping) s + damping pi P, with s uniform over `seeds` and
/// dangling nodes teleporting to s. Stops when the L1 change drops below tol.
inline std::vector<double> ppr_scores(const Graph& g, std::span<const NodeId> seeds,
                                      const PprOptions& opt = {}) {
  if (seeds.empty()) throw Error(ErrorCode::kInvalidParams, "empty seed set");
  if (!(opt.damping >= 0.0 && opt.damping < 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "damping must lie in [0, 1)");
  }
  const std::size_t n = g.num_nodes();
  std::vector<double> teleport(n, 0.0);
  for (NodeId s : seeds) {
    if (s >= n) throw Error(ErrorCode::kInvalidParams, "seed out of range");
    teleport[s] += 1.0;
  }
  const double seed_mass = static_cast<double>(seeds.size());
  for (auto& t : teleport) t /= seed_mass;

  std::vector<double> pi = teleport;
  std::vector<double> next(n);
  for (int iter = 0; iter < opt.max_iters; ++iter) {
    double dangling = 0.0;
    std::fill(next.begin(), next.end(), 0.0);
    for (NodeId u = 0; u < n; ++u) {
      const std::size_t d = g.degree(u);
      if (d == 0) {
        dangling += pi[u];
        continue;
      }
      const double share = opt.damping * pi[u] / static_cast<double>(d);
      for (NodeId v : g.neighbors(u)) next[v] += share;
    }
    const double restart = (1.0 - opt.damping) + opt.damping * dangling;
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] += restart * teleport[i];
      change += std::abs(next[i] - pi[i]);
    }
    pi.swap(next);
    if (change < opt.tol) break;
  }
  return pi;
}

/// Column c holds the PPR mass seeded by the training nodes of class c.
inline ScoreMatrix ppr_classifier(const Graph& g, const CommunityAssignment& c,
                                  const DataSplit& split, const PprOptions& opt = {}) {
  const std::size_t k = c.num_communities();
  std::vector<std::vector<NodeId>> seeds(k);
  for (NodeId v : split.train) seeds[c[v]].push_back(v);
  ScoreMatrix scores(g.num_nodes(), k);
  for (std::size_t cls = 0; cls < k; ++cls) {
    const auto pi = ppr_scores(g, seeds[cls], opt);
    for (std::size_t i = 0; i < pi.size(); ++i) scores(i, cls) = pi[i];
  }
  return scores;
}

inline ScoreMatrix ppr_classifier(const GeneratedDataset& d, const PprOptions& opt = {}) {
  return ppr_classifier(d.graph, d.communities, d.split, opt);
}

/// Binary ROC-AUC by the rank-sum statistic with midranks for ties.
/// `positive` is any indexable sequence of bool-convertible flags.
/// Returns nullopt when either class is absent.
template <typename Flags>
std::optional<double> binary_auc(std::span<const double> scores, const Flags& positive) {
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return scores[a] < scores[b]; });
  double positive_rank_sum = 0.0;
  std::size_t positives = 0;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // mean of ranks i+1..j
    for (std::size_t t = i; t < j; ++t) {
      if (positive[order[t]]) {
        positive_rank_sum += midrank;
        ++positives;
      }
    }
    i = j;
  }
  const std::size_t negatives = n - positives;
  if (positives == 0 || negatives == 0) return std::nullopt;
  const auto np = static_cast<double>(positives);
  const auto nn = static_cast<double>(negatives);
  return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

struct AucResult {
  double macro = 0.0;
  std::vector<std::optional<double>> per_class;
  /// Classes excluded from the average because their AUC is undefined.
  std::vector<std::size_t> undefined_classes;

  bool has_warning() const { return !undefined_classes.empty(); }
};

/// Unweighted mean over classes of the one-vs-rest AUC restricted to
/// eval_set. Throws UndefinedAuc when no class has a defined AUC.
inline AucResult roc_auc_ovr(const ScoreMatrix& scores, const CommunityAssignment& truth,
                             std::span<const NodeId> eval_set) {
  if (eval_set.empty()) throw Error(ErrorCode::kUndefinedAuc, "empty evaluation set");
  const std::size_t k = scores.cols();
  AucResult result;
  result.per_class.resize(k);
  std::vector<double> column(eval_set.size());
  std::vector<bool> positive(eval_set.size());
  double sum = 0.0;
  std::size_t defined = 0;
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t i = 0; i < eval_set.size(); ++i) {
      column[i] = scores(eval_set[i], c);
      positive[i] = truth[eval_set[i]] == c;
    }
    const auto auc = binary_auc(column, positive);
    result.per_class[c] = auc;
    if (auc) {
      sum += *auc;
      ++defined;
    } else {
      result.undefined_classes.push_back(c);
    }
  }
  if (defined == 0) throw Error(ErrorCode::kUndefinedAuc, "no class has a defined AUC");
  result.macro = sum / static_cast<double>(defined);
  return result;
}

}  // namespace graphforge
