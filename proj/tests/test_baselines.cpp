#include <gtest/gtest.h>

#include <numeric>

#include "graphforge/baselines.hpp"
#include "graphforge/sbm.hpp"
#include "oracles.hpp"

using namespace graphforge;

TEST(Ppr, ZeroDampingIsTeleportVector) {
  const Graph g = oracle::complete(5);
  const std::vector<NodeId> seeds{1, 3};
  const auto pi = ppr_scores(g, seeds, {.damping = 0.0});
  EXPECT_EQ(pi, (std::vector<double>{0.0, 0.5, 0.0, 0.5, 0.0}));
}

TEST(Ppr, TwoNodeClosedForm) {
  // pi0 = 0.15 + 0.85 pi1, pi1 = 0.85 pi0  =>  pi0 = 0.15 / (1 - 0.7225).
  const Graph g = Graph::from_edges(2, {{0, 1}});
  const std::vector<NodeId> seeds{0};
  const auto pi = ppr_scores(g, seeds);
  const double pi0 = 0.15 / (1.0 - 0.85 * 0.85);
  EXPECT_NEAR(pi[0], pi0, 1e-7);
  EXPECT_NEAR(pi[1], 1.0 - pi0, 1e-7);
  EXPECT_NEAR(pi[0], 0.5405, 5e-5);
}

TEST(Ppr, MassSumsToOne) {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_graph(rng, 2, 60);  // may contain isolated nodes
    std::vector<NodeId> seeds{0, static_cast<NodeId>(g.num_nodes() - 1)};
    const auto pi = ppr_scores(g, seeds);
    EXPECT_NEAR(std::accumulate(pi.begin(), pi.end(), 0.0), 1.0, 1e-9);
  }
}

TEST(Ppr, EmptySeedsRejected) {
  const std::vector<NodeId> none;
  EXPECT_THROW(ppr_scores(oracle::complete(3), none), Error);
}

TEST(PprClassifier, SwappingCommunitiesSwapsColumns) {
  // Two triangles joined by one edge, mirrored seeds.
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  const CommunityAssignment c({0, 0, 0, 1, 1, 1}, 2);
  const CommunityAssignment swapped({1, 1, 1, 0, 0, 0}, 2);
  const DataSplit split{{0, 5}, {}, {1, 2, 3, 4}};
  const ScoreMatrix a = ppr_classifier(g, c, split);
  const ScoreMatrix b = ppr_classifier(g, swapped, split);
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_DOUBLE_EQ(a(i, 0), b(i, 1));
    EXPECT_DOUBLE_EQ(a(i, 1), b(i, 0));
  }
}

TEST(PprClassifier, WalkConfinedToComponent) {
  // Component {0,1,2} holds only class-0 training nodes.
  const Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  const CommunityAssignment c({0, 0, 1, 1, 1, 0}, 2);
  const DataSplit split{{0, 3}, {}, {1, 2, 4, 5}};
  const ScoreMatrix s = ppr_classifier(g, c, split);
  for (NodeId v : {0u, 1u, 2u}) EXPECT_EQ(s(v, 1), 0.0);
  for (NodeId v : {3u, 4u, 5u}) EXPECT_EQ(s(v, 0), 0.0);
}

TEST(Auc, Examples) {
  const std::vector<bool> pos{true, true, false, false};
  const std::vector<double> sep{0.9, 0.8, 0.4, 0.3};
  EXPECT_DOUBLE_EQ(*binary_auc(std::span<const double>(sep), pos), 1.0);
  const std::vector<double> swapped{0.9, 0.4, 0.8, 0.3};
  EXPECT_DOUBLE_EQ(*binary_auc(std::span<const double>(swapped), pos), 0.75);
  const std::vector<double> ties{0.5, 0.5, 0.5, 0.5};
  EXPECT_DOUBLE_EQ(*binary_auc(std::span<const double>(ties), pos), 0.5);
  const std::vector<bool> all_pos(4, true);
  EXPECT_FALSE(binary_auc(std::span<const double>(sep), all_pos).has_value());
}

TEST(Auc, InvariantUnderMonotoneTransform) {
  Rng rng(2);
  std::vector<double> s(500), t(500);
  std::vector<bool> pos(500);
  for (std::size_t i = 0; i < 500; ++i) {
    pos[i] = rng.bernoulli(0.3);
    s[i] = rng.normal() + (pos[i] ? 0.7 : 0.0);
    t[i] = std::exp(3.0 * s[i]) + 2.0;
  }
  EXPECT_DOUBLE_EQ(*binary_auc(std::span<const double>(s), pos),
                   *binary_auc(std::span<const double>(t), pos));
}

TEST(Auc, ChanceLevel) {
  Rng rng(3);
  const std::size_t n = 10000;
  ScoreMatrix scores(n, 3);
  std::vector<std::uint32_t> labels(n);
  std::vector<NodeId> eval(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<std::uint32_t>(i % 3);
    eval[i] = static_cast<NodeId>(i);
    for (std::size_t c = 0; c < 3; ++c) scores(i, c) = rng.uniform();
  }
  const AucResult r = roc_auc_ovr(scores, CommunityAssignment(labels, 3), eval);
  EXPECT_NEAR(r.macro, 0.5, 0.02);
  EXPECT_FALSE(r.has_warning());
}

TEST(Auc, AbsentClassExcludedWithWarning) {
  ScoreMatrix scores(4, 3);
  const double col0[] = {0.9, 0.8, 0.1, 0.2};
  for (std::size_t i = 0; i < 4; ++i) {
    scores(i, 0) = col0[i];
    scores(i, 1) = 1.0 - col0[i];
    scores(i, 2) = 0.3;
  }
  const CommunityAssignment truth({0, 0, 1, 2}, 3);
  const std::vector<NodeId> eval{0, 1, 2};  // class 2 absent
  const AucResult r = roc_auc_ovr(scores, truth, eval);
  EXPECT_TRUE(r.has_warning());
  EXPECT_EQ(r.undefined_classes, (std::vector<std::size_t>{2}));
  EXPECT_DOUBLE_EQ(r.macro, 1.0);

  const std::vector<NodeId> none;
  EXPECT_THROW(roc_auc_ovr(scores, truth, none), Error);
}
