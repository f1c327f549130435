#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "graphforge/dataset.hpp"

using namespace graphforge;

TEST(Features, ZeroCenterDistanceCentersAtOrigin) {
  // Two communities of 2048 nodes: the norm of a class mean of pure N(0, I)
  // noise in 16 dims has expectation about sqrt(16 / 2048) = 0.088.
  std::vector<std::size_t> sizes{2048, 2048};
  const auto c = block_assignment(sizes);
  FeatureParams fp;
  fp.center_distance = 0.0;
  fp.dim = 16;
  Rng rng(1);
  const NodeFeatures f = generate_features(c, fp, rng);
  ASSERT_EQ(f.rows(), 4096u);
  ASSERT_EQ(f.dim(), 16u);
  for (std::size_t k = 0; k < 2; ++k) {
    std::vector<double> mean(16, 0.0);
    for (std::size_t i = 0; i < 4096; ++i) {
      if (c[i] != k) continue;
      for (std::size_t j = 0; j < 16; ++j) mean[j] += f(i, j) / 2048.0;
    }
    double norm = 0.0;
    for (double m : mean) norm += m * m;
    EXPECT_LT(std::sqrt(norm), 0.2);
  }
}

TEST(Features, CenterDistanceSeparatesClasses) {
  std::vector<std::size_t> sizes{1000, 1000};
  const auto c = block_assignment(sizes);
  FeatureParams fp;
  fp.center_distance = 2.0;
  Rng rng(2);
  const NodeFeatures f = generate_features(c, fp, rng);
  // Within-class variance per dimension stays 1.
  double s = 0, ss = 0;
  for (std::size_t i = 0; i < 1000; ++i) {
    s += f(i, 0);
    ss += f(i, 0) * f(i, 0);
  }
  const double var = ss / 1000 - (s / 1000) * (s / 1000);
  EXPECT_NEAR(var, 1.0, 0.15);
}

TEST(Features, Deterministic) {
  std::vector<std::size_t> sizes{10, 20};
  const auto c = block_assignment(sizes);
  Rng a(3), b(3);
  const auto f1 = generate_features(c, FeatureParams{}, a);
  const auto f2 = generate_features(c, FeatureParams{}, b);
  for (std::size_t i = 0; i < 30; ++i)
    for (std::size_t j = 0; j < f1.dim(); ++j) ASSERT_EQ(f1(i, j), f2(i, j));
}

TEST(Split, PerClassCounts) {
  std::vector<std::size_t> sizes{40, 50, 60};
  const auto c = block_assignment(sizes);
  Rng rng(4);
  const DataSplit s = make_split(c, 10, 10, rng);
  EXPECT_EQ(s.train.size(), 30u);
  EXPECT_EQ(s.val.size(), 30u);
  EXPECT_EQ(s.test.size(), 150u - 60u);
  s.validate(150);
  std::vector<int> per_class(3, 0);
  for (NodeId v : s.train) ++per_class[c[v]];
  EXPECT_EQ(per_class, (std::vector<int>{10, 10, 10}));
  std::set<NodeId> all(s.train.begin(), s.train.end());
  all.insert(s.val.begin(), s.val.end());
  all.insert(s.test.begin(), s.test.end());
  EXPECT_EQ(all.size(), 150u);
}

TEST(Split, SmallCommunityIsInfeasible) {
  std::vector<std::size_t> sizes{5, 50};
  const auto c = block_assignment(sizes);
  Rng rng(5);
  try {
    make_split(c, 10, 10, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleSplit);
  }
}

TEST(BuildDataset, MetaRegeneratesBitExactly) {
  for (auto kind : {GeneratorKind::kSbm, GeneratorKind::kCabam, GeneratorKind::kLfr}) {
    DatasetConfig cfg;
    cfg.generator = default_params(kind);
    const GeneratedDataset a = build_dataset(cfg, 17, 4);
    const GeneratedDataset b = build_dataset(a.meta.config, a.meta.seed, a.meta.sample_index);
    EXPECT_EQ(a.graph, b.graph);
    EXPECT_TRUE(std::ranges::equal(a.communities.labels(), b.communities.labels()));
    EXPECT_EQ(a.split.train, b.split.train);
    EXPECT_EQ(a.split.test, b.split.test);
    for (std::size_t i = 0; i < a.features.rows(); ++i)
      for (std::size_t j = 0; j < a.features.dim(); ++j) ASSERT_EQ(a.features(i, j), b.features(i, j));
    EXPECT_EQ(a.meta.generator, generator_name(kind));
  }
}

TEST(BuildDataset, AdaptiveSplitShrinksToSmallestCommunity) {
  DatasetConfig cfg;
  SbmParams p;
  p.nvertex = 200;
  p.avg_degree = 6;
  p.min_degree = 2;
  p.fixed_community_sizes = std::vector<std::size_t>{9, 191};
  cfg.generator = p;
  EXPECT_THROW(build_dataset(cfg, 1, 0), Error);
  const GeneratedDataset d = build_dataset(cfg, 1, 0, {.adaptive_split = true});
  EXPECT_EQ(d.meta.config.split.train_per_class, 4);
  EXPECT_EQ(d.meta.config.split.val_per_class, 4);
  EXPECT_EQ(d.split.train.size(), 8u);
}
