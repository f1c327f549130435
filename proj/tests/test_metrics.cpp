#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "graphforge/metrics.hpp"
#include "graphforge/sampling.hpp"
#include "oracles.hpp"

using namespace graphforge;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }
Graph triangle() { return Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}}); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kIoError;
}

}  // namespace

TEST(PowerLaw, HandEvaluation) {
  const std::vector<int> d{1, 1, 1, 2, 4};
  EXPECT_NEAR(power_law_mle(d), 1.0 + 5.0 / (3.0 * std::log(2.0)), 1e-12);
  EXPECT_NEAR(power_law_mle(d), 3.404, 5e-4);
}

TEST(PowerLaw, ConstantSequenceIsDegenerate) {
  const std::vector<int> d(10, 3);
  EXPECT_EQ(code_of([&] { power_law_mle(d); }), ErrorCode::kDegenerateSequence);
  const std::vector<int> zeros(4, 0);
  EXPECT_EQ(code_of([&] { power_law_mle(zeros); }), ErrorCode::kDegenerateSequence);
}

TEST(PowerLaw, RecoversExponentFromExactSamples) {
  // Inverse-CDF samples of a power law on [2, 1e6].
  for (double alpha : {2.1, 2.5, 3.0}) {
    Rng rng(static_cast<std::uint64_t>(alpha * 100));
    const TruncatedPowerLaw law(alpha, 2.0, 1e6);
    std::vector<double> x(50000);
    for (auto& v : x) v = law.sample(rng);
    const double est = power_law_mle(x);
    EXPECT_NEAR(est, alpha, 0.05) << "alpha " << alpha;
  }
}

TEST(Gini, Examples) {
  EXPECT_DOUBLE_EQ(degree_gini(std::vector<int>{4, 4, 4, 4}), 0.0);
  EXPECT_DOUBLE_EQ(degree_gini(std::vector<double>{0.0, 7.5}), 0.5);
  EXPECT_DOUBLE_EQ(degree_gini(std::vector<int>{3, 1, 1, 1}), 0.25);
  EXPECT_EQ(code_of([] { degree_gini(std::vector<int>{0, 0}); }), ErrorCode::kDegenerateSequence);
}

TEST(Gini, MatchesPairwiseDefinitionAndScaleInvariant) {
  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> d(1 + rng.index(60));
    for (auto& x : d) x = static_cast<double>(rng.index(50));
    d[0] += 1.0;
    const double g = degree_gini(d);
    EXPECT_NEAR(g, oracle::gini(d), 1e-12);
    std::vector<double> scaled = d;
    for (auto& x : scaled) x *= 3.7;
    EXPECT_NEAR(degree_gini(scaled), g, 1e-12);
  }
}

TEST(Homogeneity, Examples) {
  EXPECT_DOUBLE_EQ(edge_homogeneity(oracle::complete(5), CommunityAssignment({0, 0, 0, 0, 0}, 1)),
                   1.0);
  const Graph k22 = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_DOUBLE_EQ(edge_homogeneity(k22, CommunityAssignment({0, 0, 1, 1}, 2)), 0.0);
  EXPECT_DOUBLE_EQ(edge_homogeneity(triangle(), CommunityAssignment({0, 0, 1}, 2)), 1.0 / 3.0);
  EXPECT_EQ(code_of([] {
              edge_homogeneity(Graph::from_edges(2, {}), CommunityAssignment({0, 1}, 2));
            }),
            ErrorCode::kDegenerateGraph);
}

TEST(Homogeneity, LabelPermutationInvariant) {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 10, 40);
    if (g.num_edges() == 0) continue;
    std::vector<std::uint32_t> labels(g.num_nodes());
    for (auto& l : labels) l = static_cast<std::uint32_t>(rng.index(3));
    labels[0] = 0;
    labels[1] = 1;
    labels[2] = 2;
    std::vector<std::uint32_t> perm{2, 0, 1};
    std::vector<std::uint32_t> relabeled(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) relabeled[i] = perm[labels[i]];
    EXPECT_DOUBLE_EQ(edge_homogeneity(g, CommunityAssignment(labels, 3)),
                     edge_homogeneity(g, CommunityAssignment(relabeled, 3)));
    EXPECT_DOUBLE_EQ(simpson_community(CommunityAssignment(labels, 3)),
                     simpson_community(CommunityAssignment(relabeled, 3)));
  }
}

TEST(Triangles, Examples) {
  EXPECT_EQ(triangle_count(oracle::complete(4)), 4u);
  EXPECT_EQ(triangle_count(path3()), 0u);
  EXPECT_EQ(triangle_count(oracle::complete(5)), 10u);
}

TEST(Clustering, Examples) {
  EXPECT_DOUBLE_EQ(avg_clustering(triangle()), 1.0);
  EXPECT_DOUBLE_EQ(avg_clustering(path3()), 0.0);
  // K4 minus edge (2,3): locals 2/3, 2/3, 1, 1.
  const Graph g = Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_NEAR(avg_clustering(g), 5.0 / 6.0, 1e-15);
}

TEST(TrianglesAndClustering, MatchBruteForce) {
  Rng rng(123);
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(rng, 1, 64);
    EXPECT_EQ(triangle_count(g), oracle::triangles(g));
    EXPECT_NEAR(avg_clustering(g), oracle::clustering(g), 1e-12);
  }
}

TEST(Simpson, Examples) {
  EXPECT_NEAR(simpson_community(CommunityAssignment({0, 1, 2, 3, 0, 1, 2, 3}, 4)), 0.25, 1e-15);
  EXPECT_DOUBLE_EQ(simpson_community(CommunityAssignment({0, 0, 0}, 1)), 1.0);
  EXPECT_DOUBLE_EQ(simpson_community(CommunityAssignment({0, 0, 0, 1}, 2)), 0.625);
}

TEST(ComputeAll, TriangleWithTwoLabels) {
  const GraphMetrics m = compute_all(triangle(), CommunityAssignment({0, 0, 1}, 2));
  EXPECT_FALSE(m.power_law_estimate.ok());
  EXPECT_EQ(m.power_law_estimate.reason, ErrorCode::kDegenerateSequence);
  EXPECT_DOUBLE_EQ(*m.degree_gini.value, 0.0);
  EXPECT_DOUBLE_EQ(*m.edge_homogeneity.value, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(*m.avg_cc.value, 1.0);
  EXPECT_DOUBLE_EQ(*m.triangle_count.value, 1.0);
  EXPECT_NEAR(*m.simpson_community.value, 5.0 / 9.0, 1e-15);
}

TEST(ComputeAll, K4OneLabel) {
  const GraphMetrics m = compute_all(oracle::complete(4), CommunityAssignment({0, 0, 0, 0}, 1));
  EXPECT_FALSE(m.power_law_estimate.ok());
  EXPECT_DOUBLE_EQ(*m.degree_gini.value, 0.0);
  EXPECT_DOUBLE_EQ(*m.edge_homogeneity.value, 1.0);
  EXPECT_DOUBLE_EQ(*m.avg_cc.value, 1.0);
  EXPECT_DOUBLE_EQ(*m.triangle_count.value, 4.0);
  EXPECT_DOUBLE_EQ(*m.simpson_community.value, 1.0);
  EXPECT_NE(m.find("avg_cc"), nullptr);
  EXPECT_EQ(m.find("nope"), nullptr);
}
