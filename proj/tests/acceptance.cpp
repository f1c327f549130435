// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "graphforge/graphforge.hpp"
#include "oracles.hpp"

using namespace graphforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

std::string results_text(const SweepConfig& cfg, std::size_t workers) {
  std::string out = io::results_header(cfg) + "\n";
  SweepHooks hooks;
  hooks.on_row = [&](const ResultRow& r) { out += io::row_to_line(r) + "\n"; };
  run_sweep(cfg, hooks, workers);
  return out;
}

Outcome determinism() {
  SweepConfig cfg;
  cfg.samples_per_generator = 50;
  cfg.master_seed = 20240601;
  const std::string one = results_text(cfg, 1);
  const std::string eight = results_text(cfg, 8);
  const auto lines = std::count(one.begin(), one.end(), '\n');
  return {one == eight && lines == 151,
          fmt("%ld lines, %zu bytes, identical=%d", static_cast<long>(lines), one.size(),
              one == eight)};
}

Outcome cabam_scale_free() {
  std::size_t inside = 0;
  std::vector<double> est;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CabamParams p;
    p.nvertex = 4096;
    p.min_degree = 4;
    Rng rng = Rng::child(seed, "acceptance/cabam");
    const auto g = generate_cabam(p, rng);
    const double a = power_law_mle(degree_sequence(g.graph));
    est.push_back(a);
    inside += a >= 2.5 && a <= 3.5;
  }
  return {inside >= 18, fmt("%zu/20 in [2.5, 3.5], range [%.3f, %.3f]", inside,
                            *std::min_element(est.begin(), est.end()),
                            *std::max_element(est.begin(), est.end()))};
}

Outcome lfr_mixing() {
  bool ok = true;
  std::string detail;
  for (double mu : {0.1, 0.3, 0.5, 0.7, 0.9}) {
    std::vector<double> err;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      LfrParams p;
      p.nvertex = 2048;
      p.mixing_param = mu;
      Rng rng = Rng::child(seed, "acceptance/lfr");
      const auto g = generate_lfr(p, rng);
      err.push_back(std::abs(edge_homogeneity(g.graph, g.communities) - (1.0 - mu)));
    }
    const double m = median(err);
    ok = ok && m <= 0.05;
    detail += fmt("mu=%.1f:%.4f ", mu, m);
  }
  return {ok, "median |h-(1-mu)| " + detail};
}

Outcome sbm_homophily() {
  auto mean_h = [](double ratio, std::int64_t k, double slope) {
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      SbmParams p;
      p.nvertex = 2048;
      p.num_clusters = k;
      p.cluster_size_slope = slope;
      p.pq_ratio = ratio;
      p.avg_degree = 16;
      p.min_degree = 2;
      p.degree_exponent = 2.5;
      Rng rng = Rng::child(seed, "acceptance/sbm");
      const auto g = generate_sbm(p, rng);
      sum += edge_homogeneity(g.graph, g.communities);
    }
    return sum / 20.0;
  };
  const double h1 = mean_h(1, 4, 0.5), h4 = mean_h(4, 4, 0.5), h16 = mean_h(16, 4, 0.5);
  const double two = mean_h(16, 2, 0.0);
  const bool ok = h1 < h4 && h4 < h16 && std::abs(two - 16.0 / 17.0) <= 0.03;
  return {ok, fmt("k=4: %.4f < %.4f < %.4f; k=2 r=16: %.4f (target %.4f)", h1, h4, h16, two,
                  16.0 / 17.0)};
}

Outcome metric_oracles() {
  Rng rng(2024);
  std::size_t mismatches = 0;
  for (int t = 0; t < 100; ++t) {
    const Graph g = oracle::random_graph(rng, 1, 64);
    mismatches += triangle_count(g) != oracle::triangles(g);
    mismatches += std::abs(avg_clustering(g) - oracle::clustering(g)) > 1e-12;
  }
  std::size_t hand = 0;
  const auto near = [&](double a, double b) { hand += std::abs(a - b) > 1e-12; };
  near(degree_gini(std::vector<int>{4, 4, 4}), 0.0);
  near(degree_gini(std::vector<double>{0.0, 5.0}), 0.5);
  near(degree_gini(std::vector<int>{3, 1, 1, 1}), 0.25);
  near(simpson_community(CommunityAssignment({0, 1, 0, 1}, 2)), 0.5);
  near(simpson_community(CommunityAssignment({0, 0, 0}, 1)), 1.0);
  near(simpson_community(CommunityAssignment({0, 0, 0, 1}, 2)), 0.625);
  const Graph tri = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  near(edge_homogeneity(tri, CommunityAssignment({0, 0, 1}, 2)), 1.0 / 3.0);
  near(edge_homogeneity(oracle::complete(4), CommunityAssignment({0, 0, 0, 0}, 1)), 1.0);
  near(edge_homogeneity(Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}),
                        CommunityAssignment({0, 0, 1, 1}, 2)),
       0.0);
  return {mismatches == 0 && hand == 0,
          fmt("%zu brute-force mismatches over 100 graphs, %zu hand-value mismatches", mismatches,
              hand)};
}

Outcome order_statistics() {
  SweepConfig cfg;
  cfg.samples_per_generator = 300;
  cfg.master_seed = 1;
  cfg.baseline = false;
  const auto rows = run_sweep(cfg, 1);
  std::map<std::string, std::vector<double>> pl, h;
  std::size_t failed = 0;
  for (const auto& r : rows) {
    if (!r.ok) {
      ++failed;
      continue;
    }
    if (r.metrics.power_law_estimate.value) pl[r.generator].push_back(*r.metrics.power_law_estimate.value);
    if (r.metrics.edge_homogeneity.value) h[r.generator].push_back(*r.metrics.edge_homogeneity.value);
  }
  const double c25 = quantile(pl["cabam"], 0.25), c75 = quantile(pl["cabam"], 0.75);
  const double l25 = quantile(pl["lfr"], 0.25), l75 = quantile(pl["lfr"], 0.75);
  const double lfr_min = *std::min_element(h["lfr"].begin(), h["lfr"].end());
  const double sbm_min = *std::min_element(h["sbm"].begin(), h["sbm"].end());
  const bool ok = c25 >= 2.5 && c75 <= 3.5 && (l75 - l25) > (c75 - c25) && lfr_min < sbm_min;
  return {ok, fmt("CABAM IQR [%.3f, %.3f]; LFR IQR [%.3f, %.3f]; min h LFR %.4f vs SBM %.4f; "
                  "%zu failed rows",
                  c25, c75, l25, l75, lfr_min, sbm_min, failed)};
}

// Easy regime: pq_ratio 16, k=4, n=2048, with the densest and least
// degree-heterogeneous settings in the sampling ranges. Raw PPR mass
// favors high-degree nodes in every column, so heavy-tailed degrees pull
// the AUC down regardless of homophily.
Outcome ppr_sanity() {
  std::vector<double> easy, shuffled;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    DatasetConfig cfg;
    SbmParams p;
    p.nvertex = 2048;
    p.num_clusters = 4;
    p.cluster_size_slope = 0.0;
    p.pq_ratio = 16;
    p.avg_degree = 32;
    p.min_degree = 20;
    p.degree_exponent = 3.0;
    cfg.generator = p;
    const GeneratedDataset d = build_dataset(cfg, seed, 0);
    easy.push_back(roc_auc_ovr(ppr_classifier(d), d.communities, d.split.test).macro);

    // Same graph, labels permuted across nodes; split redrawn on the new labels.
    std::vector<std::uint32_t> labels(d.communities.labels().begin(), d.communities.labels().end());
    Rng rng = Rng::child(seed, "acceptance/shuffle");
    rng.shuffle(labels);
    const CommunityAssignment perm(labels, d.communities.num_communities());
    const DataSplit split = make_split(perm, 10, 10, rng);
    shuffled.push_back(roc_auc_ovr(ppr_classifier(d.graph, perm, split), perm, split.test).macro);
  }
  const double easy_median = median(easy), shuffled_median = median(shuffled);
  const bool ok = easy_median >= 0.9 && std::abs(shuffled_median - 0.5) <= 0.05;
  return {ok, fmt("easy median %.4f (min %.4f); shuffled median %.4f (range [%.4f, %.4f])",
                  easy_median, *std::min_element(easy.begin(), easy.end()), shuffled_median,
                  *std::min_element(shuffled.begin(), shuffled.end()),
                  *std::max_element(shuffled.begin(), shuffled.end()))};
}

Outcome replication() {
  std::size_t matched = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    LfrParams lp;
    lp.nvertex = 1500;
    lp.avg_degree = 12;
    Rng rng = Rng::child(seed, "acceptance/replication");
    const auto lfr = generate_lfr(lp, rng);
    SbmParams sp;
    sp.nvertex = lp.nvertex;
    sp.avg_degree = 12;
    sp.min_degree = 2;
    sp.fixed_community_sizes = replicate_community_structure(lfr.communities);
    const auto sbm = generate_sbm(sp, rng);
    matched += community_sizes(sbm.communities) == community_sizes(lfr.communities);
  }
  return {matched == 20, fmt("%zu/20 size vectors identical", matched)};
}

}  // namespace

int main() {
  struct Check {
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Check> checks{
      {"sweep determinism across worker counts", 120, determinism},
      {"CABAM scale-free degree exponent", 30, cabam_scale_free},
      {"LFR mixing fidelity", 120, lfr_mixing},
      {"SBM homophily ordering", 60, sbm_homophily},
      {"metric oracles", 30, metric_oracles},
      {"desk-scale order statistics", 900, order_statistics},
      {"PPR baseline sanity", 120, ppr_sanity},
      {"community structure replication", 60, replication},
  };
  int failures = 0;
  for (const auto& c : checks) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.budget_s;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s  %-42s %7.1fs/%gs  %s%s\n", pass ? "PASS" : "FAIL", c.name, secs, c.budget_s,
                o.detail.c_str(), in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(checks.size()) - failures,
              checks.size());
  return failures == 0 ? 0 : 1;
}
