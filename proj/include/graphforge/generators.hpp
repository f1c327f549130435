#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "graphforge/cabam.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/lfr.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"
#include "graphforge/sampling.hpp"
#include "graphforge/sbm.hpp"

namespace graphforge {

inline GeneratedGraph generate(const GeneratorParams& params, Rng& rng) {
  return std::visit(
      [&](const auto& p) -> GeneratedGraph {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, SbmParams>) {
          return generate_sbm(p, rng);
        } else if constexpr (std::is_same_v<P, CabamParams>) {
          return generate_cabam(p, rng);
        } else {
          return generate_lfr(p, rng);
        }
      },
      params);
}

/// Community sizes of a reference assignment, in a form accepted as
/// fixed_community_sizes by the SBM and CABAM generators.
inline std::vector<std::size_t> replicate_community_structure(const CommunityAssignment& c) {
  return community_sizes(c);
}

/// One uniform draw of every parameter that plays the same role across
/// generators.
struct SharedDraw {
  std::int64_t nvertex = 2048;
  double degree_scale = 8.0;          // SBM/LFR avg_degree, CABAM min_degree
  double homophily = 0.5;             // in [0, 1]
  std::int64_t num_clusters = 4;
  double cluster_size_slope = 0.0;
  double feature_center_distance = 1.0;
  double degree_exponent_quantile = 0.5;  // position within each exponent range
};

struct MatchedParams {
  SbmParams sbm;
  CabamParams cabam;
  LfrParams lfr;
};

struct ExponentRanges {
  double sbm_lo = 0.2;
  double sbm_hi = 3.0;
  double lfr_lo = 2.0;
  double lfr_hi = 3.0;
};

/// Fans a shared draw out to the three generators. Fields with no
/// counterpart in the draw keep their defaults.
inline MatchedParams map_shared_to_generator(const SharedDraw& s,
                                             const ExponentRanges& exponents = {}) {
  MatchedParams out;
  const double h = std::clamp(s.homophily, 0.0, 1.0);
  const double q = std::clamp(s.degree_exponent_quantile, 0.0, 1.0);

  out.sbm.nvertex = s.nvertex;
  out.sbm.avg_degree = s.degree_scale;
  out.sbm.min_degree = std::max<std::int64_t>(
      1, std::min<std::int64_t>(2, static_cast<std::int64_t>(std::floor(s.degree_scale))));
  out.sbm.pq_ratio = 1.0 + 15.0 * h;
  out.sbm.degree_exponent = exponents.sbm_lo + q * (exponents.sbm_hi - exponents.sbm_lo);
  out.sbm.num_clusters = s.num_clusters;
  out.sbm.cluster_size_slope = s.cluster_size_slope;

  out.cabam.nvertex = s.nvertex;
  out.cabam.min_degree = std::max<std::int64_t>(1, std::llround(s.degree_scale));
  out.cabam.intra_link_strength = 0.5 + 0.5 * h;
  out.cabam.num_clusters = s.num_clusters;
  out.cabam.cluster_size_slope = s.cluster_size_slope;

  out.lfr.nvertex = s.nvertex;
  out.lfr.avg_degree = s.degree_scale;
  out.lfr.mixing_param = 1.0 - h;
  out.lfr.degree_exponent = exponents.lfr_lo + q * (exponents.lfr_hi - exponents.lfr_lo);
  return out;
}

}  // namespace graphforge
