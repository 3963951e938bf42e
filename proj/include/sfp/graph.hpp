#ifndef SFP_GRAPH_HPP
#define SFP_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "sfp/sampler.hpp"

namespace sfp {

inline constexpr std::int64_t kInfiniteDistance = std::numeric_limits<std::int64_t>::max();

struct ClusterLabeling {
  std::vector<std::int32_t> label;            // vertex -> cluster id
  std::vector<std::int64_t> sizes;            // cluster id -> count
  std::int32_t largest_id = -1;

  std::int64_t largest_size() const { return largest_id < 0 ? 0 : sizes[largest_id]; }
};

// Exact connected components (union-find). When the configuration is
// restricted to green vertices, non-green isolated vertices still get
// singleton labels.
ClusterLabeling clusters(const Configuration& config);

// BFS hop count; kInfiniteDistance when u and v are in different components.
std::int64_t graph_distance(const Configuration& config, std::int32_t u, std::int32_t v);

// Single-source BFS distances (kInfiniteDistance for unreachable vertices).
std::vector<std::int64_t> bfs_distances(const std::vector<std::vector<std::int32_t>>& adj,
                                        std::int32_t source);

struct DistanceReport {
  std::int64_t box_side = 0;
  std::int64_t n_pairs_sampled = 0;
  std::map<std::int64_t, std::int64_t> histogram;  // finite distances
  std::int64_t infinite_count = 0;
  std::int64_t largest_cluster_size = 0;
  std::int64_t diameter_lower_bound = 0;  // double-sweep BFS inside the largest cluster
  bool empty_report = false;              // largest cluster smaller than 2

  double fraction_within(std::int64_t k) const;
};

struct DiameterExperimentOptions {
  std::int64_t n_pairs = 1000;
  int n_seeds = 1;
  std::uint64_t seed_base = 1;
  SampleOptions sample;
};

// One report per box side; pairs are sampled uniformly inside the largest
// cluster of each sampled configuration.
std::vector<DistanceReport> diameter_experiment(
    const ModelParams& params, const std::vector<std::int64_t>& sides,
    const DiameterExperimentOptions& opts);

// ceil(d / (d - alpha)), the dense-regime diameter ceiling; needs alpha < d.
std::int64_t diameter_theorem_bound(int d, double alpha);

struct DegreeTail {
  std::vector<std::int64_t> degrees;                    // per vertex
  std::vector<std::pair<std::int64_t, double>> ccdf;    // (s, P(D > s))
  std::optional<double> gamma_hat;                      // absent if undefined
  std::int64_t fit_window_lo = 0;                       // reported fit window
  std::int64_t fit_window_hi = 0;
};

// Empirical complementary CDF of degrees plus a log-log least-squares fit of
// the tail exponent over the top decade of degrees (log-spaced abscissae).
DegreeTail degree_tail(const Configuration& config);

}  // namespace sfp

#endif
