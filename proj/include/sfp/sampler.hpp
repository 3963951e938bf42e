#ifndef SFP_SAMPLER_HPP
#define SFP_SAMPLER_HPP

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "sfp/params.hpp"
#include "sfp/rng.hpp"

namespace sfp {

// An immutable sampled SFP instance on a finite box. Neighbor lists are
// sorted, symmetric and self-loop free.
struct Configuration {
  BoxGeometry geometry;
  ModelParams params;
  std::vector<double> weights;       // per vertex
  std::vector<std::uint8_t> green;   // per vertex
  std::vector<std::vector<std::int32_t>> adjacency;
  std::uint64_t master_seed = 0;
  bool restricted_to_green = false;

  std::int64_t vertex_count() const { return static_cast<std::int64_t>(weights.size()); }
  std::int64_t edge_count() const;
  bool has_edge(std::int32_t u, std::int32_t v) const;
};

struct SampleOptions {
  bool restrict_to_green = false;
  std::int64_t max_pairs = 1'000'000'000;  // overridable via SFP_MAX_PAIRS
  int threads = 1;
};

std::int64_t max_pairs_from_env(std::int64_t fallback);

Configuration sample_configuration(const BoxGeometry& geometry,
                                   const ModelParams& params,
                                   std::uint64_t master_seed,
                                   const SampleOptions& opts = {});

// Shared-uniform coupled sampling: params_lo and params_hi may differ only in
// lambda and/or weight law, with the hi side dominating. The returned
// adjacency sets are nested (lo subset of hi) edge by edge.
std::pair<Configuration, Configuration> coupled_pair(
    const BoxGeometry& geometry, const ModelParams& params_lo,
    const ModelParams& params_hi, std::uint64_t master_seed,
    const SampleOptions& opts = {});

// Edge sampling for externally supplied weights (same edge law as
// sample_configuration given these weights).
std::vector<std::vector<std::int32_t>> conditional_edges(
    const std::vector<double>& weights, const BoxGeometry& geometry,
    const ModelParams& params, std::uint64_t master_seed,
    const SampleOptions& opts = {});

// Analytic stochastic-domination check between supported laws.
bool law_dominates(const WeightLaw& lo, const WeightLaw& hi, double tau);

void write_vertices_csv(const Configuration& config, std::ostream& os);
void write_edges_csv(const Configuration& config, std::ostream& os);

// Test/fixture constructor: wraps externally built parts into an immutable
// Configuration (adjacency is symmetrized and sorted).
Configuration make_configuration(BoxGeometry geometry, ModelParams params,
                                 std::vector<double> weights,
                                 std::vector<std::pair<std::int32_t, std::int32_t>> edges);

}  // namespace sfp

#endif
