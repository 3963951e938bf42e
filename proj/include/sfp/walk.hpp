#ifndef SFP_WALK_HPP
#define SFP_WALK_HPP

#include <cstdint>
#include <vector>

#include "sfp/sampler.hpp"

namespace sfp {

struct EscapeEstimate {
  double escape = 0.0;       // P(reach l1 distance >= R before revisiting start)
  double std_error = 0.0;
  std::int64_t n_walks = 0;
  std::int64_t truncated = 0;  // walks cut at max_steps (counted as non-escape)
  bool isolated = false;
};

struct WalkOptions {
  std::int64_t n_walks = 10000;
  std::int64_t max_steps = 100000;
  std::uint64_t walk_seed = 1;
};

// Monte Carlo escape probability for the simple random walk started at
// `start`, with unit steps along open edges.
EscapeEstimate srw_escape_probability(const Configuration& config, std::int32_t start,
                                      double R, const WalkOptions& opts);

inline constexpr double kInfiniteResistance = -1.0;

// Effective resistance (unit conductance per open edge) between `start` and
// the set of cluster vertices at l1 distance >= R, via conjugate gradients on
// the grounded Laplacian. Returns kInfiniteResistance when the cluster has no
// boundary vertex.
double effective_resistance(const Configuration& config, std::int32_t start, double R,
                            double tolerance = 1e-8);

struct ResistanceCurve {
  std::vector<double> radii;
  std::vector<double> r_eff;       // kInfiniteResistance entries where no boundary
  std::vector<double> escape;      // MC estimate per radius
  std::vector<double> escape_err;
  std::vector<double> truncated_fraction;
  bool insufficient_cluster = false;
};

ResistanceCurve resistance_curve(const Configuration& config, std::int32_t start,
                                 const std::vector<double>& radii,
                                 const WalkOptions& opts, double tolerance = 1e-8);

struct RegimeContrast {
  ResistanceCurve transient;
  ResistanceCurve recurrent;
  double transient_growth_ratio = 0.0;   // r_eff(R_max) / r_eff(R_min)
  double recurrent_growth_ratio = 0.0;
  bool transient_looks_bounded = false;  // increments slow down
  bool recurrent_looks_divergent = false;
};

// Side-by-side effective-resistance growth for two parameter sets on the same
// geometry/seed schedule. A trend diagnostic, not a verdict on the almost-sure
// statements.
RegimeContrast regime_contrast(const ModelParams& params_transient,
                               const ModelParams& params_recurrent,
                               const BoxGeometry& geometry,
                               const std::vector<double>& radii,
                               std::uint64_t master_seed, const WalkOptions& opts,
                               const SampleOptions& sample = {});

}  // namespace sfp

#endif
