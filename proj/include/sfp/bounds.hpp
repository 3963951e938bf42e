#ifndef SFP_BOUNDS_HPP
#define SFP_BOUNDS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sfp/sampler.hpp"

namespace sfp {

enum class Relation { LessEq, GreaterEq, ApproxEq };

// One evaluated inequality/probability. The verdict is always recomputed from
// the stored values, never cached.
struct BoundsReport {
  std::string lemma;
  std::map<std::string, double> inputs;
  double lhs_value = 0.0;
  double bound_value = 0.0;
  Relation relation = Relation::LessEq;
  std::optional<double> quadrature_error;

  bool verdict() const;
  std::string to_json() const;
};

// P(max of n conditioned weights <= K2) against exp(-n (K1/K2)^{tau-1}).
BoundsReport max_weight_conditional(std::int64_t n, double K1, double K2, double tau,
                                    double c);

// Exact probability that an N-box holds at least ceil(log N) vertices of
// weight > beta N^{alpha/2} (binomial tail in log space).
BoundsReport big_degree_box_probability(std::int64_t N, double beta,
                                        const ModelParams& params);
// Complement P(fewer than ceil(log N) such vertices); exact, log-space.
double big_degree_box_complement(std::int64_t N, double beta,
                                 const ModelParams& params);

// |u1 - u2|_1 <= 3 d k N for vertices of boxes k boxes apart.
bool box_distance_bound(int d, std::int64_t k, std::int64_t N,
                        const std::vector<std::int64_t>& u1,
                        const std::vector<std::int64_t>& u2);

// Monte Carlo frequency that two box maxima (conditioned >= beta N^{alpha/2}
// by rejection) are adjacent, against the dominated-model edge probability
// E[1 - exp(-lambda beta^2 (3d)^{-alpha} W''1 W''2 / k^alpha)].
BoundsReport coarse_connectivity_domination(std::int64_t N, std::int64_t k,
                                            double beta, const ModelParams& params,
                                            std::int64_t n_seeds,
                                            std::uint64_t master_seed = 1);

// Closed-form cluster-to-cluster connectivity lower bound
// 1 - exp(-lambda (3d)^{-alpha} beta^2 c^{2/(tau-1)} / k^alpha).
BoundsReport cluster_connectivity_bound(std::int64_t N, std::int64_t k, double beta,
                                        const ModelParams& params);

// E[(lambda_scale W1 W2 / u) ∧ 1] by 2D adaptive quadrature, cross-checked
// against the exact Pareto-product closed form stored as bound_value.
BoundsReport product_weight_expectation(double u, double tau, double c,
                                        double lambda_scale, double rel_tol = 1e-6);
// The closed form itself (oracle for the quadrature).
double product_weight_expectation_exact(double u, double tau, double c,
                                        double lambda_scale);

struct DecayFit {
  std::vector<double> u;
  std::vector<double> lhs;
  double slope = 0.0;        // of log(lhs / log-factor) vs log u
  double target_slope = 0.0; // -1 for tau > 2, -(tau-1) otherwise
};
// Log-log decay of the product-weight expectation over a geometric u-grid.
// The log u factor (log^2 u at tau == 2) is divided out before fitting.
DecayFit product_weight_decay(double tau, double c, double lambda_scale, double u_lo,
                              double u_hi, int n_points);

struct ScheduleReport {
  BoundsReport report;
  std::vector<std::int64_t> k;
  std::vector<double> values;  // k^4 E[1 - exp(-lambda W1 W2 / k^alpha)]
  bool decreasing = false;
  double loglog_slope = 0.0;
};
// d=2 recurrence marginal over a k schedule; requires alpha >= 4 and
// (tau > 2 or gamma > 2).
ScheduleReport recurrence_marginal_check(const ModelParams& params,
                                         const std::vector<std::int64_t>& k_schedule);

struct TransienceTable {
  std::vector<std::int64_t> n;
  std::vector<double> log_D, log_C, log_u;  // natural logs
  std::vector<double> partial_sum_C_inv;    // sum of C_j^{-1}, j <= n
  // |ratio - 1| between the two sides of the collapsed exponent identity
  // d^{-alpha} u_{n-2}^2 prod D_k^{-alpha} = n^{d(2-gamma)}, n >= 3.
  std::vector<double> identity_residual;
  bool cauchy_ok = true;  // increments of the partial sums below 2^{2d} n^{-2d}
};
// Renormalization sequences D_n = 2(n+1)^2, C_n = (n+1)^{2d},
// u_n = d^{alpha/2} (n+2)^{d(2-gamma)/2} 2^{(n+2)alpha/2} ((n+3)!)^alpha.
TransienceTable transience_sequences(int n_max, const ModelParams& params);

enum class CoarseMode { MaxWeight, LargestCluster };

struct CoarseGrainResult {
  std::int64_t N = 1;
  double beta = 1.0;
  CoarseMode mode = CoarseMode::MaxWeight;
  std::int64_t boxes_per_axis = 1;
  std::vector<std::uint8_t> good;      // per box, row-major
  std::vector<std::int32_t> dominant;  // max-weight vertex / cluster anchor
  // good-box pairs whose dominants (or clusters) share an open edge
  std::vector<std::pair<std::int64_t, std::int64_t>> box_edges;
  ModelParams dominated;  // lambda beta^2 (3d)^{-alpha}, StandardPareto
};
CoarseGrainResult coarse_grain(const Configuration& config, std::int64_t N,
                               double beta, CoarseMode mode);

}  // namespace sfp

#endif
