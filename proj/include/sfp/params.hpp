#ifndef SFP_PARAMS_HPP
#define SFP_PARAMS_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sfp/errors.hpp"
#include "sfp/rng.hpp"

namespace sfp {

// Weight laws. ParetoC is the exact Pareto tail P(W >= w) = c w^{-(tau-1)}
// on [c^{1/(tau-1)}, inf); StandardPareto is the c = 1 special case with
// tail w^{-(tau-1)} on [1, inf); Constant is the degenerate law at w0
// (which turns the model into long-range percolation).
struct ParetoC {
  double c = 1.0;
};
struct StandardPareto {};
struct Constant {
  double w0 = 1.0;
};
using WeightLaw = std::variant<ParetoC, StandardPareto, Constant>;

enum class Norm { L1, Linf };
enum class Boundary { Free, Torus };

struct ModelParams {
  int d = 1;
  double alpha = 1.0;
  double tau = 2.0;
  double lambda = 1.0;
  WeightLaw weight_law = StandardPareto{};
  double mu = 1.0;  // green-vertex probability
  Norm norm = Norm::L1;

  void validate() const;
};

struct BoxGeometry {
  std::vector<std::int64_t> origin;  // length d
  std::int64_t side = 1;
  Boundary boundary = Boundary::Free;

  int dim() const { return static_cast<int>(origin.size()); }
  std::int64_t vertex_count() const;
  // Row-major bijection between linear indices and coordinates.
  std::vector<std::int64_t> coords(std::int64_t index) const;
  std::int64_t index_of(const std::vector<std::int64_t>& xyz) const;
  void validate() const;
};

double gamma_param(const ModelParams& p);

// Inverse tail of the law at u in (0,1]: returns the w with P(W >= w) = u.
double weight_quantile(const WeightLaw& law, double tau, double u);
double weight_support_min(const WeightLaw& law, double tau);
double sample_weight(const WeightLaw& law, double tau, const RngStream& stream);
// Exact tail P(W >= w); the test oracle counterpart of weight_quantile.
double weight_tail(const WeightLaw& law, double tau, double w);

// p_xy = 1 - exp(-lambda wx wy / dist^alpha). dist must be positive.
double edge_probability(double wx, double wy, double dist, double lambda,
                        double alpha);

double vertex_distance(const std::vector<std::int64_t>& x,
                       const std::vector<std::int64_t>& y,
                       const BoxGeometry& geometry, Norm norm);

// JSON round trip for ModelParams; unknown keys are rejected.
std::string params_to_json(const ModelParams& p);
ModelParams params_from_json(const std::string& text);

std::string law_name(const WeightLaw& law);

}  // namespace sfp

#endif
