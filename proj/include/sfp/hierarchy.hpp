#ifndef SFP_HIERARCHY_HPP
#define SFP_HIERARCHY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfp/sampler.hpp"

namespace sfp {

struct TreeVertex {
  std::vector<std::int64_t> coords;
  double weight = 0.0;
};

// A weighted tree living inside the box Q_side(origin). Vertex indices in
// `edges` refer to positions in `vertices`.
struct WeightedTree {
  std::vector<std::int64_t> box_origin;
  std::int64_t box_side = 1;
  std::vector<TreeVertex> vertices;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;

  void validate() const;       // connected, acyclic, inside the box
  std::int64_t diameter() const;
};

// For one removed tree edge: the sub-box (x', m') whose side holds the
// certified subtree. `inner` is the endpoint on the subtree side.
struct EdgeSplit {
  std::int32_t a = 0, b = 0;
  std::int32_t inner = 0;
  std::vector<std::int64_t> sub_origin;
  std::int64_t sub_side = 1;
};

struct HctCertificate {
  std::vector<EdgeSplit> splits;  // one per tree edge
  double zeta = 0.0;
  double xi_prime = 0.0;
  double xi = 0.0;                // caller-supplied target, when given
  std::vector<std::int64_t> D;    // index = stage (entry 0 unused)
  std::vector<std::int64_t> m;
  std::vector<double> u, C, a;
  double rho = 0.0;
  double K = 0.0;
  std::int32_t root = 0;                       // maximum-weight vertex
  std::vector<std::int32_t> dominant_chain;    // root's tree index per stage
  std::int64_t merge_k = 0;                    // 0 for pure stage trees
  std::vector<std::int64_t> stage_tree_diameters;  // per merged block
};

struct HctReport {
  bool density = false;          // (1) |V| > rho m^d
  bool diameter = false;         // (2) diam <= K max(1, log log m)
  bool ordered_weights = false;  // (3) strict decrease from the root
  bool spatial = false;          // (4) recursive splitting
  std::int64_t tree_diameter = 0;
  double diameter_bound = 0.0;
  bool used_certificate = false;
  std::int64_t exhaustive_cap = 64;  // recorded even in certificate mode
  bool valid() const { return density && diameter && ordered_weights && spatial; }
};

// Multiscale sequences plus per-stage goodness over one sampled box.
struct StageHierarchy {
  double zeta = 0.0;
  double xi_prime = 0.0;
  std::vector<std::int64_t> D;  // D[n] for stage n >= 1; D[0] = 1
  std::vector<double> u;        // u[n] = prod_{k<=n} D_k^{(d-xi')/(tau-1)}; u[0] = 1
  std::vector<double> C;        // C[n] = a_n D_n^d
  std::vector<double> a;        // schedule in (0,1)
  std::vector<std::int64_t> m;  // m[n] = prod_{k<=n} D_k; m[0] = 1
  int stages = 0;
  double rho = 0.0;             // prod a_n
  double K = 0.0;               // diameter constant implied by the stage count
  bool nonstandard_weight_law = false;
  // good[s][b] / dominant[s][b]: stage-s box b (row-major grid over the box);
  // dominant holds a configuration vertex index, -1 when the box is bad.
  std::vector<std::vector<std::uint8_t>> good;
  std::vector<std::vector<std::int32_t>> dominant;
};

// min( d(2-gamma)/(tau+1), (d/2)(tau+2 - sqrt((tau+2)^2 - 4(2-gamma))) );
// requires 1 < gamma < 2.
double xi_upper_bound(const ModelParams& params);

// Default goodness-count schedule a_n = p_{n-1} (1 - sqrt(2) D_n^{-d/2}
// prod_{k<=n} D_k^{xi'/2}) with p_0 = mu and p_j = 1 - (j+1)^{-3/2} for j >= 1.
std::vector<double> default_a_schedule(const ModelParams& params, double xi_prime,
                                       const std::vector<std::int64_t>& D);

// Classifies every stage box of the configuration as good/bad with its
// dominant vertex. The box side must equal m_n for some n (side 1 gives the
// zero-stage hierarchy). Pass an empty a_schedule for the default.
StageHierarchy build_stage_hierarchy(const ModelParams& params, double xi_prime,
                                     std::int64_t D1,
                                     const std::vector<double>& a_schedule,
                                     const Configuration& config);

// Dominant-vertex tree of the top-stage box when that box is good; absent
// otherwise.
std::optional<std::pair<WeightedTree, HctCertificate>> construct_hct(
    const StageHierarchy& hierarchy, const Configuration& config);

// Arbitrary box sides: n = sup{i : m_i <= m}, k = floor(m/m_n); joins the
// per-block dominant trees through the maximum-weight block dominant. The
// merged diameter exceeds the block trees' by at most 2.
std::optional<std::pair<WeightedTree, HctCertificate>> extend_to_general_m(
    const ModelParams& params, double xi_prime, std::int64_t D1, std::int64_t m,
    const Configuration& config);

enum class HctMode { Certificate, Exhaustive };

struct HctValidateOptions {
  std::int64_t exhaustive_cap = 64;  // vertex cap for exhaustive mode
};

HctReport validate_hct(const WeightedTree& tree, double rho, double K, HctMode mode,
                       const HctCertificate* cert = nullptr,
                       const HctValidateOptions& opts = {});

std::string tree_to_json(const WeightedTree& tree, const HctCertificate* cert);

}  // namespace sfp

#endif
