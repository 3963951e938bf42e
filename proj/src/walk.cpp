#include "sfp/walk.hpp"

#include <cmath>

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "sfp/graph.hpp"

namespace sfp {

namespace {

std::vector<double> l1_from_start(const Configuration& config, std::int32_t start) {
  const auto sx = config.geometry.coords(start);
  std::vector<double> out(config.vertex_count());
  for (std::int64_t v = 0; v < config.vertex_count(); ++v)
    out[v] = vertex_distance(sx, config.geometry.coords(v), config.geometry, Norm::L1);
  return out;
}

}  // namespace

EscapeEstimate srw_escape_probability(const Configuration& config, std::int32_t start,
                                      double R, const WalkOptions& opts) {
  EscapeEstimate est;
  est.n_walks = opts.n_walks;
  if (config.adjacency[start].empty()) {
    est.isolated = true;
    return est;
  }
  if (!(R >= 1)) throw validation_error("escape radius must be >= 1");
  const auto dist = l1_from_start(config, start);

  std::int64_t escapes = 0;
  for (std::int64_t w = 0; w < opts.n_walks; ++w) {
    CounterRng rng({opts.walk_seed, StreamKind::Walk, static_cast<std::uint64_t>(w)});
    std::int32_t pos = start;
    bool escaped = false;
    std::int64_t steps = 0;
    for (; steps < opts.max_steps; ++steps) {
      const auto& nb = config.adjacency[pos];
      pos = nb[rng.next_bits() % nb.size()];
      if (dist[pos] >= R) {
        escaped = true;
        break;
      }
      if (pos == start) break;
    }
    if (escaped)
      ++escapes;
    else if (steps == opts.max_steps)
      ++est.truncated;  // conservative: counts as a non-escape
  }
  est.escape = static_cast<double>(escapes) / static_cast<double>(opts.n_walks);
  est.std_error = std::sqrt(est.escape * (1.0 - est.escape) /
                            static_cast<double>(opts.n_walks));
  return est;
}

double effective_resistance(const Configuration& config, std::int32_t start, double R,
                            double tolerance) {
  const auto l1 = l1_from_start(config, start);
  const ClusterLabeling cl = clusters(config);
  const std::int32_t cluster = cl.label[start];

  // Interior = cluster vertices strictly inside radius R; everything in the
  // cluster at distance >= R is grounded.
  std::vector<std::int32_t> interior_index(config.vertex_count(), -1);
  std::vector<std::int32_t> interior;
  bool has_boundary = false;
  for (std::int32_t v = 0; v < config.vertex_count(); ++v) {
    if (cl.label[v] != cluster) continue;
    if (l1[v] >= R) {
      has_boundary = true;
    } else {
      interior_index[v] = static_cast<std::int32_t>(interior.size());
      interior.push_back(v);
    }
  }
  if (!has_boundary) return kInfiniteResistance;

  using Sparse = Eigen::SparseMatrix<double>;
  std::vector<Eigen::Triplet<double>> trips;
  for (std::int32_t row = 0; row < static_cast<std::int32_t>(interior.size()); ++row) {
    const std::int32_t v = interior[row];
    const double deg = static_cast<double>(config.adjacency[v].size());
    trips.emplace_back(row, row, deg);
    for (std::int32_t w : config.adjacency[v])
      if (interior_index[w] >= 0) trips.emplace_back(row, interior_index[w], -1.0);
  }
  Sparse lap(static_cast<int>(interior.size()), static_cast<int>(interior.size()));
  lap.setFromTriplets(trips.begin(), trips.end());

  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<int>(interior.size()));
  rhs[interior_index[start]] = 1.0;  // unit current injection at start

  Eigen::ConjugateGradient<Sparse, Eigen::Lower | Eigen::Upper> cg;
  cg.setTolerance(tolerance);
  cg.setMaxIterations(20 * static_cast<int>(interior.size()) + 100);
  cg.compute(lap);
  const Eigen::VectorXd phi = cg.solve(rhs);
  if (cg.info() != Eigen::Success)
    throw numeric_error("effective_resistance: conjugate gradient did not converge");
  return phi[interior_index[start]];  // potential at start = R_eff for unit current
}

ResistanceCurve resistance_curve(const Configuration& config, std::int32_t start,
                                 const std::vector<double>& radii,
                                 const WalkOptions& opts, double tolerance) {
  ResistanceCurve curve;
  for (double R : radii) {
    curve.radii.push_back(R);
    const double reff = effective_resistance(config, start, R, tolerance);
    curve.r_eff.push_back(reff);
    const EscapeEstimate est = srw_escape_probability(config, start, R, opts);
    curve.escape.push_back(est.escape);
    curve.escape_err.push_back(est.std_error);
    curve.truncated_fraction.push_back(
        est.n_walks > 0 ? static_cast<double>(est.truncated) / est.n_walks : 0.0);
  }
  return curve;
}

RegimeContrast regime_contrast(const ModelParams& params_transient,
                               const ModelParams& params_recurrent,
                               const BoxGeometry& geometry,
                               const std::vector<double>& radii,
                               std::uint64_t master_seed, const WalkOptions& opts,
                               const SampleOptions& sample) {
  const double gt = gamma_param(params_transient);
  if (!((gt > 1 && gt < 2) ||
        (params_transient.alpha > params_transient.d &&
         params_transient.alpha < 2.0 * params_transient.d)))
    throw validation_error("transient slot must satisfy 1<gamma<2 or d<alpha<2d");
  const double gr = gamma_param(params_recurrent);
  if (!(params_recurrent.d == 2 && params_recurrent.alpha > 4 &&
        (params_recurrent.tau > 2 || gr > 2)))
    throw validation_error("recurrent slot must satisfy d=2, alpha>4, tau>2 or gamma>2");

  RegimeContrast out;
  auto run = [&](const ModelParams& p) -> ResistanceCurve {
    const Configuration cfg = sample_configuration(geometry, p, master_seed, sample);
    const ClusterLabeling cl = clusters(cfg);
    if (cl.largest_size() < 2) {
      ResistanceCurve c;
      c.insufficient_cluster = true;
      return c;
    }
    // Walk from the member of the largest cluster closest to the box centre.
    std::vector<std::int64_t> centre(cfg.geometry.dim(),
                                     cfg.geometry.origin[0] + cfg.geometry.side / 2);
    std::int32_t start = -1;
    double best = 1e300;
    for (std::int32_t v = 0; v < cfg.vertex_count(); ++v) {
      if (cl.label[v] != cl.largest_id) continue;
      const double dd = vertex_distance(centre, cfg.geometry.coords(v), cfg.geometry, Norm::L1);
      if (dd < best) {
        best = dd;
        start = v;
      }
    }
    return resistance_curve(cfg, start, radii, opts);
  };
  out.transient = run(params_transient);
  out.recurrent = run(params_recurrent);

  auto growth = [](const ResistanceCurve& c) {
    double lo = -1, hi = -1;
    for (double r : c.r_eff)
      if (r != kInfiniteResistance) {
        if (lo < 0) lo = r;
        hi = r;
      }
    return (lo > 0 && hi > 0) ? hi / lo : 0.0;
  };
  out.transient_growth_ratio = growth(out.transient);
  out.recurrent_growth_ratio = growth(out.recurrent);

  auto increments_slowing = [](const ResistanceCurve& c) {
    double prev_inc = -1;
    bool slowing = true;
    for (size_t i = 1; i < c.r_eff.size(); ++i) {
      if (c.r_eff[i] == kInfiniteResistance || c.r_eff[i - 1] == kInfiniteResistance)
        return false;
      const double inc = c.r_eff[i] - c.r_eff[i - 1];
      if (prev_inc >= 0 && inc > prev_inc + 1e-12) slowing = false;
      prev_inc = inc;
    }
    return slowing;
  };
  out.transient_looks_bounded = increments_slowing(out.transient);
  out.recurrent_looks_divergent =
      out.recurrent_growth_ratio > out.transient_growth_ratio;
  return out;
}

}  // namespace sfp
