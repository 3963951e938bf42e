#include "sfp/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace sfp {

std::int64_t Configuration::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& nb : adjacency) twice += static_cast<std::int64_t>(nb.size());
  return twice / 2;
}

bool Configuration::has_edge(std::int32_t u, std::int32_t v) const {
  const auto& nb = adjacency[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::int64_t max_pairs_from_env(std::int64_t fallback) {
  if (const char* env = std::getenv("SFP_MAX_PAIRS")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return fallback;
}

namespace {

// Integer L1/Linf distance between lattice vertices, torus-aware.
std::int64_t lattice_distance(const std::int32_t* a, const std::int32_t* b, int d,
                              Norm norm, Boundary boundary, std::int64_t side) {
  std::int64_t acc = 0;
  for (int i = 0; i < d; ++i) {
    std::int64_t diff = std::abs(static_cast<std::int64_t>(a[i]) - b[i]);
    if (boundary == Boundary::Torus) diff = std::min(diff, side - diff);
    if (norm == Norm::L1)
      acc += diff;
    else
      acc = std::max(acc, diff);
  }
  return acc;
}

struct SweepContext {
  const BoxGeometry* geometry;
  const ModelParams* params;
  std::uint64_t seed;
  std::vector<std::int32_t> coords;  // n*d, relative to origin
  std::vector<double> pow_alpha_inv; // r^-alpha for integer lattice distances
  std::int64_t n;
  int d;

  void init(const BoxGeometry& g, const ModelParams& p, std::uint64_t master_seed) {
    geometry = &g;
    params = &p;
    seed = master_seed;
    n = g.vertex_count();
    d = g.dim();
    coords.resize(static_cast<size_t>(n) * d);
    for (std::int64_t v = 0; v < n; ++v) {
      std::int64_t rest = v;
      for (int i = d - 1; i >= 0; --i) {
        coords[static_cast<size_t>(v) * d + i] = static_cast<std::int32_t>(rest % g.side);
        rest /= g.side;
      }
    }
    const std::int64_t rmax = static_cast<std::int64_t>(d) * g.side;
    pow_alpha_inv.resize(static_cast<size_t>(rmax) + 1);
    pow_alpha_inv[0] = 0.0;
    for (std::int64_t r = 1; r <= rmax; ++r)
      pow_alpha_inv[r] = std::pow(static_cast<double>(r), -p.alpha);
  }
};

// Sweep rows [row_begin, row_end) and append open pairs. Every pair's uniform
// comes from its canonical substream, so any partition of the rows yields the
// same edge set.
void sweep_rows(const SweepContext& ctx, const std::vector<double>& weights,
                const std::vector<std::uint8_t>* green, std::int64_t row_begin,
                std::int64_t row_end,
                std::vector<std::pair<std::int32_t, std::int32_t>>& out) {
  const double lambda = ctx.params->lambda;
  if (lambda <= 0.0) return;
  const Norm norm = ctx.params->norm;
  const Boundary boundary = ctx.geometry->boundary;
  const std::int64_t side = ctx.geometry->side;
  const RngStream base{ctx.seed, StreamKind::Edge, 0};
  for (std::int64_t i = row_begin; i < row_end; ++i) {
    if (green && !(*green)[i]) continue;
    const double lw = lambda * weights[i];
    const std::int32_t* ci = &ctx.coords[static_cast<size_t>(i) * ctx.d];
    for (std::int64_t j = i + 1; j < ctx.n; ++j) {
      if (green && !(*green)[j]) continue;
      const std::int64_t r = lattice_distance(
          ci, &ctx.coords[static_cast<size_t>(j) * ctx.d], ctx.d, norm, boundary, side);
      const double t = lw * weights[j] * ctx.pow_alpha_inv[r];
      RngStream es = base;
      es.substream = edge_substream(static_cast<std::uint32_t>(i),
                                    static_cast<std::uint32_t>(j));
      const double u = stream_uniform(es);
      // p = 1-exp(-t) <= t, so u >= t rejects without the expm1.
      if (u >= t) continue;
      if (u < -std::expm1(-t))
        out.emplace_back(static_cast<std::int32_t>(i), static_cast<std::int32_t>(j));
    }
  }
}

std::vector<std::vector<std::int32_t>> sweep_all(
    const SweepContext& ctx, const std::vector<double>& weights,
    const std::vector<std::uint8_t>* green, int threads) {
  std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> parts;
  if (threads <= 1 || ctx.n < 256) {
    parts.resize(1);
    sweep_rows(ctx, weights, green, 0, ctx.n, parts[0]);
  } else {
    parts.resize(threads);
    std::vector<std::thread> pool;
    // Balance the triangular loop: thread t takes rows t, 2T-1-t, 2T+t, ...
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::int64_t i = 0; i < ctx.n; ++i) {
          const std::int64_t phase = i % (2 * threads);
          const std::int64_t owner = phase < threads ? phase : 2 * threads - 1 - phase;
          if (owner == t) sweep_rows(ctx, weights, green, i, i + 1, parts[t]);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<std::int32_t>> adj(static_cast<size_t>(ctx.n));
  for (auto& part : parts)
    for (auto [i, j] : part) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

void check_budget(const BoxGeometry& geometry, const SampleOptions& opts) {
  const std::int64_t n = geometry.vertex_count();
  const std::int64_t pairs = n * (n - 1) / 2;
  const std::int64_t budget = max_pairs_from_env(opts.max_pairs);
  if (pairs > budget)
    throw resource_error("pair sweep over " + std::to_string(pairs) +
                         " pairs exceeds the budget of " + std::to_string(budget));
}

}  // namespace

Configuration sample_configuration(const BoxGeometry& geometry,
                                   const ModelParams& params,
                                   std::uint64_t master_seed,
                                   const SampleOptions& opts) {
  geometry.validate();
  params.validate();
  if (geometry.vertex_count() < 1) throw validation_error("box must contain a vertex");
  check_budget(geometry, opts);

  SweepContext ctx;
  ctx.init(geometry, params, master_seed);

  Configuration cfg;
  cfg.geometry = geometry;
  cfg.params = params;
  cfg.master_seed = master_seed;
  cfg.restricted_to_green = opts.restrict_to_green;
  cfg.weights.resize(static_cast<size_t>(ctx.n));
  cfg.green.resize(static_cast<size_t>(ctx.n));
  for (std::int64_t v = 0; v < ctx.n; ++v) {
    cfg.weights[v] = sample_weight(params.weight_law, params.tau,
                                   {master_seed, StreamKind::Weights,
                                    static_cast<std::uint64_t>(v)});
    cfg.green[v] =
        params.mu >= 1.0 ||
        stream_uniform({master_seed, StreamKind::Green, static_cast<std::uint64_t>(v)}) <=
            params.mu;
  }
  cfg.adjacency = sweep_all(ctx, cfg.weights,
                            opts.restrict_to_green ? &cfg.green : nullptr, opts.threads);
  return cfg;
}

bool law_dominates(const WeightLaw& lo, const WeightLaw& hi, double tau) {
  const double lo_min = weight_support_min(lo, tau);
  const double hi_min = weight_support_min(hi, tau);
  if (std::holds_alternative<Constant>(lo)) return lo_min <= hi_min;
  if (std::holds_alternative<Constant>(hi)) return false;  // unbounded vs point mass
  // Both Pareto tails with the same exponent: compare the constants.
  const double c_lo = std::holds_alternative<StandardPareto>(lo)
                          ? 1.0
                          : std::get<ParetoC>(lo).c;
  const double c_hi = std::holds_alternative<StandardPareto>(hi)
                          ? 1.0
                          : std::get<ParetoC>(hi).c;
  return c_lo <= c_hi;
}

std::pair<Configuration, Configuration> coupled_pair(
    const BoxGeometry& geometry, const ModelParams& params_lo,
    const ModelParams& params_hi, std::uint64_t master_seed,
    const SampleOptions& opts) {
  params_lo.validate();
  params_hi.validate();
  if (params_lo.d != params_hi.d || params_lo.alpha != params_hi.alpha ||
      params_lo.tau != params_hi.tau || params_lo.mu != params_hi.mu ||
      params_lo.norm != params_hi.norm)
    throw validation_error("coupled_pair: parameter sets may differ only in lambda and weight law");
  if (params_lo.lambda > params_hi.lambda)
    throw validation_error("coupled_pair: lambda_lo must be <= lambda_hi");
  if (!law_dominates(params_lo.weight_law, params_hi.weight_law, params_lo.tau))
    throw validation_error("coupled_pair: weight law of the hi side must dominate the lo side");
  // Uniforms are pure functions of (seed, kind, substream), so sampling twice
  // with the same seed realizes the shared-uniform coupling.
  return {sample_configuration(geometry, params_lo, master_seed, opts),
          sample_configuration(geometry, params_hi, master_seed, opts)};
}

std::vector<std::vector<std::int32_t>> conditional_edges(
    const std::vector<double>& weights, const BoxGeometry& geometry,
    const ModelParams& params, std::uint64_t master_seed,
    const SampleOptions& opts) {
  geometry.validate();
  params.validate();
  if (static_cast<std::int64_t>(weights.size()) != geometry.vertex_count())
    throw validation_error("conditional_edges: weight count must match the box");
  for (double w : weights)
    if (!(w > 0)) throw validation_error("conditional_edges: weights must be positive");
  check_budget(geometry, opts);
  SweepContext ctx;
  ctx.init(geometry, params, master_seed);
  return sweep_all(ctx, weights, nullptr, opts.threads);
}

void write_vertices_csv(const Configuration& config, std::ostream& os) {
  os << "index";
  for (int i = 0; i < config.geometry.dim(); ++i) os << ",x" << i;
  os << ",weight,green\n";
  for (std::int64_t v = 0; v < config.vertex_count(); ++v) {
    os << v;
    for (auto c : config.geometry.coords(v)) os << ',' << c;
    os << ',' << config.weights[v] << ',' << int(config.green[v]) << '\n';
  }
}

void write_edges_csv(const Configuration& config, std::ostream& os) {
  os << "u,v\n";
  for (std::int64_t u = 0; u < config.vertex_count(); ++u)
    for (std::int32_t v : config.adjacency[u])
      if (u < v) os << u << ',' << v << '\n';
}

Configuration make_configuration(
    BoxGeometry geometry, ModelParams params, std::vector<double> weights,
    std::vector<std::pair<std::int32_t, std::int32_t>> edges) {
  Configuration cfg;
  cfg.geometry = std::move(geometry);
  cfg.params = std::move(params);
  cfg.weights = std::move(weights);
  cfg.green.assign(cfg.weights.size(), 1);
  cfg.adjacency.resize(cfg.weights.size());
  for (auto [u, v] : edges) {
    if (u == v) throw validation_error("self-loops are not part of the model");
    cfg.adjacency[u].push_back(v);
    cfg.adjacency[v].push_back(u);
  }
  for (auto& nb : cfg.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return cfg;
}

}  // namespace sfp
