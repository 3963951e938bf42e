#include "sfp/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <json.hpp>

#include "sfp/graph.hpp"

namespace sfp {

namespace {

double simpson(double a, double b, double fa, double fm, double fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b,
                     double fa, double fm, double fb, double whole, double tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int depth = 40) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  return adaptive_step(f, a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, depth);
}

// E[1 - exp(-s W1 W2)] for i.i.d. standard Pareto weights, via the product
// density f_Z(z) = (tau-1)^2 z^{-tau} log z on [1, inf), substituted z = e^t.
double edge_marginal_std(double tau, double s) {
  if (s <= 0.0) return 0.0;
  const double t1 = tau - 1.0;
  const double T = (std::max(0.0, std::log(1.0 / s)) + 40.0) / t1 + 10.0;
  auto g = [&](double t) {
    return -std::expm1(-s * std::exp(t)) * t1 * t1 * t * std::exp(-t1 * t);
  };
  const double coarse = std::max(std::abs(adaptive_simpson(g, 0.0, T, 1e-6)), 1e-300);
  return adaptive_simpson(g, 0.0, T, 1e-11 * coarse);
}

double pareto_c_of(const WeightLaw& law) {
  if (std::holds_alternative<StandardPareto>(law)) return 1.0;
  if (std::holds_alternative<ParetoC>(law)) return std::get<ParetoC>(law).c;
  throw validation_error("this oracle needs a Pareto weight law");
}

std::int64_t pow_int(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

bool BoundsReport::verdict() const {
  switch (relation) {
    case Relation::LessEq:
      return lhs_value <= bound_value;
    case Relation::GreaterEq:
      return lhs_value >= bound_value;
    case Relation::ApproxEq: {
      const double tol = std::max(quadrature_error.value_or(0.0),
                                  1e-12 * std::max(1.0, std::abs(bound_value)));
      return std::abs(lhs_value - bound_value) <= tol;
    }
  }
  return false;
}

std::string BoundsReport::to_json() const {
  nlohmann::json j;
  j["lemma"] = lemma;
  j["inputs"] = inputs;
  j["lhs_value"] = lhs_value;
  j["bound_value"] = bound_value;
  j["relation"] = relation == Relation::LessEq      ? "le"
                  : relation == Relation::GreaterEq ? "ge"
                                                    : "approx";
  if (quadrature_error) j["quadrature_error"] = *quadrature_error;
  j["verdict"] = verdict();
  return j.dump(2);
}

BoundsReport max_weight_conditional(std::int64_t n, double K1, double K2, double tau,
                                    double c) {
  if (n < 1) throw validation_error("n must be at least 1");
  if (!(c > 0.0) || !(tau > 1.0)) throw validation_error("need c > 0 and tau > 1");
  const double support = std::pow(c, 1.0 / (tau - 1.0));
  if (!(K2 >= K1 && K1 >= support))
    throw validation_error("need K2 >= K1 >= c^{1/(tau-1)}");
  const double x = std::pow(K2 / K1, -(tau - 1.0));
  BoundsReport r;
  r.lemma = "max_weight_conditional";
  r.inputs = {{"n", static_cast<double>(n)}, {"K1", K1}, {"K2", K2}, {"tau", tau},
              {"c", c}};
  r.lhs_value = std::pow(1.0 - x, static_cast<double>(n));
  r.bound_value = std::exp(-static_cast<double>(n) * x);
  r.relation = Relation::LessEq;
  return r;
}

double big_degree_box_complement(std::int64_t N, double beta,
                                 const ModelParams& params) {
  if (N < 2) throw validation_error("N must be at least 2");
  if (!(beta > 0.0)) throw validation_error("beta must be positive");
  const double c = pareto_c_of(params.weight_law);
  const double threshold = beta * std::pow(static_cast<double>(N), params.alpha / 2.0);
  const double q =
      std::min(1.0, c * std::pow(threshold, -(params.tau - 1.0)));
  const std::int64_t trials = pow_int(N, params.d);
  const std::int64_t t =
      static_cast<std::int64_t>(std::ceil(std::log(static_cast<double>(N))));
  if (t > trials) return 1.0;  // cannot have more successes than trials
  if (q >= 1.0) return 0.0;
  if (q <= 0.0) return 1.0;
  // P(X < t) for X ~ Bin(trials, q); few terms, each assembled in log space
  double sum = 0.0;
  for (std::int64_t l = 0; l < t; ++l) {
    const double log_choose = std::lgamma(trials + 1.0) - std::lgamma(l + 1.0) -
                              std::lgamma(trials - l + 1.0);
    sum += std::exp(log_choose + l * std::log(q) +
                    (trials - l) * std::log1p(-q));
  }
  return std::min(1.0, sum);
}

BoundsReport big_degree_box_probability(std::int64_t N, double beta,
                                        const ModelParams& params) {
  BoundsReport r;
  r.lemma = "big_degree_box_probability";
  r.inputs = {{"N", static_cast<double>(N)}, {"beta", beta},
              {"alpha", params.alpha},       {"tau", params.tau},
              {"d", static_cast<double>(params.d)}};
  r.lhs_value = 1.0 - big_degree_box_complement(N, beta, params);
  r.bound_value = 1.0;
  r.relation = Relation::LessEq;
  return r;
}

bool box_distance_bound(int d, std::int64_t k, std::int64_t N,
                        const std::vector<std::int64_t>& u1,
                        const std::vector<std::int64_t>& u2) {
  std::int64_t dist = 0;
  for (int i = 0; i < d; ++i) dist += std::abs(u1[i] - u2[i]);
  return dist <= 3 * d * k * N;
}

BoundsReport coarse_connectivity_domination(std::int64_t N, std::int64_t k,
                                            double beta, const ModelParams& params,
                                            std::int64_t n_seeds,
                                            std::uint64_t master_seed) {
  params.validate();
  if (!(beta > 0.0)) throw validation_error("beta must be positive");
  if (N < 1 || k < 1) throw validation_error("N and k must be positive");
  const double c = pareto_c_of(params.weight_law);
  const int d = params.d;
  const double threshold = beta * std::pow(static_cast<double>(N), params.alpha / 2.0);
  const std::int64_t per_box = pow_int(N, d);

  std::int64_t accepted = 0, open = 0, trials = 0;
  const std::int64_t trial_budget = std::max<std::int64_t>(1000, n_seeds * 1000);
  std::vector<std::int64_t> u1(d), u2(d);
  while (accepted < n_seeds) {
    if (trials >= trial_budget && accepted * 1000 < trials)
      throw resource_error(
          "conditioning acceptance below 1e-3; decrease beta or N");
    CounterRng rng({master_seed, StreamKind::Weights,
                    static_cast<std::uint64_t>(trials)});
    ++trials;
    double w1 = 0.0, w2 = 0.0;
    std::int64_t arg1 = 0, arg2 = 0;
    for (std::int64_t v = 0; v < per_box; ++v) {
      const double w = weight_quantile(params.weight_law, params.tau,
                                       rng.next_uniform());
      if (w > w1) {
        w1 = w;
        arg1 = v;
      }
    }
    for (std::int64_t v = 0; v < per_box; ++v) {
      const double w = weight_quantile(params.weight_law, params.tau,
                                       rng.next_uniform());
      if (w > w2) {
        w2 = w;
        arg2 = v;
      }
    }
    if (w1 < threshold || w2 < threshold) continue;
    ++accepted;
    // decode row-major positions; box 2 sits k N lattice steps along axis 0
    for (int i = d - 1; i >= 0; --i) {
      u1[i] = arg1 % N;
      arg1 /= N;
      u2[i] = arg2 % N;
      arg2 /= N;
    }
    u2[0] += k * N;
    std::int64_t dist = 0;
    for (int i = 0; i < d; ++i) dist += std::abs(u1[i] - u2[i]);
    const double p = edge_probability(w1, w2, static_cast<double>(dist),
                                      params.lambda, params.alpha);
    if (rng.next_uniform() <= p) ++open;
  }
  const double freq = static_cast<double>(open) / static_cast<double>(accepted);
  const double se =
      std::sqrt(std::max(freq * (1.0 - freq), 1e-12) / static_cast<double>(accepted));
  const double lambda0 =
      params.lambda * beta * beta * std::pow(3.0 * d, -params.alpha);
  const double rhs = edge_marginal_std(
      params.tau, lambda0 / std::pow(static_cast<double>(k), params.alpha));

  BoundsReport r;
  r.lemma = "coarse_connectivity_domination";
  r.inputs = {{"N", static_cast<double>(N)},
              {"k", static_cast<double>(k)},
              {"beta", beta},
              {"lambda", params.lambda},
              {"alpha", params.alpha},
              {"tau", params.tau},
              {"c", c},
              {"accepted", static_cast<double>(accepted)},
              {"mc_std_error", se},
              {"rhs", rhs}};
  r.lhs_value = freq;
  r.bound_value = rhs - 3.0 * se;
  r.relation = Relation::GreaterEq;
  return r;
}

BoundsReport cluster_connectivity_bound(std::int64_t N, std::int64_t k, double beta,
                                        const ModelParams& params) {
  params.validate();
  if (!(params.alpha > params.d && params.alpha < 2.0 * params.d))
    throw validation_error("cluster bound applies for alpha in (d, 2d)");
  if (std::holds_alternative<StandardPareto>(params.weight_law) ||
      std::holds_alternative<ParetoC>(params.weight_law) ||
      std::holds_alternative<Constant>(params.weight_law)) {
    // all supported laws are bounded below; nothing to reject
  }
  const double wmin = weight_support_min(params.weight_law, params.tau);
  const double bound =
      -std::expm1(-params.lambda * std::pow(3.0 * params.d, -params.alpha) * beta *
                  beta * wmin * wmin /
                  std::pow(static_cast<double>(k), params.alpha));
  BoundsReport r;
  r.lemma = "cluster_connectivity_bound";
  r.inputs = {{"N", static_cast<double>(N)},
              {"k", static_cast<double>(k)},
              {"beta", beta},
              {"lambda", params.lambda},
              {"alpha", params.alpha},
              {"wmin", wmin}};
  r.lhs_value = bound;
  r.bound_value = bound;
  r.relation = Relation::ApproxEq;
  return r;
}

double product_weight_expectation_exact(double u, double tau, double c,
                                        double lambda_scale) {
  if (!(u >= 1.0)) throw validation_error("u must be at least 1");
  if (!(tau > 1.0)) throw validation_error("tau must exceed 1");
  // reduce to standard Pareto: W = c^{1/(tau-1)} W_std, so the scale folds
  // into u' = u / (lambda_scale c^{2/(tau-1)})
  const double up = u / (lambda_scale * std::pow(c, 2.0 / (tau - 1.0)));
  if (up <= 1.0) return 1.0;
  const double L = std::log(up), t1 = tau - 1.0;
  const double tail = std::pow(up, -t1) * (t1 * L + 1.0);
  if (std::abs(tau - 2.0) < 1e-12) return (L + 1.0 + 0.5 * L * L) / up;
  const double s = 2.0 - tau;
  const double body =
      t1 * t1 * (std::pow(up, s) * (s * L - 1.0) + 1.0) / (s * s) / up;
  return tail + body;
}

BoundsReport product_weight_expectation(double u, double tau, double c,
                                        double lambda_scale, double rel_tol) {
  const double up = u / (lambda_scale * std::pow(c, 2.0 / (tau - 1.0)));
  // the integrand min((v1 v2)^{-1/(tau-1)} / up, 1) saturates below the kink
  // locus v1 v2 = up^{-(tau-1)}; split the inner integral there so the
  // adaptive rule only ever sees the smooth branch
  auto inner = [&](double v1, double tol) {
    if (up <= 1.0) return 1.0;
    const double kink =
        std::pow(up, -(tau - 1.0)) / std::max(v1, 1e-300);
    const double lo = std::min(1.0, kink);
    double acc = lo;
    if (lo < 1.0)
      acc += adaptive_simpson(
          [&](double v2) { return std::pow(v1 * v2, -1.0 / (tau - 1.0)) / up; },
          lo, 1.0, tol);
    return acc;
  };
  // below v1_0 the kink sits past 1, so the inner integral is identically 1
  const double v1_0 = std::min(1.0, std::pow(std::max(up, 1.0), -(tau - 1.0)));
  auto outer = [&](double tol) {
    double acc = v1_0;
    if (v1_0 < 1.0)
      acc += adaptive_simpson([&](double v1) { return inner(v1, 0.05 * tol); },
                              v1_0, 1.0, tol);
    return acc;
  };
  const double coarse = outer(1e-5);
  const double scale = std::max(std::abs(coarse), 1e-300);
  const double value = outer(rel_tol * scale);

  BoundsReport r;
  r.lemma = "product_weight_expectation";
  r.inputs = {{"u", u}, {"tau", tau}, {"c", c}, {"lambda_scale", lambda_scale}};
  r.lhs_value = value;
  r.bound_value = product_weight_expectation_exact(u, tau, c, lambda_scale);
  r.relation = Relation::ApproxEq;
  r.quadrature_error = 4.0 * rel_tol * scale;
  return r;
}

DecayFit product_weight_decay(double tau, double c, double lambda_scale, double u_lo,
                              double u_hi, int n_points) {
  if (n_points < 2 || !(u_hi > u_lo) || !(u_lo >= 1.0))
    throw validation_error("need n_points >= 2 and 1 <= u_lo < u_hi");
  DecayFit fit;
  fit.target_slope = tau > 2.0 ? -1.0 : -(tau - 1.0);
  std::vector<double> xs, ys;
  for (int i = 0; i < n_points; ++i) {
    const double f = static_cast<double>(i) / (n_points - 1);
    const double u = u_lo * std::pow(u_hi / u_lo, f);
    const double lhs = product_weight_expectation_exact(u, tau, c, lambda_scale);
    fit.u.push_back(u);
    fit.lhs.push_back(lhs);
    const double L = std::log(u);
    double divisor = 1.0;
    if (std::abs(tau - 2.0) < 1e-12)
      divisor = 0.5 * L * L;  // the tau = 2 boundary carries a squared log
    else if (tau < 2.0)
      divisor = L;
    xs.push_back(L);
    ys.push_back(std::log(lhs / divisor));
  }
  double mx = 0, my = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= xs.size();
  my /= ys.size();
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  fit.slope = sxy / sxx;
  return fit;
}

ScheduleReport recurrence_marginal_check(const ModelParams& params,
                                         const std::vector<std::int64_t>& k_schedule) {
  params.validate();
  const double g = gamma_param(params);
  if (params.d != 2 || !(params.alpha >= 4.0) || !(params.tau > 2.0 || g > 2.0))
    throw validation_error(
        "recurrence marginal requires d=2, alpha >= 4, and tau > 2 or gamma > 2");
  if (k_schedule.empty()) throw validation_error("empty k schedule");
  const double c = pareto_c_of(params.weight_law);
  const double scale = params.lambda * std::pow(c, 2.0 / (params.tau - 1.0));

  ScheduleReport out;
  out.k = k_schedule;
  for (std::int64_t k : k_schedule) {
    const double s = scale / std::pow(static_cast<double>(k), params.alpha);
    out.values.push_back(std::pow(static_cast<double>(k), 4.0) *
                         edge_marginal_std(params.tau, s));
  }
  out.decreasing = true;
  for (size_t i = 1; i < out.values.size(); ++i)
    if (!(out.values[i] < out.values[i - 1])) out.decreasing = false;

  std::vector<double> xs, ys;
  for (size_t i = 0; i < out.values.size(); ++i) {
    if (out.values[i] <= 0.0) continue;
    const double lk = std::log(static_cast<double>(out.k[i]));
    const double divisor = params.tau <= 2.0 ? lk : 1.0;  // strip the log factor
    xs.push_back(lk);
    ys.push_back(std::log(out.values[i] / divisor));
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
      sxx += (xs[i] - mx) * (xs[i] - mx);
      sxy += (xs[i] - mx) * (ys[i] - my);
    }
    out.loglog_slope = sxy / sxx;
  }

  out.report.lemma = "recurrence_marginal_check";
  out.report.inputs = {{"alpha", params.alpha},
                       {"tau", params.tau},
                       {"lambda", params.lambda},
                       {"gamma", g}};
  out.report.lhs_value = out.values.back();
  out.report.bound_value = out.values.front();
  out.report.relation = Relation::LessEq;
  return out;
}

TransienceTable transience_sequences(int n_max, const ModelParams& params) {
  params.validate();
  const double g = gamma_param(params);
  if (!(g < 2.0)) throw validation_error("transience sequences require gamma < 2");
  if (n_max < 1) throw validation_error("n_max must be at least 1");
  const double d = params.d, alpha = params.alpha;

  TransienceTable t;
  double sum = 0.0, log_prod_D = 0.0;
  std::vector<double> log_u_all;  // index n-1
  for (int n = 1; n <= n_max; ++n) {
    t.n.push_back(n);
    const double log_D = std::log(2.0) + 2.0 * std::log(n + 1.0);
    const double log_C = 2.0 * d * std::log(n + 1.0);
    const double log_u = (alpha / 2.0) * std::log(d) +
                         (d * (2.0 - g) / 2.0) * std::log(n + 2.0) +
                         ((n + 2.0) * alpha / 2.0) * std::log(2.0) +
                         alpha * std::lgamma(n + 4.0);
    t.log_D.push_back(log_D);
    t.log_C.push_back(log_C);
    t.log_u.push_back(log_u);
    log_u_all.push_back(log_u);
    log_prod_D += log_D;

    const double increment = std::pow(n + 1.0, -2.0 * d);
    if (!(increment < std::pow(2.0, 2.0 * d) * std::pow(static_cast<double>(n),
                                                        -2.0 * d)))
      t.cauchy_ok = false;
    sum += increment;
    t.partial_sum_C_inv.push_back(sum);

    if (n >= 3) {
      // exponent of the G-bound collapses to n^{d(2-gamma)}; compare in logs
      const double lhs_log =
          -alpha * std::log(d) + 2.0 * log_u_all[n - 3] - alpha * log_prod_D;
      const double rhs_log = d * (2.0 - g) * std::log(static_cast<double>(n));
      t.identity_residual.push_back(std::abs(std::expm1(lhs_log - rhs_log)));
    } else {
      t.identity_residual.push_back(0.0);
    }
  }
  return t;
}

CoarseGrainResult coarse_grain(const Configuration& config, std::int64_t N,
                               double beta, CoarseMode mode) {
  const std::int64_t side = config.geometry.side;
  const int d = config.geometry.dim();
  if (N < 1 || side % N != 0)
    throw validation_error("box side must be divisible by N");
  if (!(beta > 0.0)) throw validation_error("beta must be positive");

  CoarseGrainResult out;
  out.N = N;
  out.beta = beta;
  out.mode = mode;
  out.boxes_per_axis = side / N;
  const std::int64_t boxes = pow_int(out.boxes_per_axis, d);
  out.good.assign(boxes, 0);
  out.dominant.assign(boxes, -1);

  const double threshold =
      beta * std::pow(static_cast<double>(N), config.params.alpha / 2.0);

  // vertex -> coarse box, row-major over the box grid
  auto box_of = [&](std::int64_t v) {
    const auto xyz = config.geometry.coords(v);
    std::int64_t b = 0;
    for (int i = 0; i < d; ++i)
      b = b * out.boxes_per_axis + (xyz[i] - config.geometry.origin[i]) / N;
    return b;
  };

  std::vector<std::int32_t> anchor_cluster;  // vertex -> cluster anchor label
  if (mode == CoarseMode::MaxWeight) {
    for (std::int64_t v = 0; v < config.vertex_count(); ++v) {
      const std::int64_t b = box_of(v);
      if (out.dominant[b] < 0 || config.weights[v] > config.weights[out.dominant[b]])
        out.dominant[b] = static_cast<std::int32_t>(v);
    }
    for (std::int64_t b = 0; b < boxes; ++b)
      out.good[b] = config.weights[out.dominant[b]] >= threshold;
  } else {
    // largest in-box cluster per coarse box (edges truncated to the box)
    std::vector<std::int32_t> parent(config.vertex_count());
    for (std::int64_t v = 0; v < config.vertex_count(); ++v)
      parent[v] = static_cast<std::int32_t>(v);
    std::function<std::int32_t(std::int32_t)> find = [&](std::int32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    for (std::int64_t v = 0; v < config.vertex_count(); ++v)
      for (std::int32_t w : config.adjacency[v])
        if (v < w && box_of(v) == box_of(w)) {
          const std::int32_t a = find(static_cast<std::int32_t>(v)), b2 = find(w);
          if (a != b2) parent[std::max(a, b2)] = std::min(a, b2);
        }
    std::vector<std::int64_t> size(config.vertex_count(), 0);
    for (std::int64_t v = 0; v < config.vertex_count(); ++v)
      ++size[find(static_cast<std::int32_t>(v))];
    std::vector<std::int64_t> best(boxes, 0);
    for (std::int64_t v = 0; v < config.vertex_count(); ++v) {
      const std::int32_t root = find(static_cast<std::int32_t>(v));
      const std::int64_t b = box_of(v);
      if (size[root] > best[b] || (size[root] == best[b] &&
                                   (out.dominant[b] < 0 || root < out.dominant[b]))) {
        best[b] = size[root];
        out.dominant[b] = root;
      }
    }
    for (std::int64_t b = 0; b < boxes; ++b)
      out.good[b] = static_cast<double>(best[b]) >= threshold;
    anchor_cluster.assign(config.vertex_count(), -1);
    for (std::int64_t v = 0; v < config.vertex_count(); ++v) {
      const std::int32_t root = find(static_cast<std::int32_t>(v));
      const std::int64_t b = box_of(v);
      if (out.good[b] && root == out.dominant[b])
        anchor_cluster[v] = static_cast<std::int32_t>(b);
    }
  }

  // induced edges between good boxes
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  if (mode == CoarseMode::MaxWeight) {
    for (std::int64_t b1 = 0; b1 < boxes; ++b1) {
      if (!out.good[b1]) continue;
      for (std::int64_t b2 = b1 + 1; b2 < boxes; ++b2)
        if (out.good[b2] && config.has_edge(out.dominant[b1], out.dominant[b2]))
          pairs.emplace_back(b1, b2);
    }
  } else {
    for (std::int64_t v = 0; v < config.vertex_count(); ++v) {
      if (anchor_cluster[v] < 0) continue;
      for (std::int32_t w : config.adjacency[v])
        if (v < w && anchor_cluster[w] >= 0 && anchor_cluster[w] != anchor_cluster[v])
          pairs.emplace_back(std::min(anchor_cluster[v], anchor_cluster[w]),
                             std::max(anchor_cluster[v], anchor_cluster[w]));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }
  out.box_edges = std::move(pairs);

  out.dominated = config.params;
  out.dominated.lambda = config.params.lambda * beta * beta *
                         std::pow(3.0 * config.params.d, -config.params.alpha);
  out.dominated.weight_law = StandardPareto{};
  return out;
}

}  // namespace sfp
