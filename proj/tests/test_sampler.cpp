#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "sfp/sampler.hpp"

using namespace sfp;

namespace {

BoxGeometry line(std::int64_t side) {
  BoxGeometry g;
  g.origin = {0};
  g.side = side;
  return g;
}

ModelParams base_params() {
  ModelParams p;
  p.d = 1;
  p.alpha = 1.5;
  p.tau = 2.0;
  p.lambda = 1.0;
  return p;
}

bool edge_subset(const Configuration& lo, const Configuration& hi) {
  for (std::int64_t v = 0; v < lo.vertex_count(); ++v)
    for (std::int32_t w : lo.adjacency[v])
      if (!hi.has_edge(static_cast<std::int32_t>(v), w)) return false;
  return true;
}

}  // namespace

TEST_CASE("sampling is deterministic in the seed") {
  const auto p = base_params();
  const Configuration a = sample_configuration(line(64), p, 7);
  const Configuration b = sample_configuration(line(64), p, 7);
  const Configuration c = sample_configuration(line(64), p, 8);
  CHECK(a.weights == b.weights);
  CHECK(a.adjacency == b.adjacency);
  CHECK(a.weights != c.weights);
}

TEST_CASE("thread count does not change the edge set") {
  auto p = base_params();
  p.d = 2;
  BoxGeometry g;
  g.origin = {0, 0};
  g.side = 20;
  SampleOptions one, four;
  one.threads = 1;
  four.threads = 4;
  const Configuration a = sample_configuration(g, p, 3, one);
  const Configuration b = sample_configuration(g, p, 3, four);
  CHECK(a.adjacency == b.adjacency);
}

TEST_CASE("empirical weight tail stays near the law") {
  const auto p = base_params();
  const std::int64_t n = 4096;
  const Configuration cfg = sample_configuration(line(n), p, 11,
                                                 [] {
                                                   SampleOptions o;
                                                   o.max_pairs = 1'000'000'000;
                                                   return o;
                                                 }());
  // Kolmogorov-Smirnov style bound on the empirical tail at a few thresholds
  const double eps = 3.0 * std::sqrt(std::log(double(n)) / double(n));
  for (double w : {1.5, 2.0, 4.0, 10.0}) {
    std::int64_t cnt = 0;
    for (double x : cfg.weights) cnt += x >= w;
    const double emp = double(cnt) / double(n);
    CHECK(std::abs(emp - weight_tail(p.weight_law, p.tau, w)) <= eps);
  }
}

TEST_CASE("lambda zero yields no edges") {
  auto p = base_params();
  p.lambda = 0.0;
  const Configuration cfg = sample_configuration(line(32), p, 1);
  CHECK(cfg.edge_count() == 0);
}

TEST_CASE("coupling nests edge sets across lambda") {
  auto lo = base_params();
  auto hi = base_params();
  lo.lambda = 0.25;
  hi.lambda = 1.0;
  const auto [a, b] = coupled_pair(line(64), lo, hi, 21);
  CHECK(a.weights == b.weights);
  CHECK(edge_subset(a, b));
  CHECK(b.edge_count() > a.edge_count());
}

TEST_CASE("coupling nests edge sets across weight laws") {
  auto lo = base_params();
  auto hi = base_params();
  lo.weight_law = StandardPareto{};
  hi.weight_law = ParetoC{2.0};
  const auto [a, b] = coupled_pair(line(64), lo, hi, 22);
  CHECK(edge_subset(a, b));
  for (std::int64_t v = 0; v < a.vertex_count(); ++v)
    CHECK(a.weights[v] <= b.weights[v]);
}

TEST_CASE("coupled_pair rejects non-dominating setups") {
  auto lo = base_params();
  auto hi = base_params();
  lo.lambda = 1.0;
  hi.lambda = 0.5;
  CHECK_THROWS_AS(coupled_pair(line(8), lo, hi, 1), validation_error);
  hi.lambda = 1.0;
  hi.alpha = 2.0;
  CHECK_THROWS_AS(coupled_pair(line(8), lo, hi, 1), validation_error);
}

TEST_CASE("law domination comparisons") {
  CHECK(law_dominates(StandardPareto{}, ParetoC{2.0}, 2.0));
  CHECK(!law_dominates(ParetoC{2.0}, StandardPareto{}, 2.0));
  CHECK(law_dominates(Constant{1.0}, Constant{2.0}, 2.0));
  CHECK(law_dominates(Constant{1.0}, StandardPareto{}, 2.0));
  CHECK(!law_dominates(StandardPareto{}, Constant{5.0}, 2.0));
}

TEST_CASE("conditional edges reproduce the sweep for the sampled weights") {
  const auto p = base_params();
  const Configuration cfg = sample_configuration(line(48), p, 5);
  const auto adj = conditional_edges(cfg.weights, cfg.geometry, p, 5);
  CHECK(adj == cfg.adjacency);
}

TEST_CASE("green restriction removes edges at non-green endpoints") {
  auto p = base_params();
  p.mu = 0.5;
  SampleOptions opts;
  opts.restrict_to_green = true;
  const Configuration cfg = sample_configuration(line(64), p, 9, opts);
  for (std::int64_t v = 0; v < cfg.vertex_count(); ++v)
    if (!cfg.green[v]) CHECK(cfg.adjacency[v].empty());
}

TEST_CASE("pair budget is enforced") {
  SampleOptions opts;
  opts.max_pairs = 10;
  CHECK_THROWS_AS(sample_configuration(line(32), base_params(), 1, opts),
                  resource_error);
}

TEST_CASE("make_configuration symmetrizes and rejects self-loops") {
  const Configuration cfg =
      make_configuration(line(3), base_params(), {1.0, 1.0, 1.0}, {{0, 1}, {1, 0}});
  CHECK(cfg.has_edge(0, 1));
  CHECK(cfg.has_edge(1, 0));
  CHECK(cfg.edge_count() == 1);
  CHECK_THROWS_AS(
      make_configuration(line(2), base_params(), {1.0, 1.0}, {{0, 0}}),
      validation_error);
}
