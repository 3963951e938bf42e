#include <doctest.h>

#include <algorithm>
#include <functional>
#include <vector>

#include "sfp/graph.hpp"

using namespace sfp;

namespace {

BoxGeometry line(std::int64_t side) {
  BoxGeometry g;
  g.origin = {0};
  g.side = side;
  return g;
}

ModelParams dense_params() {
  ModelParams p;
  p.d = 1;
  p.alpha = 1.2;
  p.tau = 2.0;
  p.lambda = 1.0;
  return p;
}

// Independent component oracle: plain DFS over the adjacency lists.
std::vector<int> dfs_components(const Configuration& cfg) {
  std::vector<int> comp(cfg.vertex_count(), -1);
  int next = 0;
  for (std::int64_t s = 0; s < cfg.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::int64_t> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      const std::int64_t v = stack.back();
      stack.pop_back();
      for (std::int32_t w : cfg.adjacency[v])
        if (comp[w] < 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace

TEST_CASE("union-find clusters agree with a DFS oracle") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Configuration cfg = sample_configuration(line(40), dense_params(), seed);
    const ClusterLabeling cl = clusters(cfg);
    const std::vector<int> oracle = dfs_components(cfg);
    for (std::int64_t u = 0; u < cfg.vertex_count(); ++u)
      for (std::int64_t v = 0; v < cfg.vertex_count(); ++v)
        CHECK((cl.label[u] == cl.label[v]) == (oracle[u] == oracle[v]));
    std::int64_t best = 0;
    std::vector<std::int64_t> counts(cfg.vertex_count(), 0);
    for (int c : oracle) best = std::max(best, ++counts[c]);
    CHECK(cl.largest_size() == best);
  }
}

TEST_CASE("graph distance basics") {
  const Configuration cfg = make_configuration(
      line(5), dense_params(), {1, 1, 1, 1, 1}, {{0, 1}, {1, 2}, {3, 4}});
  CHECK(graph_distance(cfg, 0, 0) == 0);
  CHECK(graph_distance(cfg, 0, 2) == 2);
  CHECK(graph_distance(cfg, 0, 3) == kInfiniteDistance);
  const auto dist = bfs_distances(cfg.adjacency, 0);
  CHECK(dist[1] == 1);
  CHECK(dist[4] == kInfiniteDistance);
}

TEST_CASE("BFS distances obey the triangle inequality on sampled graphs") {
  const Configuration cfg = sample_configuration(line(30), dense_params(), 3);
  const auto d0 = bfs_distances(cfg.adjacency, 0);
  for (std::int64_t v = 0; v < cfg.vertex_count(); ++v)
    for (std::int32_t w : cfg.adjacency[v])
      if (d0[v] != kInfiniteDistance)
        CHECK(d0[w] <= d0[v] + 1);
}

TEST_CASE("diameter experiment reports sane fractions") {
  DiameterExperimentOptions opts;
  opts.n_pairs = 200;
  opts.n_seeds = 2;
  const auto reports = diameter_experiment(dense_params(), {16, 32}, opts);
  REQUIRE(reports.size() == 2);
  for (const auto& r : reports) {
    CHECK(r.n_pairs_sampled > 0);
    CHECK(r.fraction_within(1) <= r.fraction_within(2));
    CHECK(r.fraction_within(1'000'000) == doctest::Approx(1.0));
  }
}

TEST_CASE("diameter theorem bound") {
  CHECK(diameter_theorem_bound(1, 0.5) == 2);
  CHECK(diameter_theorem_bound(2, 1.5) == 4);
  CHECK_THROWS_AS(diameter_theorem_bound(1, 1.5), validation_error);
}

TEST_CASE("degree tail ccdf is a decreasing probability") {
  ModelParams p = dense_params();
  p.d = 2;
  p.alpha = 3.0;
  p.tau = 2.2;
  BoxGeometry g;
  g.origin = {0, 0};
  g.side = 32;
  const Configuration cfg = sample_configuration(g, p, 4);
  const DegreeTail tail = degree_tail(cfg);
  REQUIRE(!tail.ccdf.empty());
  double prev = 1.0;
  for (auto [s, prob] : tail.ccdf) {
    CHECK(prob >= 0.0);
    CHECK(prob <= prev + 1e-15);
    prev = prob;
  }
  // ccdf values match direct counting
  for (auto [s, prob] : tail.ccdf) {
    std::int64_t cnt = 0;
    for (std::int64_t v = 0; v < cfg.vertex_count(); ++v)
      cnt += static_cast<std::int64_t>(cfg.adjacency[v].size()) > s;
    CHECK(prob == doctest::Approx(double(cnt) / cfg.vertex_count()));
  }
}
