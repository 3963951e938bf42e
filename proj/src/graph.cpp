#include "sfp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

namespace sfp {

namespace {

struct UnionFind {
  std::vector<std::int32_t> parent;
  explicit UnionFind(std::int64_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

ClusterLabeling clusters(const Configuration& config) {
  const std::int64_t n = config.vertex_count();
  UnionFind uf(n);
  for (std::int32_t u = 0; u < n; ++u)
    for (std::int32_t v : config.adjacency[u])
      if (u < v) uf.unite(u, v);

  ClusterLabeling out;
  out.label.assign(n, -1);
  std::int32_t next = 0;
  for (std::int32_t v = 0; v < n; ++v) {
    const std::int32_t root = uf.find(v);
    if (out.label[root] < 0) out.label[root] = next++;
    out.label[v] = out.label[root];
  }
  out.sizes.assign(next, 0);
  for (std::int32_t v = 0; v < n; ++v) ++out.sizes[out.label[v]];
  if (next > 0) {
    out.largest_id = static_cast<std::int32_t>(
        std::max_element(out.sizes.begin(), out.sizes.end()) - out.sizes.begin());
  }
  return out;
}

std::vector<std::int64_t> bfs_distances(const std::vector<std::vector<std::int32_t>>& adj,
                                        std::int32_t source) {
  std::vector<std::int64_t> dist(adj.size(), kInfiniteDistance);
  std::deque<std::int32_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::int32_t v = queue.front();
    queue.pop_front();
    for (std::int32_t w : adj[v])
      if (dist[w] == kInfiniteDistance) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::int64_t graph_distance(const Configuration& config, std::int32_t u, std::int32_t v) {
  if (u == v) return 0;
  // Bidirectional would be faster; plain BFS is fine at desk scale.
  return bfs_distances(config.adjacency, u)[v];
}

double DistanceReport::fraction_within(std::int64_t k) const {
  if (n_pairs_sampled == 0) return 0.0;
  std::int64_t within = 0;
  for (const auto& [dist, count] : histogram)
    if (dist <= k) within += count;
  return static_cast<double>(within) / static_cast<double>(n_pairs_sampled);
}

std::int64_t diameter_theorem_bound(int d, double alpha) {
  if (!(alpha < d)) throw validation_error("diameter bound requires alpha < d");
  return static_cast<std::int64_t>(std::ceil(d / (d - alpha)));
}

std::vector<DistanceReport> diameter_experiment(
    const ModelParams& params, const std::vector<std::int64_t>& sides,
    const DiameterExperimentOptions& opts) {
  params.validate();
  std::vector<DistanceReport> reports;
  for (std::int64_t side : sides) {
    DistanceReport rep;
    rep.box_side = side;
    for (int s = 0; s < opts.n_seeds; ++s) {
      const std::uint64_t seed = opts.seed_base + static_cast<std::uint64_t>(s);
      BoxGeometry geom{std::vector<std::int64_t>(params.d, 0), side, Boundary::Free};
      const Configuration cfg = sample_configuration(geom, params, seed, opts.sample);
      const ClusterLabeling cl = clusters(cfg);
      rep.largest_cluster_size = std::max(rep.largest_cluster_size, cl.largest_size());
      if (cl.largest_size() < 2) continue;
      std::vector<std::int32_t> members;
      for (std::int32_t v = 0; v < cfg.vertex_count(); ++v)
        if (cl.label[v] == cl.largest_id) members.push_back(v);

      CounterRng pick({seed, StreamKind::Walk, 0xd1a0ull});
      std::int32_t deepest = members[0];
      for (std::int64_t p = 0; p < opts.n_pairs; ++p) {
        const std::int32_t a = members[pick.next_bits() % members.size()];
        std::int32_t b = members[pick.next_bits() % members.size()];
        while (b == a) b = members[pick.next_bits() % members.size()];
        const auto dist = bfs_distances(cfg.adjacency, a);
        ++rep.histogram[dist[b]];
        ++rep.n_pairs_sampled;
        // track the farthest vertex seen for the double-sweep bound
        std::int64_t far = 0;
        for (std::int32_t m : members)
          if (dist[m] != kInfiniteDistance && dist[m] > far) {
            far = dist[m];
            deepest = m;
          }
      }
      // double-sweep: BFS again from the farthest vertex found
      const auto second = bfs_distances(cfg.adjacency, deepest);
      std::int64_t ecc = 0;
      for (std::int32_t m : members)
        if (second[m] != kInfiniteDistance) ecc = std::max(ecc, second[m]);
      rep.diameter_lower_bound = std::max(rep.diameter_lower_bound, ecc);
    }
    rep.empty_report = rep.n_pairs_sampled == 0;
    reports.push_back(std::move(rep));
  }
  return reports;
}

DegreeTail degree_tail(const Configuration& config) {
  if (config.vertex_count() < 1000)
    throw validation_error("degree_tail needs at least 1000 vertices");
  DegreeTail out;
  out.degrees.reserve(config.vertex_count());
  for (const auto& nb : config.adjacency)
    out.degrees.push_back(static_cast<std::int64_t>(nb.size()));

  const std::int64_t dmax = *std::max_element(out.degrees.begin(), out.degrees.end());
  const std::int64_t dmin = *std::min_element(out.degrees.begin(), out.degrees.end());

  std::vector<std::int64_t> sorted = out.degrees;
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  auto ccdf_at = [&](std::int64_t s) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), s);
    return static_cast<double>(sorted.end() - it) / n;
  };

  for (std::int64_t s = 0; s <= dmax; ++s) out.ccdf.emplace_back(s, ccdf_at(s));

  if (dmax == dmin) return out;  // estimator undefined (all degrees equal)

  // Fit over the top decade [dmax/10, dmax) on ~40 log-spaced abscissae.
  out.fit_window_lo = std::max<std::int64_t>(1, dmax / 10);
  out.fit_window_hi = dmax;
  std::vector<double> xs, ys;
  const int kPoints = 40;
  std::int64_t prev = -1;
  for (int i = 0; i < kPoints; ++i) {
    const double frac = static_cast<double>(i) / (kPoints - 1);
    const auto s = static_cast<std::int64_t>(std::llround(
        out.fit_window_lo * std::pow(static_cast<double>(dmax) / out.fit_window_lo, frac)));
    if (s == prev || s >= dmax) continue;
    prev = s;
    const double c = ccdf_at(s);
    if (c <= 0) continue;
    xs.push_back(std::log(static_cast<double>(s)));
    ys.push_back(std::log(c));
  }
  if (xs.size() < 2) return out;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx > 0) out.gamma_hat = -sxy / sxx;
  return out;
}

}  // namespace sfp
