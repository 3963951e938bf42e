#include "sfp/hierarchy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <unordered_map>

#include <json.hpp>

namespace sfp {

namespace {

using Json = nlohmann::json;

std::vector<std::vector<std::int32_t>> tree_adjacency(
    std::int64_t n, const std::vector<std::pair<std::int32_t, std::int32_t>>& edges) {
  std::vector<std::vector<std::int32_t>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  return adj;
}

// BFS over a vertex subset; returns -1 distances for unreached vertices.
std::vector<std::int64_t> subset_bfs(const std::vector<std::vector<std::int32_t>>& adj,
                                     std::int32_t source) {
  std::vector<std::int64_t> dist(adj.size(), -1);
  std::deque<std::int32_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::int32_t v = queue.front();
    queue.pop_front();
    for (std::int32_t w : adj[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

bool in_box(const std::vector<std::int64_t>& p, const std::vector<std::int64_t>& origin,
            std::int64_t side) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] < origin[i] || p[i] >= origin[i] + side) return false;
  return true;
}

// Odometer-style increment of a multi-index over [0, bound)^d.
bool next_multi(std::vector<std::int64_t>& idx, std::int64_t bound) {
  for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
    if (++idx[i] < bound) return true;
    idx[i] = 0;
  }
  return false;
}

std::int64_t pow_int(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::int64_t grid_index(const std::vector<std::int64_t>& c, std::int64_t per_axis) {
  std::int64_t idx = 0;
  for (std::int64_t x : c) idx = idx * per_axis + x;
  return idx;
}

struct Sequences {
  double zeta = 0.0;
  std::vector<std::int64_t> D{1}, m{1};
  std::vector<double> u{1.0}, C{1.0}, a{1.0};
  double rho = 1.0;
  double K = 1.0;

  void push_stage(const ModelParams& p, double xi_prime, std::int64_t D1,
                  const std::vector<double>& schedule) {
    const int n = static_cast<int>(D.size());
    const std::int64_t Dn =
        n == 1 ? D1
               : static_cast<std::int64_t>(std::ceil(
                     std::exp(zeta * std::log(static_cast<double>(D.back())))));
    D.push_back(Dn);
    m.push_back(m.back() * Dn);
    u.push_back(u.back() *
                std::pow(static_cast<double>(Dn), (p.d - xi_prime) / (p.tau - 1.0)));
    double an;
    if (!schedule.empty()) {
      if (static_cast<int>(schedule.size()) < n)
        throw validation_error("a_schedule shorter than the number of stages");
      an = schedule[n - 1];
      if (!(an > 0.0 && an < 1.0))
        throw validation_error("a_schedule values must lie in (0,1)");
    } else {
      // surrogate for P(L_{n-1}): exactly mu at n=1, 1-(n)^{-3/2} beyond
      const double prev = n == 1 ? p.mu : 1.0 - std::pow(static_cast<double>(n), -1.5);
      double prod_xi = 1.0;
      for (int k = 1; k <= n; ++k) prod_xi *= std::pow(static_cast<double>(D[k]), xi_prime / 2.0);
      an = prev * (1.0 - std::sqrt(2.0) * std::pow(static_cast<double>(Dn), -p.d / 2.0) *
                             prod_xi);
      if (!(an > 0.0))
        throw validation_error(
            "default a-schedule is nonpositive at stage " + std::to_string(n) +
            "; increase D1 or decrease xi_prime");
    }
    a.push_back(an);
    C.push_back(an * std::pow(static_cast<double>(Dn), p.d));
    rho *= an;
    const double loglog = std::log(std::log(static_cast<double>(m.back())));
    K = std::max(K, (2.0 * n + 2.0) / std::max(1.0, loglog));
  }
};

Sequences make_sequences(const ModelParams& params, double xi_prime, std::int64_t D1,
                         const std::vector<double>& schedule, int n_stages) {
  params.validate();
  if (D1 < 2) throw validation_error("D1 must be at least 2");
  if (!(xi_prime > 0.0)) throw validation_error("xi_prime must be positive");
  const double denom =
      (params.alpha + xi_prime) * (params.tau - 1.0) - (params.d - xi_prime);
  if (!(denom > 0.0))
    throw validation_error("zeta denominator must be positive (requires gamma > 1)");
  Sequences seq;
  seq.zeta = (params.d - xi_prime) / denom;
  for (int n = 1; n <= n_stages; ++n) seq.push_stage(params, xi_prime, D1, schedule);
  return seq;
}

bool weight_before(const Configuration& config, std::int32_t v, std::int32_t w) {
  if (config.weights[v] != config.weights[w])
    return config.weights[v] > config.weights[w];
  return config.geometry.coords(v) < config.geometry.coords(w);  // lex tie-break
}

// Good/dominant classification for stages 0..n_stages over the sub-region
// [0, region_side)^d of the configuration box.
void classify_stages(const Configuration& config, const Sequences& seq, int n_stages,
                     std::int64_t region_side,
                     std::vector<std::vector<std::uint8_t>>& good,
                     std::vector<std::vector<std::int32_t>>& dominant) {
  const int d = config.geometry.dim();
  good.assign(n_stages + 1, {});
  dominant.assign(n_stages + 1, {});

  {  // stage 0: a box per vertex, good iff green
    const std::int64_t boxes = pow_int(region_side, d);
    good[0].assign(boxes, 0);
    dominant[0].assign(boxes, -1);
    std::vector<std::int64_t> rel(d, 0), abs(d);
    do {
      for (int i = 0; i < d; ++i) abs[i] = config.geometry.origin[i] + rel[i];
      const std::int64_t v = config.geometry.index_of(abs);
      const std::int64_t b = grid_index(rel, region_side);
      if (config.green[v]) {
        good[0][b] = 1;
        dominant[0][b] = static_cast<std::int32_t>(v);
      }
    } while (next_multi(rel, region_side));
  }

  for (int s = 1; s <= n_stages; ++s) {
    const std::int64_t per_axis = region_side / seq.m[s];
    const std::int64_t child_per_axis = region_side / seq.m[s - 1];
    const std::int64_t Ds = seq.D[s];
    const std::int64_t boxes = pow_int(per_axis, d);
    good[s].assign(boxes, 0);
    dominant[s].assign(boxes, -1);
    std::vector<std::int64_t> B(d, 0);
    std::int64_t b = 0;
    do {
      std::vector<std::int32_t> doms;
      std::vector<std::int64_t> off(d, 0), child(d);
      do {
        for (int i = 0; i < d; ++i) child[i] = B[i] * Ds + off[i];
        const std::int64_t c = grid_index(child, child_per_axis);
        if (good[s - 1][c]) doms.push_back(dominant[s - 1][c]);
      } while (next_multi(off, Ds));

      // (E): enough good sub-boxes
      if (static_cast<double>(doms.size()) < seq.C[s]) {
        ++b;
        continue;
      }
      // (F): the heaviest sub-box dominant reaches u_s
      std::int32_t cand = doms[0];
      for (std::int32_t v : doms)
        if (weight_before(config, v, cand)) cand = v;
      if (config.weights[cand] < seq.u[s]) {
        ++b;
        continue;
      }
      // (G): every sub-box dominant is adjacent to the candidate
      bool connected = true;
      for (std::int32_t v : doms)
        if (v != cand && !config.has_edge(v, cand)) {
          connected = false;
          break;
        }
      if (connected) {
        good[s][b] = 1;
        dominant[s][b] = cand;
      }
      ++b;
    } while (next_multi(B, per_axis));
  }
}

// Recursive dominant-tree builder shared by construct_hct and
// extend_to_general_m. Returns the tree index of the box dominant.
struct TreeBuilder {
  const Configuration* config;
  const std::vector<std::vector<std::uint8_t>>* good;
  const std::vector<std::vector<std::int32_t>>* dominant;
  const Sequences* seq;
  std::int64_t region_side;
  WeightedTree* tree;
  HctCertificate* cert;
  std::unordered_map<std::int32_t, std::int32_t> index_of;  // config -> tree

  std::int32_t vertex(std::int32_t v) {
    auto it = index_of.find(v);
    if (it != index_of.end()) return it->second;
    const std::int32_t t = static_cast<std::int32_t>(tree->vertices.size());
    tree->vertices.push_back({config->geometry.coords(v), config->weights[v]});
    index_of.emplace(v, t);
    return t;
  }

  std::int32_t build(int stage, std::int64_t box) {
    const std::int32_t dom = (*dominant)[stage][box];
    const std::int32_t td = vertex(dom);
    if (stage == 0) return td;
    const int d = config->geometry.dim();
    const std::int64_t child_per_axis = region_side / seq->m[stage - 1];
    const std::int64_t Ds = seq->D[stage];
    std::vector<std::int64_t> B(d);
    {
      std::int64_t rest = box;
      const std::int64_t per_axis = region_side / seq->m[stage];
      for (int i = d - 1; i >= 0; --i) {
        B[i] = rest % per_axis;
        rest /= per_axis;
      }
    }
    std::vector<std::int64_t> off(d, 0), child(d);
    do {
      for (int i = 0; i < d; ++i) child[i] = B[i] * Ds + off[i];
      const std::int64_t c = grid_index(child, child_per_axis);
      if (!(*good)[stage - 1][c]) continue;
      const std::int32_t w = (*dominant)[stage - 1][c];
      const std::int32_t tw = build(stage - 1, c);
      if (w == dom) continue;  // chain vertex, no self-loop
      tree->edges.emplace_back(td, tw);
      EdgeSplit split;
      split.a = td;
      split.b = tw;
      split.inner = tw;
      split.sub_side = seq->m[stage - 1];
      split.sub_origin.resize(d);
      for (int i = 0; i < d; ++i)
        split.sub_origin[i] = config->geometry.origin[i] + child[i] * seq->m[stage - 1];
      cert->splits.push_back(std::move(split));
    } while (next_multi(off, Ds));
    return td;
  }
};

void fill_certificate_sequences(HctCertificate& cert, const Sequences& seq,
                                double xi_prime) {
  cert.zeta = seq.zeta;
  cert.xi_prime = xi_prime;
  cert.D = seq.D;
  cert.m = seq.m;
  cert.u = seq.u;
  cert.C = seq.C;
  cert.a = seq.a;
  cert.rho = seq.rho;
  cert.K = seq.K;
}

}  // namespace

void WeightedTree::validate() const {
  const std::int64_t n = static_cast<std::int64_t>(vertices.size());
  if (n == 0) throw validation_error("tree must have at least one vertex");
  if (static_cast<std::int64_t>(edges.size()) != n - 1)
    throw validation_error("tree must have |V|-1 edges");
  for (auto [a, b] : edges)
    if (a < 0 || b < 0 || a >= n || b >= n || a == b)
      throw validation_error("tree edge endpoints out of range");
  for (const auto& v : vertices) {
    if (static_cast<int>(v.coords.size()) != static_cast<int>(box_origin.size()))
      throw validation_error("tree vertex dimension mismatch");
    if (!in_box(v.coords, box_origin, box_side))
      throw validation_error("tree vertex outside its box");
  }
  const auto dist = subset_bfs(tree_adjacency(n, edges), 0);
  for (std::int64_t v = 0; v < n; ++v)
    if (dist[v] < 0) throw validation_error("tree is not connected");
}

std::int64_t WeightedTree::diameter() const {
  const auto adj = tree_adjacency(static_cast<std::int64_t>(vertices.size()), edges);
  std::int64_t diam = 0;
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(vertices.size()); ++v) {
    const auto dist = subset_bfs(adj, v);
    for (std::int64_t x : dist) diam = std::max(diam, x);
  }
  return diam;
}

double xi_upper_bound(const ModelParams& params) {
  params.validate();
  const double g = gamma_param(params);
  if (!(g > 1.0 && g < 2.0))
    throw validation_error("xi bound requires 1 < gamma < 2");
  const double d = params.d, tau = params.tau;
  const double first = d * (2.0 - g) / (tau + 1.0);
  const double second =
      0.5 * d * (tau + 2.0 - std::sqrt((tau + 2.0) * (tau + 2.0) - 4.0 * (2.0 - g)));
  return std::min(first, second);
}

std::vector<double> default_a_schedule(const ModelParams& params, double xi_prime,
                                       const std::vector<std::int64_t>& D) {
  std::vector<double> out;
  double prod_xi = 1.0;
  for (int n = 1; n < static_cast<int>(D.size()); ++n) {
    prod_xi *= std::pow(static_cast<double>(D[n]), xi_prime / 2.0);
    const double prev =
        n == 1 ? params.mu : 1.0 - std::pow(static_cast<double>(n), -1.5);
    out.push_back(prev *
                  (1.0 - std::sqrt(2.0) *
                             std::pow(static_cast<double>(D[n]), -params.d / 2.0) *
                             prod_xi));
  }
  return out;
}

StageHierarchy build_stage_hierarchy(const ModelParams& params, double xi_prime,
                                     std::int64_t D1,
                                     const std::vector<double>& a_schedule,
                                     const Configuration& config) {
  const std::int64_t side = config.geometry.side;
  int stages = 0;
  Sequences seq = make_sequences(params, xi_prime, D1, a_schedule, 0);
  while (seq.m.back() < side) {
    seq.push_stage(params, xi_prime, D1, a_schedule);
    ++stages;
  }
  if (seq.m.back() != side)
    throw validation_error("box side " + std::to_string(side) +
                           " is not a stage size m_n; use extend_to_general_m");

  StageHierarchy h;
  h.zeta = seq.zeta;
  h.xi_prime = xi_prime;
  h.D = seq.D;
  h.u = seq.u;
  h.C = seq.C;
  h.a = seq.a;
  h.m = seq.m;
  h.stages = stages;
  h.rho = seq.rho;
  h.K = seq.K;
  h.nonstandard_weight_law =
      !std::holds_alternative<StandardPareto>(config.params.weight_law);
  classify_stages(config, seq, stages, side, h.good, h.dominant);
  return h;
}

std::optional<std::pair<WeightedTree, HctCertificate>> construct_hct(
    const StageHierarchy& hierarchy, const Configuration& config) {
  if (!hierarchy.good[hierarchy.stages][0]) return std::nullopt;

  Sequences seq;
  seq.zeta = hierarchy.zeta;
  seq.D = hierarchy.D;
  seq.u = hierarchy.u;
  seq.C = hierarchy.C;
  seq.a = hierarchy.a;
  seq.m = hierarchy.m;
  seq.rho = hierarchy.rho;
  seq.K = hierarchy.K;

  WeightedTree tree;
  tree.box_origin = config.geometry.origin;
  tree.box_side = config.geometry.side;
  HctCertificate cert;
  fill_certificate_sequences(cert, seq, hierarchy.xi_prime);

  TreeBuilder builder{&config, &hierarchy.good, &hierarchy.dominant,
                      &seq,    config.geometry.side, &tree, &cert, {}};
  const std::int32_t root = builder.build(hierarchy.stages, 0);
  cert.root = root;
  cert.dominant_chain.assign(hierarchy.stages + 1, root);
  return std::make_pair(std::move(tree), std::move(cert));
}

std::optional<std::pair<WeightedTree, HctCertificate>> extend_to_general_m(
    const ModelParams& params, double xi_prime, std::int64_t D1, std::int64_t m,
    const Configuration& config) {
  if (m < D1)
    throw validation_error("extend_to_general_m requires m >= m_1 = D1");
  Sequences seq = make_sequences(params, xi_prime, D1, {}, 1);
  // n = sup{ i : m_i <= m }
  for (;;) {
    Sequences probe = seq;
    probe.push_stage(params, xi_prime, D1, {});
    if (probe.m.back() > m) break;
    seq = std::move(probe);
  }
  const int n = static_cast<int>(seq.m.size()) - 1;
  const std::int64_t mn = seq.m[n];
  const std::int64_t k = m / mn;
  const std::int64_t region = k * mn;
  const int d = config.geometry.dim();
  if (config.geometry.side < region)
    throw validation_error("configuration box too small for the k m_n region");

  std::vector<std::vector<std::uint8_t>> good;
  std::vector<std::vector<std::int32_t>> dominant;
  classify_stages(config, seq, n, region, good, dominant);

  std::vector<std::int64_t> good_blocks;
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(good[n].size()); ++b)
    if (good[n][b]) good_blocks.push_back(b);

  // (E): at least half of the k^d blocks are good
  if (2 * static_cast<std::int64_t>(good_blocks.size()) < pow_int(k, d))
    return std::nullopt;
  // (F): the heaviest block dominant v* reaches (k m_n)^{(d-xi')/(tau-1)}
  std::int32_t vstar = dominant[n][good_blocks[0]];
  for (std::int64_t b : good_blocks)
    if (weight_before(config, dominant[n][b], vstar)) vstar = dominant[n][b];
  const double threshold =
      std::pow(static_cast<double>(region), (params.d - xi_prime) / (params.tau - 1.0));
  if (config.weights[vstar] < threshold) return std::nullopt;
  // (G): every block dominant has an open edge to v*
  for (std::int64_t b : good_blocks) {
    const std::int32_t dom = dominant[n][b];
    if (dom != vstar && !config.has_edge(dom, vstar)) return std::nullopt;
  }

  WeightedTree tree;
  tree.box_origin = config.geometry.origin;
  tree.box_side = m;
  HctCertificate cert;
  fill_certificate_sequences(cert, seq, xi_prime);
  cert.rho = seq.rho / std::pow(2.0, d + 1);  // half the blocks, m <= (k+1) m_n
  cert.merge_k = k;

  TreeBuilder builder{&config, &good, &dominant, &seq, region, &tree, &cert, {}};
  const std::int32_t troot = builder.vertex(vstar);
  const std::int64_t per_axis = k;
  for (std::int64_t b : good_blocks) {
    WeightedTree block;  // diameter bookkeeping only
    const size_t edges_before = tree.edges.size();
    const size_t verts_before = tree.vertices.size();
    const std::int32_t tdom = builder.build(n, b);
    {
      // diameter of the block's stage tree, measured on its own edge set
      std::vector<std::pair<std::int32_t, std::int32_t>> block_edges(
          tree.edges.begin() + edges_before, tree.edges.end());
      std::vector<std::int32_t> block_verts;
      for (auto [x, y] : block_edges) {
        block_verts.push_back(x);
        block_verts.push_back(y);
      }
      block_verts.push_back(tdom);
      std::sort(block_verts.begin(), block_verts.end());
      block_verts.erase(std::unique(block_verts.begin(), block_verts.end()),
                        block_verts.end());
      std::map<std::int32_t, std::int32_t> remap;
      for (std::int32_t v : block_verts)
        remap.emplace(v, static_cast<std::int32_t>(remap.size()));
      block.box_origin = tree.box_origin;
      block.box_side = mn;
      block.vertices.resize(block_verts.size());
      for (std::int32_t v : block_verts) block.vertices[remap[v]] = tree.vertices[v];
      for (auto [x, y] : block_edges) block.edges.emplace_back(remap[x], remap[y]);
      cert.stage_tree_diameters.push_back(block.diameter());
      (void)verts_before;
    }
    const std::int32_t dom = dominant[n][b];
    if (dom == vstar) continue;
    tree.edges.emplace_back(troot, builder.index_of.at(dom));
    EdgeSplit split;
    split.a = troot;
    split.b = builder.index_of.at(dom);
    split.inner = split.b;
    split.sub_side = mn;
    split.sub_origin.resize(d);
    std::vector<std::int64_t> B(d);
    {
      std::int64_t rest = b;
      for (int i = d - 1; i >= 0; --i) {
        B[i] = rest % per_axis;
        rest /= per_axis;
      }
    }
    for (int i = 0; i < d; ++i)
      split.sub_origin[i] = config.geometry.origin[i] + B[i] * mn;
    cert.splits.push_back(std::move(split));
  }
  cert.root = troot;
  cert.dominant_chain.assign(n + 1, troot);
  return std::make_pair(std::move(tree), std::move(cert));
}

namespace {

struct SubSet {
  std::vector<std::int32_t> verts;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges;
};

// Component of `inner` in the tree with one edge removed.
SubSet component_of(const WeightedTree& tree, const SubSet& sub, std::int32_t skip_a,
                    std::int32_t skip_b, std::int32_t inner) {
  std::vector<std::vector<std::int32_t>> adj(tree.vertices.size());
  for (auto [a, b] : sub.edges) {
    if ((a == skip_a && b == skip_b) || (a == skip_b && b == skip_a)) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  SubSet out;
  std::vector<std::uint8_t> seen(tree.vertices.size(), 0);
  std::deque<std::int32_t> queue{inner};
  seen[inner] = 1;
  while (!queue.empty()) {
    const std::int32_t v = queue.front();
    queue.pop_front();
    out.verts.push_back(v);
    for (std::int32_t w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  for (auto e : sub.edges)
    if (seen[e.first] && seen[e.second] &&
        !((e.first == skip_a && e.second == skip_b) ||
          (e.first == skip_b && e.second == skip_a)))
      out.edges.push_back(e);
  return out;
}

std::int64_t subset_diameter(const WeightedTree& tree, const SubSet& sub) {
  std::vector<std::vector<std::int32_t>> adj(tree.vertices.size());
  for (auto [a, b] : sub.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::int64_t diam = 0;
  for (std::int32_t v : sub.verts) {
    const auto dist = subset_bfs(adj, v);
    for (std::int32_t w : sub.verts) diam = std::max(diam, dist[w]);
  }
  return diam;
}

bool ordered_from_root(const WeightedTree& tree, const SubSet& sub) {
  std::int32_t root = sub.verts[0];
  for (std::int32_t v : sub.verts) {
    const auto &wv = tree.vertices[v], &wr = tree.vertices[root];
    if (wv.weight > wr.weight ||
        (wv.weight == wr.weight && wv.coords < wr.coords))
      root = v;
  }
  std::vector<std::vector<std::int32_t>> adj(tree.vertices.size());
  for (auto [a, b] : sub.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<std::int8_t> seen(tree.vertices.size(), 0);
  std::deque<std::int32_t> queue{root};
  seen[root] = 1;
  while (!queue.empty()) {
    const std::int32_t v = queue.front();
    queue.pop_front();
    for (std::int32_t w : adj[v])
      if (!seen[w]) {
        if (!(tree.vertices[w].weight < tree.vertices[v].weight)) return false;
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  return true;
}

struct Validator {
  const WeightedTree* tree;
  double rho, K;
  bool use_cert;
  const HctCertificate* cert;

  const EdgeSplit* find_split(std::int32_t a, std::int32_t b) const {
    for (const auto& s : cert->splits)
      if ((s.a == a && s.b == b) || (s.a == b && s.b == a)) return &s;
    return nullptr;
  }

  bool valid(const SubSet& sub, const std::vector<std::int64_t>& origin,
             std::int64_t side) const {
    if (side == 1)
      return sub.verts.size() == 1 && tree->vertices[sub.verts[0]].coords == origin;
    for (std::int32_t v : sub.verts)
      if (!in_box(tree->vertices[v].coords, origin, side)) return false;
    const int d = static_cast<int>(origin.size());
    if (!(static_cast<double>(sub.verts.size()) >
          rho * std::pow(static_cast<double>(side), d)))
      return false;
    const double bound =
        K * std::max(1.0, std::log(std::log(static_cast<double>(side))));
    if (static_cast<double>(subset_diameter(*tree, sub)) > bound) return false;
    if (!ordered_from_root(*tree, sub)) return false;
    for (const auto& e : sub.edges)
      if (!split_ok(sub, e.first, e.second, origin, side)) return false;
    return true;
  }

  bool split_ok(const SubSet& sub, std::int32_t a, std::int32_t b,
                const std::vector<std::int64_t>& origin, std::int64_t side) const {
    if (use_cert) {
      const EdgeSplit* s = find_split(a, b);
      if (!s) return false;
      const SubSet t1 = component_of(*tree, sub, a, b, s->inner);
      const SubSet t2 =
          component_of(*tree, sub, a, b, s->inner == a ? b : a);
      for (std::int32_t v : t2.verts)
        if (in_box(tree->vertices[v].coords, s->sub_origin, s->sub_side)) return false;
      return valid(t1, s->sub_origin, s->sub_side);
    }
    // exhaustive: try both sides as the certified subtree
    for (const std::int32_t inner : {a, b}) {
      const SubSet t1 = component_of(*tree, sub, a, b, inner);
      const SubSet t2 = component_of(*tree, sub, a, b, inner == a ? b : a);
      const int d = static_cast<int>(origin.size());
      std::vector<std::int64_t> lo(d, INT64_MAX), hi(d, INT64_MIN);
      for (std::int32_t v : t1.verts)
        for (int i = 0; i < d; ++i) {
          lo[i] = std::min(lo[i], tree->vertices[v].coords[i]);
          hi[i] = std::max(hi[i], tree->vertices[v].coords[i]);
        }
      std::int64_t bbox = 1;
      for (int i = 0; i < d; ++i) bbox = std::max(bbox, hi[i] - lo[i] + 1);
      for (std::int64_t mp = bbox; mp <= side; ++mp) {
        // sub-box origins x' in Q_side(origin) with Q_mp(x') containing T1
        std::vector<std::int64_t> start(d), stop(d);
        bool feasible = true;
        for (int i = 0; i < d; ++i) {
          start[i] = std::max(origin[i], hi[i] - mp + 1);
          stop[i] = std::min(origin[i] + side - 1, lo[i]);
          if (start[i] > stop[i]) feasible = false;
        }
        if (!feasible) continue;
        std::vector<std::int64_t> x = start;
        for (;;) {
          bool disjoint = true;
          for (std::int32_t v : t2.verts)
            if (in_box(tree->vertices[v].coords, x, mp)) {
              disjoint = false;
              break;
            }
          if (disjoint && valid(t1, x, mp)) return true;
          int i = d - 1;
          for (; i >= 0; --i) {
            if (++x[i] <= stop[i]) break;
            x[i] = start[i];
          }
          if (i < 0) break;
        }
      }
    }
    return false;
  }
};

}  // namespace

HctReport validate_hct(const WeightedTree& tree, double rho, double K, HctMode mode,
                       const HctCertificate* cert, const HctValidateOptions& opts) {
  tree.validate();
  if (!(rho > 0.0 && rho <= 1.0)) throw validation_error("rho must lie in (0,1]");
  if (!(K > 0.0)) throw validation_error("K must be positive");
  if (mode == HctMode::Certificate && cert == nullptr)
    throw validation_error("certificate mode needs a certificate");
  if (mode == HctMode::Exhaustive &&
      static_cast<std::int64_t>(tree.vertices.size()) > opts.exhaustive_cap)
    throw resource_error("tree exceeds the exhaustive-validation cap of " +
                         std::to_string(opts.exhaustive_cap) + " vertices");

  HctReport report;
  report.used_certificate = mode == HctMode::Certificate;
  report.exhaustive_cap = opts.exhaustive_cap;

  SubSet whole;
  for (std::int32_t v = 0; v < static_cast<std::int32_t>(tree.vertices.size()); ++v)
    whole.verts.push_back(v);
  whole.edges = tree.edges;

  report.tree_diameter = tree.diameter();
  if (tree.box_side == 1) {
    // Def. base case: the isolated vertex is an HCT for every (rho, K)
    const bool ok =
        tree.vertices.size() == 1 && tree.vertices[0].coords == tree.box_origin;
    report.density = report.diameter = report.ordered_weights = report.spatial = ok;
    report.diameter_bound = K;
    return report;
  }

  const int d = static_cast<int>(tree.box_origin.size());
  report.density = static_cast<double>(tree.vertices.size()) >
                   rho * std::pow(static_cast<double>(tree.box_side), d);
  report.diameter_bound =
      K * std::max(1.0, std::log(std::log(static_cast<double>(tree.box_side))));
  report.diameter = static_cast<double>(report.tree_diameter) <= report.diameter_bound;
  report.ordered_weights = ordered_from_root(tree, whole);

  Validator val{&tree, rho, K, mode == HctMode::Certificate, cert};
  report.spatial = true;
  for (const auto& e : tree.edges)
    if (!val.split_ok(whole, e.first, e.second, tree.box_origin, tree.box_side)) {
      report.spatial = false;
      break;
    }
  return report;
}

std::string tree_to_json(const WeightedTree& tree, const HctCertificate* cert) {
  Json j;
  j["box"] = {{"origin", tree.box_origin}, {"side", tree.box_side}};
  j["vertices"] = Json::array();
  for (const auto& v : tree.vertices)
    j["vertices"].push_back({{"coords", v.coords}, {"weight", v.weight}});
  j["edges"] = Json::array();
  for (auto [a, b] : tree.edges) j["edges"].push_back({a, b});
  if (cert) {
    Json c;
    c["zeta"] = cert->zeta;
    c["xi_prime"] = cert->xi_prime;
    c["rho"] = cert->rho;
    c["K"] = cert->K;
    c["root"] = cert->root;
    c["D"] = cert->D;
    c["m"] = cert->m;
    c["u"] = cert->u;
    c["C"] = cert->C;
    c["a"] = cert->a;
    c["merge_k"] = cert->merge_k;
    c["stage_tree_diameters"] = cert->stage_tree_diameters;
    c["splits"] = Json::array();
    for (const auto& s : cert->splits)
      c["splits"].push_back({{"edge", {s.a, s.b}},
                             {"inner", s.inner},
                             {"sub_origin", s.sub_origin},
                             {"sub_side", s.sub_side}});
    j["certificate"] = std::move(c);
  }
  return j.dump(2);
}

}  // namespace sfp
