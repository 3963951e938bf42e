#include <doctest.h>

#include <cmath>

#include "sfp/hierarchy.hpp"

using namespace sfp;

namespace {

ModelParams hct_params() {
  ModelParams p;
  p.d = 1;
  p.alpha = 1.5;
  p.tau = 1.8;
  p.lambda = 2.0;
  p.mu = 0.95;
  return p;
}

BoxGeometry line(std::int64_t side) {
  BoxGeometry g;
  g.origin = {0};
  g.side = side;
  return g;
}

WeightedTree two_vertex_tree() {
  WeightedTree t;
  t.box_origin = {0};
  t.box_side = 2;
  t.vertices = {{{0}, 2.0}, {{1}, 1.0}};
  t.edges = {{0, 1}};
  return t;
}

}  // namespace

TEST_CASE("xi upper bound value and domain") {
  ModelParams p = hct_params();  // gamma = 1.2
  // min( (2-gamma)/(tau+1), (1/2)(tau+2 - sqrt((tau+2)^2-4(2-gamma))) )
  const double first = 0.8 / 2.8;
  const double second = 0.5 * (3.8 - std::sqrt(3.8 * 3.8 - 3.2));
  CHECK(xi_upper_bound(p) == doctest::Approx(std::min(first, second)));
  CHECK(xi_upper_bound(p) == doctest::Approx(0.2237).epsilon(1e-3));
  p.alpha = 3.0;  // gamma = 2.4
  CHECK_THROWS_AS(xi_upper_bound(p), validation_error);
}

TEST_CASE("stage sequences follow the recursion") {
  const ModelParams p = hct_params();
  const Configuration cfg = sample_configuration(line(52), p, 1);
  const StageHierarchy h = build_stage_hierarchy(p, 0.15, 4, {}, cfg);
  // zeta = (d - xi')/((alpha + xi')(tau - 1) - (d - xi'))
  CHECK(h.zeta == doctest::Approx(0.85 / (1.65 * 0.8 - 0.85)));
  REQUIRE(h.stages == 2);
  CHECK(h.D[1] == 4);
  CHECK(h.D[2] == 13);  // ceil(4^zeta)
  CHECK(h.m[2] == 52);
  const double e = (1.0 - 0.15) / 0.8;  // (d - xi')/(tau - 1)
  CHECK(h.u[1] == doctest::Approx(std::pow(4.0, e)));
  CHECK(h.u[2] == doctest::Approx(std::pow(4.0, e) * std::pow(13.0, e)));
  CHECK(h.rho == doctest::Approx(h.a[1] * h.a[2]));
  for (double a : {h.a[1], h.a[2]}) {
    CHECK(a > 0.0);
    CHECK(a < 1.0);
  }
}

TEST_CASE("default a-schedule matches the inline surrogate") {
  const ModelParams p = hct_params();
  const auto sched = default_a_schedule(p, 0.15, {1, 4, 13});
  REQUIRE(sched.size() == 2);
  CHECK(sched[0] ==
        doctest::Approx(0.95 * (1.0 - std::sqrt(2.0) * std::pow(4.0, -0.5) *
                                          std::pow(4.0, 0.075))));
  const Configuration cfg = sample_configuration(line(52), p, 1);
  const StageHierarchy def = build_stage_hierarchy(p, 0.15, 4, {}, cfg);
  const StageHierarchy exp = build_stage_hierarchy(p, 0.15, 4, sched, cfg);
  CHECK(def.a == exp.a);
  CHECK(def.good == exp.good);
}

TEST_CASE("non-stage box sides are rejected") {
  const ModelParams p = hct_params();
  const Configuration cfg = sample_configuration(line(50), p, 1);
  CHECK_THROWS_AS(build_stage_hierarchy(p, 0.15, 4, {}, cfg), validation_error);
}

TEST_CASE("constructed trees pass certificate validation") {
  const ModelParams p = hct_params();
  int built = 0;
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Configuration cfg = sample_configuration(line(52), p, seed);
    const StageHierarchy h = build_stage_hierarchy(p, 0.15, 4, {}, cfg);
    const auto result = construct_hct(h, cfg);
    if (!result) continue;
    ++built;
    const auto& [tree, cert] = *result;
    const HctReport rep =
        validate_hct(tree, cert.rho, cert.K, HctMode::Certificate, &cert);
    CHECK(rep.density);
    CHECK(rep.diameter);
    CHECK(rep.ordered_weights);
    CHECK(rep.spatial);
  }
  CHECK(built > 0);
}

TEST_CASE("goodness is preserved under a monotone weight map of the tree") {
  // condition (3) only compares weights, so w -> w^3 keeps the ordering
  const ModelParams p = hct_params();
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    const Configuration cfg = sample_configuration(line(52), p, seed);
    const auto result = construct_hct(build_stage_hierarchy(p, 0.15, 4, {}, cfg), cfg);
    if (!result) continue;
    WeightedTree cubed = result->first;
    for (auto& v : cubed.vertices) v.weight = v.weight * v.weight * v.weight;
    const HctReport before = validate_hct(result->first, result->second.rho,
                                          result->second.K, HctMode::Certificate,
                                          &result->second);
    const HctReport after =
        validate_hct(cubed, result->second.rho, result->second.K,
                     HctMode::Certificate, &result->second);
    CHECK(before.ordered_weights == after.ordered_weights);
    CHECK(before.spatial == after.spatial);
  }
}

TEST_CASE("two-vertex tree validates exhaustively") {
  const WeightedTree t = two_vertex_tree();
  const HctReport rep = validate_hct(t, 0.5, 4.0, HctMode::Exhaustive);
  CHECK(rep.valid());
}

TEST_CASE("weight order violation is caught") {
  WeightedTree t = two_vertex_tree();
  t.vertices[1].weight = 2.0;  // tie with the root breaks strict decrease
  const HctReport rep = validate_hct(t, 0.5, 4.0, HctMode::Exhaustive);
  CHECK(!rep.ordered_weights);
}

TEST_CASE("side-one base case") {
  WeightedTree t;
  t.box_origin = {3};
  t.box_side = 1;
  t.vertices = {{{3}, 1.0}};
  CHECK(validate_hct(t, 0.99, 1.0, HctMode::Exhaustive).valid());
  t.vertices[0].coords = {4};
  CHECK_THROWS_AS(validate_hct(t, 0.99, 1.0, HctMode::Exhaustive),
                  validation_error);  // vertex outside its box
}

TEST_CASE("malformed trees are rejected") {
  WeightedTree t = two_vertex_tree();
  t.edges.clear();  // |E| != |V| - 1
  CHECK_THROWS_AS(validate_hct(t, 0.5, 4.0, HctMode::Exhaustive), validation_error);
  WeightedTree cyc = two_vertex_tree();
  cyc.edges = {{0, 0}};
  CHECK_THROWS_AS(validate_hct(cyc, 0.5, 4.0, HctMode::Exhaustive), validation_error);
}

TEST_CASE("exhaustive cap raises a resource error") {
  const ModelParams p = hct_params();
  WeightedTree t;
  t.box_origin = {0};
  t.box_side = 10;
  for (int i = 0; i < 5; ++i) t.vertices.push_back({{i}, 5.0 - i});
  for (int i = 0; i < 4; ++i) t.edges.emplace_back(i, i + 1);
  HctValidateOptions opts;
  opts.exhaustive_cap = 3;
  CHECK_THROWS_AS(validate_hct(t, 0.1, 10.0, HctMode::Exhaustive, nullptr, opts),
                  resource_error);
  (void)p;
}

TEST_CASE("certificate mode requires a certificate") {
  CHECK_THROWS_AS(validate_hct(two_vertex_tree(), 0.5, 4.0, HctMode::Certificate),
                  validation_error);
}

TEST_CASE("general-m extension guards") {
  const ModelParams p = hct_params();
  const Configuration small = sample_configuration(line(8), p, 1);
  CHECK_THROWS_AS(extend_to_general_m(p, 0.15, 4, 2, small), validation_error);
  CHECK_THROWS_AS(extend_to_general_m(p, 0.15, 4, 104, small), validation_error);
}

TEST_CASE("tree JSON includes the certificate") {
  const WeightedTree t = two_vertex_tree();
  HctCertificate cert;
  cert.rho = 0.5;
  cert.K = 4.0;
  const std::string js = tree_to_json(t, &cert);
  CHECK(js.find("\"certificate\"") != std::string::npos);
  CHECK(tree_to_json(t, nullptr).find("certificate") == std::string::npos);
}
