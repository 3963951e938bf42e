#include <doctest.h>

#include <cmath>

#include "sfp/walk.hpp"

using namespace sfp;

namespace {

BoxGeometry line(std::int64_t side) {
  BoxGeometry g;
  g.origin = {0};
  g.side = side;
  return g;
}

BoxGeometry square(std::int64_t side) {
  BoxGeometry g;
  g.origin = {0, 0};
  g.side = side;
  return g;
}

ModelParams any_params(int d) {
  ModelParams p;
  p.d = d;
  p.alpha = 2.0;
  p.tau = 2.0;
  p.lambda = 1.0;
  return p;
}

}  // namespace

TEST_CASE("path fixture: resistance adds in series") {
  // 0-1-2-3-4 along a line; ground = vertices at l1 distance >= 4 (vertex 4)
  const Configuration cfg =
      make_configuration(line(5), any_params(1), {1, 1, 1, 1, 1},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(effective_resistance(cfg, 0, 4.0) == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(effective_resistance(cfg, 0, 2.0) == doctest::Approx(2.0).epsilon(1e-6));
}

TEST_CASE("parallel fixture: resistance halves") {
  // two vertex-disjoint 2-edge paths from (0,0) to the l1 >= 2 shell
  const Configuration cfg = make_configuration(
      square(3), any_params(2), {1, 1, 1, 1, 1, 1, 1, 1, 1},
      // indices row-major: (0,0)=0 (0,1)=1 (0,2)=2 (1,0)=3 (1,1)=4
      {{0, 1}, {1, 2}, {0, 3}, {3, 4}});
  CHECK(effective_resistance(cfg, 0, 2.0) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("no boundary vertex means infinite resistance") {
  const Configuration cfg =
      make_configuration(line(3), any_params(1), {1, 1, 1}, {{0, 1}});
  CHECK(effective_resistance(cfg, 0, 10.0) == kInfiniteResistance);
}

TEST_CASE("escape probability on the 4-path matches 1/(deg R)") {
  const Configuration cfg =
      make_configuration(line(5), any_params(1), {1, 1, 1, 1, 1},
                         {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  WalkOptions opts;
  opts.n_walks = 200000;
  const EscapeEstimate est = srw_escape_probability(cfg, 0, 4.0, opts);
  // start has degree 1, R_eff = 4, so escape = 1/4 exactly
  CHECK(std::abs(est.escape - 0.25) <= 3.0 * est.std_error + 1e-9);
  CHECK(est.truncated == 0);
}

TEST_CASE("isolated start is flagged") {
  const Configuration cfg = make_configuration(line(3), any_params(1), {1, 1, 1}, {});
  const EscapeEstimate est = srw_escape_probability(cfg, 0, 1.0, {});
  CHECK(est.isolated);
  CHECK(est.escape == 0.0);
}

TEST_CASE("escape runs are deterministic in the walk seed") {
  const Configuration cfg =
      make_configuration(line(4), any_params(1), {1, 1, 1, 1},
                         {{0, 1}, {1, 2}, {2, 3}});
  WalkOptions a, b, c;
  a.walk_seed = b.walk_seed = 5;
  c.walk_seed = 6;
  a.n_walks = b.n_walks = c.n_walks = 2000;
  CHECK(srw_escape_probability(cfg, 0, 3.0, a).escape ==
        srw_escape_probability(cfg, 0, 3.0, b).escape);
  CHECK(srw_escape_probability(cfg, 0, 3.0, a).escape !=
        srw_escape_probability(cfg, 0, 3.0, c).escape);
}

TEST_CASE("resistance curve is nondecreasing in the radius on a path") {
  const Configuration cfg = make_configuration(
      line(9), any_params(1), std::vector<double>(9, 1.0),
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
  WalkOptions opts;
  opts.n_walks = 1000;
  const ResistanceCurve curve = resistance_curve(cfg, 0, {2.0, 4.0, 8.0}, opts);
  REQUIRE(curve.r_eff.size() == 3);
  CHECK(curve.r_eff[0] == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(curve.r_eff[1] == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(curve.r_eff[2] == doctest::Approx(8.0).epsilon(1e-6));
}
