#include <doctest.h>

#include <set>

#include "sfp/rng.hpp"

using namespace sfp;

TEST_CASE("stream bits are a pure function of the stream tuple") {
  const RngStream s{42, StreamKind::Edge, 7};
  CHECK(stream_bits(s, 3) == stream_bits(s, 3));
  CHECK(stream_bits(s, 3) != stream_bits(s, 4));
  CHECK(stream_bits({42, StreamKind::Edge, 8}, 3) != stream_bits(s, 3));
  CHECK(stream_bits({43, StreamKind::Edge, 7}, 3) != stream_bits(s, 3));
  CHECK(stream_bits({42, StreamKind::Walk, 7}, 3) != stream_bits(s, 3));
}

TEST_CASE("uniforms live in (0,1] and look spread out") {
  const RngStream s{1, StreamKind::Weights, 0};
  double lo = 1.0, hi = 0.0, sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = stream_uniform(s, i);
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
    lo = std::min(lo, u);
    hi = std::max(hi, u);
    sum += u;
  }
  CHECK(lo < 0.001);
  CHECK(hi > 0.999);
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("edge substream is symmetric and injective on ordered pairs") {
  CHECK(edge_substream(3, 9) == edge_substream(9, 3));
  std::set<std::uint64_t> seen;
  for (std::uint32_t a = 0; a < 30; ++a)
    for (std::uint32_t b = a + 1; b < 30; ++b) seen.insert(edge_substream(a, b));
  CHECK(seen.size() == 30u * 29u / 2u);
}

TEST_CASE("CounterRng walks the counter sequentially") {
  CounterRng rng({5, StreamKind::Walk, 2});
  const double a = rng.next_uniform();
  const double b = rng.next_uniform();
  CHECK(a == stream_uniform({5, StreamKind::Walk, 2}, 0));
  CHECK(b == stream_uniform({5, StreamKind::Walk, 2}, 1));
  CHECK(a != b);
}
