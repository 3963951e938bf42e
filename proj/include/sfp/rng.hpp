#ifndef SFP_RNG_HPP
#define SFP_RNG_HPP

#include <cstdint>

namespace sfp {

// Counter-based random numbers: every variate is a pure function of
// (master_seed, stream kind, substream index, counter). Streams can be
// evaluated in any order and from any thread and always produce the same
// bits, which is what makes the shared-uniform coupling and the
// partitioned pair sweep deterministic.

enum class StreamKind : std::uint64_t {
  Weights = 0x9e3779b97f4a7c15ull,
  Green = 0xbf58476d1ce4e5b9ull,
  Edge = 0x94d049bb133111ebull,
  Walk = 0xd6e8feb86659fd93ull,
};

struct RngStream {
  std::uint64_t master_seed = 0;
  StreamKind kind = StreamKind::Weights;
  std::uint64_t substream = 0;
};

namespace detail {
// splitmix64 finalizer (Steele/Lea/Flood via Vigna).
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}
}  // namespace detail

constexpr std::uint64_t stream_bits(const RngStream& s, std::uint64_t counter = 0) {
  std::uint64_t h = detail::mix64(s.master_seed ^ static_cast<std::uint64_t>(s.kind));
  h = detail::mix64(h ^ s.substream);
  return detail::mix64(h ^ counter);
}

// Uniform on (0,1]; never returns 0 so inverse-tail quantiles are total.
constexpr double stream_uniform(const RngStream& s, std::uint64_t counter = 0) {
  return static_cast<double>((stream_bits(s, counter) >> 11) + 1) * 0x1p-53;
}

// Substream index for the unordered vertex pair {a,b}; the smaller linear
// index goes in the high bits. Vertex indices must fit in 32 bits, which the
// pair-sweep budget guarantees at desk scale.
constexpr std::uint64_t edge_substream(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t lo = a < b ? a : b;
  const std::uint64_t hi = a < b ? b : a;
  return (lo << 32) | hi;
}

// Sequential view of a single substream, for random-walk style consumers.
class CounterRng {
 public:
  explicit CounterRng(RngStream s) : stream_(s) {}
  double next_uniform() { return stream_uniform(stream_, counter_++); }
  std::uint64_t next_bits() { return stream_bits(stream_, counter_++); }

 private:
  RngStream stream_;
  std::uint64_t counter_ = 0;
};

}  // namespace sfp

#endif
