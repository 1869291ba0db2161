#pragma once

#include <cstdint>

// Counter-based random numbers.
//
// Every random decision in the toolkit is a pure function of a small integer
// key, never of call order.  A simulation pick is keyed by
// (seed, round, agent, stream): streams 0 and 1 are the two neighbor picks,
// streams 2 and 3 the matching bias overrides.  Because no generator state is
// threaded between agents or rounds, update order cannot change results and
// trials parallelize without coordination.

namespace opdyn::rng {

// SplitMix64 finalizer (Stafford mix 13): a strong 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform u64 for a (seed, a, b, c) key.  Distinct keys give independent-
// looking outputs; identical keys always give the same output.
constexpr std::uint64_t keyed(std::uint64_t seed, std::uint64_t a,
                              std::uint64_t b, std::uint64_t c) {
  std::uint64_t z = mix64(seed + 0x9e3779b97f4a7c15ULL);
  z = mix64(z ^ (a + 0xbf58476d1ce4e5b9ULL));
  z = mix64(z ^ (b + 0x94d049bb133111ebULL));
  z = mix64(z ^ (c + 0xd6e8feb86659fd93ULL));
  return z;
}

// Map a uniform u64 onto [0, n) by multiply-shift.  The bias relative to a
// perfectly uniform draw is below n / 2^64 — unobservable at any sample size
// used here.
constexpr std::uint64_t bounded(std::uint64_t x, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(x) * n) >> 64);
}

// Uniform double in [0, 1) from the top 53 bits.
constexpr double to_unit(std::uint64_t x) {
  return static_cast<double>(x >> 11) * 0x1.0p-53;
}

// Sequential convenience stream over the keyed generator, for consumers that
// just need "the next value" (generator blocks, shuffles).  The (seed, a, b)
// triple names the stream; `i` is the position in it.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b)
      : seed_(seed), a_(a), b_(b) {}

  std::uint64_t next() { return keyed(seed_, a_, b_, i_++); }
  std::uint64_t next_below(std::uint64_t n) { return bounded(next(), n); }
  double next_unit() { return to_unit(next()); }

 private:
  std::uint64_t seed_, a_, b_;
  std::uint64_t i_ = 0;
};

}  // namespace opdyn::rng
