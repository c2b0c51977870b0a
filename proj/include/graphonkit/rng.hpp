#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>

namespace graphonkit {

// Counter-based generator: the i-th output is a pure function of (key, i),
// so independent streams are cheap and a stream can be re-created from its
// key alone. The output function is the splitmix64 sequence started at
// `key`, i.e. out(i) = finalize(key + (i+1) * GAMMA) with the standard
// murmur-style finalizer. Streams for different purposes derive their keys
// by folding integer ids into the seed with the same finalizer.
class stream_rng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // key = fold of seed and stream ids; derive(seed) with no ids gives the
  // root stream for that seed.
  static std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> ids = {}) {
    std::uint64_t k = mix(seed + kGamma);
    for (std::uint64_t id : ids) k = mix(k ^ (mix(id + kGamma) + kGamma));
    return k;
  }

  explicit stream_rng(std::uint64_t key) : key_(key) {}
  stream_rng(std::uint64_t seed, std::initializer_list<std::uint64_t> ids)
      : key_(derive(seed, ids)) {}

  std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGamma); }

  // uniform in [0,1), 53 bits
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  // inversion by products of uniforms; fine for the modest means used here
  int poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    // split large means to avoid exp underflow
    int n = 0;
    while (lambda > 30.0) {
      // count arrivals in a rate-30 chunk
      double l = std::exp(-30.0);
      double prod = uniform();
      while (prod > l) {
        ++n;
        prod *= uniform();
      }
      lambda -= 30.0;
    }
    double l = std::exp(-lambda);
    double prod = uniform();
    while (prod > l) {
      ++n;
      prod *= uniform();
    }
    return n;
  }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace graphonkit
