#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace harmsim {

// splitmix64 finalizer, used to derive independent stream seeds.
inline uint64_t mix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derive a child seed from a root seed plus any number of integer ids
// (purpose tag, drop index, candidate index, ...). Streams with distinct
// id tuples are statistically independent and reproducible.
template <typename... Ids>
uint64_t stream_seed(uint64_t root, Ids... ids) {
  uint64_t h = mix64(root);
  ((h = mix64(h ^ mix64(static_cast<uint64_t>(ids)))), ...);
  return h;
}

// Stream purpose tags. Arbitrary distinct constants.
enum StreamTag : uint64_t {
  kTagUserPos = 0x11,
  kTagFading = 0x12,
  kTagQpsoInit = 0x21,
  kTagQpsoEvolve = 0x22,
  kTagCrcPlay = 0x31,
  kTagCrcNoise = 0x32,
  kTagCrcSpace = 0x33,
  kTagDrop = 0x41,
  kTagSolver = 0x42,
  kTagTuraRound = 0x43,
  kTagCrcRound = 0x44,
};

// Deterministic RNG: mt19937_64 (sequence pinned by the standard) with
// hand-rolled variate conversions, so that draws are bit-identical across
// platforms and compilers (std::*_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  // uniform in [0, 1)
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // unit-mean exponential; argument of log is in (0, 1]
  double exponential() { return -std::log1p(-uniform01()); }

  // standard normal via Box-Muller
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace harmsim
