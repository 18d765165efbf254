#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace flagtwist {

// Self-contained counter-free generator (splitmix64 core) so that streams are
// reproducible bit-for-bit across platforms and standard library versions.
// Every randomized routine takes an explicit Rng; parallel callers must use
// disjoint seeds or derived streams.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  // uniform in [0, 1)
  double uniform();
  double uniform(double lo, double hi);

  // standard normal via Box-Muller (no cached spare, keeps the stream linear)
  double normal();
  std::complex<double> complex_normal();

  // angle in [0, 2*pi)
  double angle();

  // Stream derived from (seed, label); the parent stream is not advanced.
  static Rng derive(std::uint64_t seed, std::string_view label);

 private:
  std::uint64_t state_;
};

}  // namespace flagtwist
