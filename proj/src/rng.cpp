#include "flagtwist/rng.hpp"

#include <cmath>

namespace flagtwist {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::uniform() {
  // 53 mantissa bits
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  double u1 = uniform();
  double u2 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

std::complex<double> Rng::complex_normal() {
  double re = normal();
  double im = normal();
  return {re, im};
}

double Rng::angle() { return kTwoPi * uniform(); }

Rng Rng::derive(std::uint64_t seed, std::string_view label) {
  std::uint64_t s = seed ^ fnv1a(label);
  // one warm-up scramble so nearby seeds decorrelate
  splitmix64(s);
  return Rng(s);
}

}  // namespace flagtwist
