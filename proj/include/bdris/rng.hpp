#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <string_view>

namespace bdris {

/// Counter-derived random stream. A stream is identified by
/// (seed, trial_index, purpose label); deriving the same triple always yields
/// the same sequence, independent of platform or standard library. Trials can
/// therefore run in any order, on any number of threads, with identical
/// results.
///
/// Generator is xoshiro256++ seeded through splitmix64. All floating-point
/// draws are built from raw 64-bit words, never from std:: distributions.
class RngStream {
 public:
  static RngStream derive(std::uint64_t seed, std::uint64_t trial_index,
                          std::string_view purpose) {
    std::uint64_t key = seed;
    key = mix(key ^ 0x9e3779b97f4a7c15ull);
    key = mix(key ^ trial_index);
    key = mix(key ^ fnv1a(purpose));
    RngStream r;
    std::uint64_t s = key;
    for (auto& word : r.state_) word = s = mix(s);
    return r;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1), 53 random bits.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe to pass through log().
  double next_open() { return 1.0 - next_double(); }

  /// Standard circularly-symmetric complex Gaussian CN(0, 1):
  /// radius sqrt(-log u) with u ~ (0,1], independent uniform phase.
  std::complex<double> next_cgauss() {
    const double radius = std::sqrt(-std::log(next_open()));
    const double phase = 2.0 * pi * next_double();
    return {radius * std::cos(phase), radius * std::sin(phase)};
  }

  /// Unit-modulus complex number with uniform phase.
  std::complex<double> next_phase() {
    const double phase = 2.0 * pi * next_double();
    return {std::cos(phase), std::sin(phase)};
  }

 private:
  static constexpr double pi = 3.14159265358979323846;

  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  static std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return h;
  }

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4] = {};
};

}  // namespace bdris
