#pragma once

#include <complex>
#include <cstdint>

namespace tdom {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic across platforms and standard libraries (reports must be
/// byte-identical for a fixed seed), hence no <random> distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  /// Uniform over the disk of the given radius (area measure).
  std::complex<double> in_disk(double radius);

  /// Modulus uniform in [r_lo, r_hi), phase uniform.
  std::complex<double> in_annulus(double r_lo, double r_hi);

 private:
  std::uint64_t state_;
};

}  // namespace tdom
