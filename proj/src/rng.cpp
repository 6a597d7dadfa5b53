#include "tdom/rng.hpp"

#include <cmath>
#include <numbers>

namespace tdom {

std::complex<double> Rng::in_disk(double radius) {
  const double r = radius * std::sqrt(uniform());
  const double th = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, th);
}

std::complex<double> Rng::in_annulus(double r_lo, double r_hi) {
  const double r = uniform(r_lo, r_hi);
  const double th = 2.0 * std::numbers::pi * uniform();
  return std::polar(r, th);
}

}  // namespace tdom
