#pragma once

#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "tdom/power_series.hpp"

namespace tdom {

struct ContourSpec {
  double radius = 1.0;
  int initial_samples = 1024;       ///< power of two >= 64
  int max_samples = 1 << 20;        ///< power of two >= initial_samples
  /// Guard distance from a zero of f - c on the contour. 0 means the
  /// scale-free default 1e-9 * max sampled |f - c|; explicit values must be
  /// positive.
  double min_modulus = 0.0;
  double max_phase_step = std::numbers::pi / 2;  ///< radians, in (0, pi)

  void validate() const;
};

struct WindingResult {
  int count = 0;
  bool certified = false;
};

/// Number of solutions of f(z) = c inside |z| < radius, counted with
/// multiplicity, by tracking the continuous argument of f - c along the
/// circle. Sampling doubles until every consecutive phase step is below
/// max_phase_step (or max_samples is reached); certified means converged
/// steps, a pre-rounding winding within 1e-6 of an integer, and all samples
/// at least min_modulus away from zero.
///
/// Throws "target value attained near contour" when a sample gets below the
/// guard, and "series not trusted at radius" when tail_bound(f, radius) is
/// infinite or not below min_modulus/2.
WindingResult winding_number(const PowerSeries& f, std::complex<double> c, const ContourSpec& spec);

/// winding_number with c = 0.
WindingResult count_zeros(const PowerSeries& f, const ContourSpec& spec);

struct ValencyTarget {
  std::complex<double> c;
  int count = 0;
  bool certified = false;
};

struct ValencyReport {
  double radius = 0.0;
  std::vector<ValencyTarget> targets;
  int max_count = 0;  ///< maximum count among certified targets
  std::string grid_description;
};

/// Grid approximation of the valency sup over c: samples w = f(z) at
/// grid_size^2 points on concentric interior circles, perturbs each image by
/// a seeded pseudo-random offset of relative size 1e-3, deduplicates within
/// relative distance 1e-6, and runs a certified winding count per target.
/// Individual uncertified targets are recorded, not fatal; an empty
/// certified set throws "no certified target". The result is a lower bound
/// for the true valency on the disk.
ValencyReport valency_lower_bound(const PowerSeries& f, const ContourSpec& spec, int grid_size,
                                  std::uint64_t seed, int threads = 1);

}  // namespace tdom
