#pragma once

#include <utility>

#include "tdom/power_series.hpp"

namespace tdom {

/// S(k) = factor * k^exponent; a constant shape is exponent == 0.
struct DominationShape {
  double factor = 0.0;
  double exponent = 0.0;

  static DominationShape constant(double c) { return {c, 0.0}; }
  static DominationShape power(double a, double m) { return {a, m}; }
};

/// The tested property: |a_k| R^k <= S(k) * max_i |a_i| R^i for all
/// N+1 <= k, with i running over 0..N (include_constant_term) or 1..N.
struct DominationProfile {
  int N = 0;
  double R = 1.0;
  DominationShape shape;
  bool include_constant_term = true;

  void validate() const;
};

struct DominationReport {
  bool holds = false;
  int worst_k = 0;
  double worst_ratio = 0.0;  // largest |a_k|R^k / (S(k) * head max)
  std::pair<int, int> k_range{0, 0};
};

/// Smallest C such that the constant-shape property holds for
/// N+1 <= k <= k_max. All ratios are formed as differences of
/// log-magnitudes; zero coefficients count as log-magnitude -inf. A zero
/// head maximum throws std::domain_error("degenerate head: domination
/// constant undefined").
double minimal_constant(const PowerSeries& f, int N, double R, int k_max, bool include_constant_term);

/// Smallest A such that |a_k| R^k <= A k^m max_i |a_i| R^i over the same
/// range.
double minimal_power_factor(const PowerSeries& f, int N, double R, double m, int k_max,
                            bool include_constant_term);

/// Evaluates the inequality for every k in [N+1, k_max]; ties in worst_k
/// resolve to the smallest index.
DominationReport check_domination(const PowerSeries& f, const DominationProfile& profile, int k_max);

}  // namespace tdom
