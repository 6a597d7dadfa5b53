#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tdom/power_series.hpp"

namespace tdom::verify {

struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

/// Exponential coefficient sequence 1/k! (the Borel transform of the
/// all-ones series).
PowerSeries exponential_series(int order);

/// f + delta (shifts the constant coefficient).
PowerSeries shifted_by_constant(const PowerSeries& f, std::complex<double> delta);

/// max_k |a_k - b_k| / |b_k| over coefficients, computed in scaled
/// arithmetic; +inf if one side is zero where the other is not.
double max_relative_coefficient_error(const PowerSeries& a, const PowerSeries& b);

struct OracleEquivalence {
  int total = 0;
  int agreed_certified = 0;  ///< winding count == constructed inside-root count, certified
};

/// Random polynomials with roots uniform in D_2 kept `margin` away from the
/// unit circle; compares count_zeros on radius 1 against the constructed
/// number of roots of modulus < 1.
OracleEquivalence winding_oracle_equivalence(std::uint64_t seed, int count, int max_degree,
                                             double margin, int threads);

struct RYEmpirical {
  int total = 0;
  int satisfied = 0;  ///< degree <= 5 ln(C+2) with C fitted at N = 0, R = 1
};

/// Random polynomials with all roots in D_0.2 (inside the R/4 validity
/// disk for R = 1); checks the zero-count bound against the constructed
/// degree.
RYEmpirical ry_empirical(std::uint64_t seed, int count);

std::vector<CheckResult> bounds_suite(std::uint64_t seed);
std::vector<CheckResult> domination_suite(std::uint64_t seed);
std::vector<CheckResult> valency_suite(std::uint64_t seed, int threads);
std::vector<CheckResult> borel_suite(std::uint64_t seed);

/// which: all | bounds | domination | valency | borel.
std::vector<CheckResult> run_suites(const std::string& which, std::uint64_t seed, int threads);

void write_csv(std::ostream& out, const std::vector<CheckResult>& checks);

}  // namespace tdom::verify
