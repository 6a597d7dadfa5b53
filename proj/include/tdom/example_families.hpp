#pragma once

#include <complex>
#include <string>
#include <vector>

#include "tdom/power_series.hpp"

namespace tdom {

/// Built-in coefficient families used as ground truth throughout the test
/// and verification suites:
///   geometric  1/(1-z)            all-ones coefficients
///   fp         (z^p - 1)(e^z - 1) entire, zeros at the p-th roots of unity
///                                 and at 2*pi*i*k
///   fp_tilde   the series whose Borel transform is fp
///   exp_power  e^(z^p)
///   koebe      z/(1-z)^2          coefficients a_k = k
enum class Family { geometric, fp, fp_tilde, exp_power, koebe };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct ExampleId {
  Family name = Family::geometric;
  int p = 1;      ///< ignored for geometric and koebe
  int order = 0;  ///< truncation degree
};

/// Coefficients from the closed forms, truncated at id.order, in scaled
/// arithmetic. Labels are canonical ("fp(p=3)" etc.).
PowerSeries build(const ExampleId& id);

/// The series whose Borel transform is the family's entire-side partner:
/// geometric for geometric (its transform is the exponential series),
/// fp_tilde for fp, and the formal hat series with coefficients (l*p)!/l! at
/// degrees l*p for exp_power — the latter diverges for any z != 0, which its
/// label flags. koebe has none ("no borel counterpart defined").
PowerSeries borel_counterpart(const ExampleId& id, int order);

/// All solutions with modulus < radius, repeated per multiplicity, of
///   geometric: e^z = c           (z = Log c + 2*pi*i*k)
///   fp:        fp(z) = 0         (c must be 0)
///   exp_power: e^(z^p) = c       (p-th roots of Log c + 2*pi*i*k)
/// Solutions within 1e-9 of the boundary circle abort with
/// "boundary-ambiguous enumeration".
std::vector<std::complex<double>> analytic_solutions(const ExampleId& id, std::complex<double> c,
                                                     double radius);

}  // namespace tdom
