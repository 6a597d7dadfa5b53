#pragma once

#include <complex>

#include "tdom/power_series.hpp"

namespace tdom {

/// Coefficient-wise Borel transform a_k -> a_k / k!. The factorial enters
/// only as a scaled value (exact mantissa division, binary exponent
/// subtraction), never as a plain float.
PowerSeries borel(const PowerSeries& f);

/// Exact representation-level inverse: b_k -> b_k * k!.
PowerSeries inverse_borel_coeff(const PowerSeries& g);

struct QuadratureSpec {
  int node_count = 64;         ///< Gauss-Legendre nodes on [0, cutoff_T]
  double cutoff_T = 40.0;      ///< upper truncation of the integral
  double trust_radius = 0.0;   ///< max |t*z| allowed when sampling g

  void validate() const;
};

struct IntegralResult {
  std::complex<double> value;
  /// Quadrature residual (full vs half rule) + analytic tail past cutoff_T
  /// + the series' own truncation tail at the trust radius.
  double error_estimate;
};

/// Numerical inverse via the Laplace-type integral int_0^inf e^(-t) g(tz) dt,
/// truncated at cutoff_T. Requires |z|*cutoff_T <= trust_radius ("trust
/// radius exceeded") and a finite tail bound at the trust radius ("series not
/// trusted at required radius").
IntegralResult inverse_borel_integral(const PowerSeries& g, std::complex<double> z, const QuadratureSpec& spec);

}  // namespace tdom
