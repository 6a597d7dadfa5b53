#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "tdom/scaled_complex.hpp"

namespace tdom {

/// Truncated power series sum_{k=0}^{order} a_k z^k.
///
/// Immutable after construction; coefficients are kept normalized. All
/// operations below are pure functions, so series can be shared across
/// worker threads without coordination.
class PowerSeries {
 public:
  PowerSeries(std::vector<ScaledComplex> coeffs, std::string label);

  static PowerSeries zero(int order, std::string label);
  static PowerSeries from_complex_coeffs(std::span<const std::complex<double>> coeffs, std::string label);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ScaledComplex& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<ScaledComplex>& coeffs() const { return coeffs_; }
  const std::string& label() const { return label_; }

  PowerSeries with_label(std::string label) const;
  /// Truncates (or zero-pads) to the requested order.
  PowerSeries truncated(int order) const;

 private:
  std::vector<ScaledComplex> coeffs_;  // exactly order+1 entries
  std::string label_;
};

/// Horner evaluation with a scaled accumulator; the accumulator exponent is
/// rebalanced every 16 terms. Throws std::range_error("magnitude out of
/// range") if the final value does not fit a plain complex double.
std::complex<double> evaluate(const PowerSeries& f, std::complex<double> z);

/// Term-by-term derivative; a constant series yields the zero series of
/// order 0 (documented contract, not an error).
PowerSeries derivative(const PowerSeries& f);

/// Coefficient k becomes a_k * scale^k. Exact in the exponent when scale is
/// a power of two. Throws std::invalid_argument("invalid scale") for
/// scale <= 0.
PowerSeries scale_var(const PowerSeries& f, double scale);

/// Cauchy product truncated at the requested order.
PowerSeries mul_truncated(const PowerSeries& f, const PowerSeries& g, int order);

/// Heuristic upper estimate of the discarded tail at radius r: a geometric
/// envelope rho^k is fitted to the last quarter of the stored coefficients
/// (rho = max |a_k|^(1/k) over that window) and its tail sum from order+1 is
/// returned, or +inf when rho*r >= 1. An estimate, not a certificate.
double tail_bound(const PowerSeries& f, double r);

/// Coefficients of prod_j (z - roots[j]), zero-padded up to pad_order (at
/// least the degree). Padding past the degree keeps tail_bound's fitting
/// window on exact zeros, so polynomial tails are reported as 0.
PowerSeries polynomial_from_roots(std::span<const std::complex<double>> roots, int pad_order, std::string label);

}  // namespace tdom
