#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "tdom/power_series.hpp"
#include "tdom/rng.hpp"

namespace tdt {

using tdom::PowerSeries;
using tdom::Rng;
using tdom::ScaledComplex;

inline double rel_err(const ScaledComplex& a, const ScaledComplex& b) {
  if (b.is_zero()) return a.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
  const ScaledComplex d = a - b;
  if (d.is_zero()) return 0.0;
  return std::exp(d.log_abs() - b.log_abs());
}

inline double max_rel_err(const PowerSeries& a, const PowerSeries& b) {
  REQUIRE(a.order() == b.order());
  double worst = 0.0;
  for (int k = 0; k <= a.order(); ++k) worst = std::max(worst, rel_err(a.coeff(k), b.coeff(k)));
  return worst;
}

inline PowerSeries random_series(Rng& rng, int order, double exp_span) {
  std::vector<ScaledComplex> c(static_cast<std::size_t>(order) + 1);
  for (auto& a : c) {
    const double mod = rng.uniform(1.0, 2.0);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    a = ScaledComplex{mod * std::cos(phase), mod * std::sin(phase),
                      static_cast<std::int64_t>(rng.uniform(-exp_span, exp_span))};
    a.normalize();
  }
  return {std::move(c), "random"};
}

inline PowerSeries monomial(int degree, int pad_order, const char* label = "monomial") {
  std::vector<ScaledComplex> c(static_cast<std::size_t>(pad_order) + 1);
  c[static_cast<std::size_t>(degree)] = ScaledComplex::from(1.0);
  return {std::move(c), label};
}

}  // namespace tdt
