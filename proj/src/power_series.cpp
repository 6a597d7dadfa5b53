#include "tdom/power_series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tdom {

PowerSeries::PowerSeries(std::vector<ScaledComplex> coeffs, std::string label)
    : coeffs_(std::move(coeffs)), label_(std::move(label)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least the constant coefficient");
  for (auto& c : coeffs_) c.normalize();
}

PowerSeries PowerSeries::zero(int order, std::string label) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  return {std::vector<ScaledComplex>(static_cast<std::size_t>(order) + 1), std::move(label)};
}

PowerSeries PowerSeries::from_complex_coeffs(std::span<const std::complex<double>> coeffs, std::string label) {
  std::vector<ScaledComplex> c(coeffs.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) c[k] = ScaledComplex::from(coeffs[k]);
  return {std::move(c), std::move(label)};
}

PowerSeries PowerSeries::with_label(std::string label) const { return {coeffs_, std::move(label)}; }

PowerSeries PowerSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  std::vector<ScaledComplex> c(static_cast<std::size_t>(order) + 1);
  const std::size_t keep = std::min(c.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), keep, c.begin());
  return {std::move(c), label_};
}

std::complex<double> evaluate(const PowerSeries& f, std::complex<double> z) {
  const auto& c = f.coeffs();
  const int n = f.order();

  // Horner on the raw mantissa; the shared exponent is rebalanced every 16
  // terms and whenever an incoming coefficient sits far off the current
  // scale.
  std::complex<double> m(c[static_cast<std::size_t>(n)].re, c[static_cast<std::size_t>(n)].im);
  std::int64_t e = c[static_cast<std::size_t>(n)].exp2;
  const auto rebalance = [&] {
    ScaledComplex t{m.real(), m.imag(), e};
    t.normalize();
    m = {t.re, t.im};
    e = t.exp2;
  };

  int steps = 0;
  for (int k = n - 1; k >= 0; --k) {
    m *= z;
    if (++steps % 16 == 0) rebalance();
    const ScaledComplex& ck = c[static_cast<std::size_t>(k)];
    if (ck.is_zero()) continue;
    std::int64_t shift = ck.exp2 - e;
    if (shift > 512 || shift < -512) {
      rebalance();
      shift = ck.exp2 - e;
    }
    if (shift <= 0) {
      const int s = static_cast<int>(std::max<std::int64_t>(shift, -2100));
      m += std::complex<double>(std::ldexp(ck.re, s), std::ldexp(ck.im, s));
    } else {
      // The coefficient dwarfs everything accumulated so far: rebase onto it.
      const int s = static_cast<int>(std::min<std::int64_t>(shift, 2100));
      m = std::complex<double>(ck.re + std::ldexp(m.real(), -s), ck.im + std::ldexp(m.imag(), -s));
      e = ck.exp2;
    }
  }

  ScaledComplex acc{m.real(), m.imag(), e};
  acc.normalize();
  const std::complex<double> v = acc.to_complex();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw std::range_error("magnitude out of range");
  return v;
}

PowerSeries derivative(const PowerSeries& f) {
  if (f.order() == 0) return PowerSeries::zero(0, f.label() + "'");
  std::vector<ScaledComplex> out(static_cast<std::size_t>(f.order()));
  for (int k = 0; k < f.order(); ++k)
    out[static_cast<std::size_t>(k)] = f.coeff(k + 1).times(static_cast<double>(k + 1));
  return {std::move(out), f.label() + "'"};
}

PowerSeries scale_var(const PowerSeries& f, double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("invalid scale");
  std::vector<ScaledComplex> out(static_cast<std::size_t>(f.order()) + 1);
  out[0] = f.coeff(0);
  ScaledReal pw = ScaledReal::one();
  for (int k = 1; k <= f.order(); ++k) {
    pw = pw.times(scale);
    out[static_cast<std::size_t>(k)] = f.coeff(k).times(pw);
  }
  return {std::move(out), f.label()};
}

PowerSeries mul_truncated(const PowerSeries& f, const PowerSeries& g, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  std::vector<ScaledComplex> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    ScaledComplex s;
    const int lo = std::max(0, k - g.order());
    const int hi = std::min(k, f.order());
    for (int i = lo; i <= hi; ++i) s = s + f.coeff(i) * g.coeff(k - i);
    out[static_cast<std::size_t>(k)] = s;
  }
  return {std::move(out), f.label() + "*" + g.label()};
}

double tail_bound(const PowerSeries& f, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("tail radius must be positive");
  const int n = f.order();
  const int window = std::max(1, (n + 4) / 4);  // last quarter of the n+1 stored coefficients
  const int start = std::max(1, n + 1 - window);

  double log_rho = -std::numeric_limits<double>::infinity();
  for (int k = start; k <= n; ++k) {
    const ScaledComplex& c = f.coeff(k);
    if (c.is_zero()) continue;
    log_rho = std::max(log_rho, c.log_abs() / static_cast<double>(k));
  }
  if (log_rho == -std::numeric_limits<double>::infinity()) return 0.0;

  const double t = log_rho + std::log(r);  // ln(rho * r)
  if (t >= 0.0) return std::numeric_limits<double>::infinity();
  // geometric tail sum_{k=n+1}^inf (rho r)^k
  return std::exp(static_cast<double>(n + 1) * t - std::log1p(-std::exp(t)));
}

PowerSeries polynomial_from_roots(std::span<const std::complex<double>> roots, int pad_order, std::string label) {
  const int deg = static_cast<int>(roots.size());
  if (pad_order < deg) throw std::invalid_argument("pad_order below polynomial degree");
  std::vector<ScaledComplex> c(static_cast<std::size_t>(pad_order) + 1);
  c[0] = ScaledComplex::from(1.0);
  int used = 0;
  for (const std::complex<double> root : roots) {
    ++used;
    for (int k = used; k >= 1; --k)
      c[static_cast<std::size_t>(k)] = c[static_cast<std::size_t>(k) - 1] - c[static_cast<std::size_t>(k)].times(root);
    c[0] = -c[0].times(root);
  }
  return {std::move(c), std::move(label)};
}

}  // namespace tdom
