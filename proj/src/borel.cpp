#include "tdom/borel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace tdom {

PowerSeries borel(const PowerSeries& f) {
  std::vector<ScaledComplex> out(static_cast<std::size_t>(f.order()) + 1);
  ScaledReal fact = ScaledReal::one();
  for (int k = 0; k <= f.order(); ++k) {
    if (k > 0) fact = fact.times(static_cast<double>(k));
    out[static_cast<std::size_t>(k)] = f.coeff(k).div(fact);
  }
  return {std::move(out), f.label() + "/borel"};
}

PowerSeries inverse_borel_coeff(const PowerSeries& g) {
  std::vector<ScaledComplex> out(static_cast<std::size_t>(g.order()) + 1);
  ScaledReal fact = ScaledReal::one();
  for (int k = 0; k <= g.order(); ++k) {
    if (k > 0) fact = fact.times(static_cast<double>(k));
    out[static_cast<std::size_t>(k)] = g.coeff(k).times(fact);
  }
  return {std::move(out), g.label() + "/inv_borel"};
}

void QuadratureSpec::validate() const {
  if (node_count < 8) throw std::invalid_argument("node_count must be >= 8");
  if (!(cutoff_T > 0.0)) throw std::invalid_argument("cutoff_T must be positive");
  if (!(trust_radius > 0.0)) throw std::invalid_argument("trust_radius must be positive");
}

namespace {

// Gauss-Legendre nodes/weights on (-1, 1) by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.assign(static_cast<std::size_t>(n), 0.0);
  weights.assign(static_cast<std::size_t>(n), 0.0);
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double z1 = 0.0, pp = 0.0;
    do {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      z1 = z;
      z = z1 - p1 / pp;
    } while (std::fabs(z - z1) > 1e-15);
    nodes[static_cast<std::size_t>(i)] = -z;
    nodes[static_cast<std::size_t>(n - 1 - i)] = z;
    weights[static_cast<std::size_t>(i)] = weights[static_cast<std::size_t>(n - 1 - i)] =
        2.0 / ((1.0 - z * z) * pp * pp);
  }
}

struct RuleResult {
  std::complex<double> integral;
  double max_abs_g = 0.0;
  double t_at_max = 0.0;
  double growth_rate = 0.0;  // fitted d ln|g(tz)| / dt over the last quarter of nodes
};

RuleResult apply_rule(const PowerSeries& g, std::complex<double> z, int n, double T) {
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  RuleResult r;
  std::vector<double> ts(static_cast<std::size_t>(n)), logs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = 0.5 * T * (x[static_cast<std::size_t>(i)] + 1.0);
    const std::complex<double> gv = evaluate(g, t * z);
    r.integral += 0.5 * T * w[static_cast<std::size_t>(i)] * std::exp(-t) * gv;
    const double a = std::abs(gv);
    if (a > r.max_abs_g) {
      r.max_abs_g = a;
      r.t_at_max = t;
    }
    ts[static_cast<std::size_t>(i)] = t;
    logs[static_cast<std::size_t>(i)] = a > 0.0 ? std::log(a) : -std::numeric_limits<double>::infinity();
  }
  // Least-squares slope of ln|g| vs t on the last quarter of nodes; feeds the
  // tail estimate for integrands still growing at the cutoff.
  const int lo = (3 * n) / 4;
  double st = 0, sl = 0, stt = 0, stl = 0;
  int cnt = 0;
  for (int i = lo; i < n; ++i) {
    if (!std::isfinite(logs[static_cast<std::size_t>(i)])) continue;
    const double t = ts[static_cast<std::size_t>(i)], l = logs[static_cast<std::size_t>(i)];
    st += t;
    sl += l;
    stt += t * t;
    stl += t * l;
    ++cnt;
  }
  if (cnt >= 2) {
    const double denom = cnt * stt - st * st;
    if (denom > 0.0) r.growth_rate = std::clamp((cnt * stl - st * sl) / denom, 0.0, 0.999);
  }
  return r;
}

}  // namespace

IntegralResult inverse_borel_integral(const PowerSeries& g, std::complex<double> z, const QuadratureSpec& spec) {
  spec.validate();
  if (std::abs(z) * spec.cutoff_T > spec.trust_radius * (1.0 + 1e-12))
    throw std::invalid_argument("trust radius exceeded");
  const double series_tail = tail_bound(g, spec.trust_radius);
  if (!std::isfinite(series_tail)) throw std::domain_error("series not trusted at required radius");

  const RuleResult full = apply_rule(g, z, spec.node_count, spec.cutoff_T);
  const RuleResult half = apply_rule(g, z, std::max(4, spec.node_count / 2), spec.cutoff_T);

  const double quad_residual = std::abs(full.integral - half.integral);
  // Continue the fitted envelope max|g| e^(alpha (t - t_max)) past the cutoff:
  // the interior quadrature nodes stop short of T, and an integrand still
  // growing there contributes e^(-t)|g| ~ e^(-(1-alpha)t) beyond it.
  // factor 1.0625 pads the envelope fit against sampling noise
  const double analytic_tail = 1.0625 *
                               std::exp(-spec.cutoff_T + std::log(full.max_abs_g) +
                                        full.growth_rate * (spec.cutoff_T - full.t_at_max)) /
                               (1.0 - full.growth_rate);
  return {full.integral, quad_residual + analytic_tail + series_tail};
}

}  // namespace tdom
