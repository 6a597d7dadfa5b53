#include "tdom/domination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tdom {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_range(const PowerSeries& f, int N, double R, int k_max, bool include_constant_term) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (!include_constant_term && N < 1) throw std::invalid_argument("excluding a_0 needs N >= 1");
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (k_max > f.order()) throw std::invalid_argument("k_max exceeds series order");
  if (N >= k_max) throw std::invalid_argument("need N < k_max");
}

// ln of max_i |a_i| R^i over the head range.
double log_head(const PowerSeries& f, int N, double R, bool include_constant_term) {
  const double log_r = std::log(R);
  double h = -kInf;
  for (int i = include_constant_term ? 0 : 1; i <= N; ++i)
    h = std::max(h, f.coeff(i).log_abs() + i * log_r);
  if (h == -kInf) throw std::domain_error("degenerate head: domination constant undefined");
  return h;
}

}  // namespace

void DominationProfile::validate() const {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (!include_constant_term && N < 1) throw std::invalid_argument("excluding a_0 needs N >= 1");
  if (!(R > 0.0)) throw std::invalid_argument("R must be positive");
  if (shape.factor < 0.0 || shape.exponent < 0.0) throw std::invalid_argument("shape parameters must be >= 0");
}

double minimal_constant(const PowerSeries& f, int N, double R, int k_max, bool include_constant_term) {
  return minimal_power_factor(f, N, R, 0.0, k_max, include_constant_term);
}

double minimal_power_factor(const PowerSeries& f, int N, double R, double m, int k_max,
                            bool include_constant_term) {
  check_range(f, N, R, k_max, include_constant_term);
  if (m < 0.0) throw std::invalid_argument("shape power must be >= 0");
  const double head = log_head(f, N, R, include_constant_term);
  const double log_r = std::log(R);
  double best = -kInf;
  for (int k = N + 1; k <= k_max; ++k) {
    const double la = f.coeff(k).log_abs();
    if (la == -kInf) continue;
    best = std::max(best, la + k * log_r - m * std::log(static_cast<double>(k)));
  }
  if (best == -kInf) return 0.0;
  return std::exp(best - head);
}

DominationReport check_domination(const PowerSeries& f, const DominationProfile& profile, int k_max) {
  profile.validate();
  check_range(f, profile.N, profile.R, k_max, profile.include_constant_term);
  const double head = log_head(f, profile.N, profile.R, profile.include_constant_term);
  const double log_r = std::log(profile.R);
  const double log_factor = profile.shape.factor > 0.0 ? std::log(profile.shape.factor) : -kInf;

  double worst = -kInf;
  int worst_k = profile.N + 1;
  double scale = 1.0;  // magnitude of the logs entering the worst ratio, for the tie band
  for (int k = profile.N + 1; k <= k_max; ++k) {
    const double la = f.coeff(k).log_abs();
    double lr;
    if (la == -kInf)
      lr = -kInf;  // a zero coefficient is dominated by any shape
    else if (log_factor == -kInf)
      lr = kInf;
    else
      lr = la + k * log_r - log_factor - profile.shape.exponent * std::log(static_cast<double>(k)) - head;
    if (lr > worst) {
      worst = lr;
      worst_k = k;
      if (la != -kInf && lr != kInf)
        scale = std::max({1.0, std::fabs(la + k * log_r), std::fabs(head), std::fabs(log_factor)});
    }
  }

  DominationReport rep;
  rep.k_range = {profile.N + 1, k_max};
  rep.worst_k = worst_k;
  // Profiles built from the fitted minimal constants sit exactly on the
  // boundary; exp/log round-trip noise must not flip them to "fails".
  const double tie = 64.0 * std::numeric_limits<double>::epsilon() * scale;
  rep.holds = worst <= tie;
  rep.worst_ratio = worst == -kInf ? 0.0 : std::exp(worst);
  if (rep.holds && rep.worst_ratio > 1.0) rep.worst_ratio = 1.0;
  return rep;
}

}  // namespace tdom
