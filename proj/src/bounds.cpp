#include "tdom/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace tdom {

namespace {

void check_p_r(int p, double R) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (!(R >= 1.0)) throw std::invalid_argument("R must be >= 1 (rescale the variable first)");
}

}  // namespace

EtaScanResult eta_scan(int p, double R) {
  check_p_r(p, R);
  const double log_r = std::log(R);
  const double w = 2.0 * p - 1.0;
  const std::int64_t cap =
      std::max<std::int64_t>({3LL * p, 20LL * static_cast<std::int64_t>(std::ceil(R)), 2000LL});

  double best = -std::numeric_limits<double>::infinity();
  int best_k = p + 1;
  double prev = best;
  int descents = 0;
  for (std::int64_t k = p + 1; k <= cap; ++k) {
    const double kd = static_cast<double>(k);
    const double term = w * std::log(kd) + kd * log_r - std::lgamma(kd + 1.0);
    // Exact ties (they happen at rational R) must resolve downward despite
    // lgamma's ulp noise.
    const bool unset = best == -std::numeric_limits<double>::infinity();
    if (unset || term > best + 1e-10 * std::max(1.0, std::fabs(best))) {
      best = term;
      best_k = static_cast<int>(k);
    }
    descents = term < prev ? descents + 1 : 0;
    prev = term;
    if (descents >= 32 && term <= best - 50.0) return {best, best_k};
  }
  throw std::runtime_error("scan not converged");
}

EtaClosedBounds eta_closed_bounds(int p, double R) {
  check_p_r(p, R);
  const double log_r = std::log(R);
  EtaClosedBounds b;
  b.log_eta1 = (2.0 * p - 1.0) * std::log(3.0 * p) + 3.0 * p * log_r - std::lgamma(p + 2.0);
  b.log_eta2 = 2.0 * p * std::log(3.0) + (2.0 * p - 1.0) * log_r + R;
  return b;
}

double log_nu(int p, double R) {
  check_p_r(p, R);
  const double log_r = std::log(R);
  return std::min(log_r, p * log_r - std::lgamma(p + 1.0));
}

double ry_zero_bound(int N, double C) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (!(C >= 0.0)) throw std::invalid_argument("invalid constant: C must be >= 0");
  return 5.0 * N + 5.0 * std::log(C + 2.0);
}

BoundReport q_bound(int p, double R, double A) {
  check_p_r(p, R);
  if (!(A > 0.0)) throw std::invalid_argument("A must be positive");

  const EtaScanResult eta = eta_scan(p, R);
  const EtaClosedBounds closed = eta_closed_bounds(p, R);
  const double lnu = log_nu(p, R);
  const double log_c = std::log(A) + eta.log_eta - lnu;

  double q;
  if (log_c < 700.0)
    q = 5.0 * p + 5.0 * std::log(std::exp(log_c) + 2.0);
  else
    q = 5.0 * p + 5.0 * (log_c + std::log1p(2.0 * std::exp(-log_c)));

  return {p, R, A, eta.log_eta, eta.argmax_k, closed.log_eta1, closed.log_eta2, lnu, log_c, q, R / 4.0};
}

}  // namespace tdom
