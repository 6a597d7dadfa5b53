#pragma once

#include <cstdint>

namespace tdom {

struct EtaScanResult {
  double log_eta;   ///< ln max_{k >= p+1} k^(2p-1) R^k / k!
  int argmax_k;     ///< smallest maximizing k
};

/// Forward scan of ln eta_k = (2p-1) ln k + k ln R - lnGamma(k+1) over
/// integers k >= p+1. Terminates once the term has decreased for 32
/// consecutive steps and sits 50 nats below the running maximum; hard cap
/// k <= max(3p, 20*ceil(R), 2000) ("scan not converged" if hit first). Ties
/// resolve to the smallest k.
EtaScanResult eta_scan(int p, double R);

struct EtaClosedBounds {
  double log_eta1;  ///< ln (3p)^(2p-1) R^(3p) / (p+1)!
  double log_eta2;  ///< ln 3^(2p) R^(2p-1) e^R
};

EtaClosedBounds eta_closed_bounds(int p, double R);

/// ln min{R, R^p / p!}.
double log_nu(int p, double R);

/// 5N + 5 ln(C+2): zero count bound for an (N,R,C)-dominated series, valid
/// on |z| < R/4. Natural logarithm throughout.
double ry_zero_bound(int N, double C);

/// Everything the valency bound q <= 5p + 5 ln(A eta / nu + 2) is composed
/// from, all in log space.
struct BoundReport {
  int p;
  double R;
  double A;                ///< caller-supplied stand-in for the p-valency domination constant
  double log_eta;
  int eta_argmax_k;
  double log_eta1_bound;
  double log_eta2_bound;
  double log_nu;
  double log_C;            ///< ln(A * eta / nu)
  double q;
  double valid_radius;     ///< R/4; see kValidRadiusNote
};

BoundReport q_bound(int p, double R, double A);

inline constexpr const char* kLogBaseNote =
    "log base: natural logarithm assumed in 5N + 5 log(C+2) and the q bound";
inline constexpr const char* kValidRadiusNote =
    "valency bound certified on |z| < R/4 (the zero-count step needs R' < R/4, "
    "even where a bare R' < R is quoted)";

}  // namespace tdom
