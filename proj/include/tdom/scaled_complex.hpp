#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

namespace tdom {

inline constexpr double kLn2 = 0.6931471805599453094172321214581766;

/// Positive real scale factor mant * 2^exp2 with mant in [1, 2).
/// Holds magnitudes like R^k and k! that overflow plain doubles long before
/// the truncation orders this library works at.
struct ScaledReal {
  double mant = 1.0;
  std::int64_t exp2 = 0;

  static ScaledReal one() { return {}; }

  static ScaledReal from_double(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
      throw std::invalid_argument("scale factor must be positive and finite");
    ScaledReal s{x, 0};
    s.normalize();
    return s;
  }

  ScaledReal& normalize() {
    int e = 0;
    std::frexp(mant, &e);            // mant in [2^(e-1), 2^e)
    mant = std::ldexp(mant, 1 - e);  // exact power-of-two rescale
    exp2 += e - 1;
    return *this;
  }

  ScaledReal times(double x) const {
    ScaledReal s{mant * x, exp2};
    s.normalize();
    return s;
  }

  ScaledReal times(const ScaledReal& o) const {
    ScaledReal s{mant * o.mant, exp2 + o.exp2};
    s.normalize();
    return s;
  }

  ScaledReal div(const ScaledReal& o) const {
    ScaledReal s{mant / o.mant, exp2 - o.exp2};
    s.normalize();
    return s;
  }

  double log_value() const { return std::log(mant) + kLn2 * static_cast<double>(exp2); }
};

/// Complex value (re + i*im) * 2^exp2.
///
/// Invariant: either both mantissa parts are zero and exp2 == 0 (canonical
/// zero), or the mantissa modulus hypot(re, im) lies in [1, 2). Additions of
/// aligned mantissas stay exact double arithmetic; only the shared binary
/// exponent absorbs the huge dynamic range.
struct ScaledComplex {
  double re = 0.0;
  double im = 0.0;
  std::int64_t exp2 = 0;

  static ScaledComplex zero() { return {}; }

  static ScaledComplex from(std::complex<double> z) {
    ScaledComplex c{z.real(), z.imag(), 0};
    c.normalize();
    return c;
  }

  static ScaledComplex from(double x) { return from(std::complex<double>(x, 0.0)); }

  /// Value exp(ln_modulus) * e^(i*phase) without ever forming the modulus as
  /// a plain double.
  static ScaledComplex from_polar_log(double ln_modulus, double phase) {
    if (ln_modulus == -std::numeric_limits<double>::infinity()) return {};
    const double e = std::floor(ln_modulus / kLn2);
    const double frac = ln_modulus - e * kLn2;  // in [0, ln 2)
    const double mod = std::exp(frac);
    ScaledComplex c{mod * std::cos(phase), mod * std::sin(phase), static_cast<std::int64_t>(e)};
    c.normalize();
    return c;
  }

  bool is_zero() const { return re == 0.0 && im == 0.0; }

  ScaledComplex& normalize() {
    if (re == 0.0 && im == 0.0) {
      exp2 = 0;
      return *this;
    }
    double m = std::hypot(re, im);
    if (!std::isfinite(m)) {  // parts near DBL_MAX: pre-scale, then renormalize
      re = std::ldexp(re, -64);
      im = std::ldexp(im, -64);
      exp2 += 64;
      m = std::hypot(re, im);
      if (!std::isfinite(m)) throw std::invalid_argument("non-finite value");
    }
    int e = 0;
    std::frexp(m, &e);
    re = std::ldexp(re, 1 - e);  // power-of-two rescale, exact
    im = std::ldexp(im, 1 - e);
    exp2 += e - 1;
    return *this;
  }

  /// Natural log of the modulus; -inf for zero.
  double log_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    return std::log(std::hypot(re, im)) + kLn2 * static_cast<double>(exp2);
  }

  /// Plain complex value; saturates to inf/0 outside double range (callers
  /// that must fail on overflow check isfinite on the result).
  std::complex<double> to_complex() const {
    const std::int64_t sh = std::max<std::int64_t>(-2200, std::min<std::int64_t>(2200, exp2));
    return {std::ldexp(re, static_cast<int>(sh)), std::ldexp(im, static_cast<int>(sh))};
  }

  ScaledComplex operator-() const { return {-re, -im, exp2}; }

  friend ScaledComplex operator+(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const ScaledComplex* hi = &a;
    const ScaledComplex* lo = &b;
    if (hi->exp2 < lo->exp2) std::swap(hi, lo);
    const std::int64_t shift = lo->exp2 - hi->exp2;  // <= 0
    if (shift < -2100) return *hi;                   // lo underflows at this alignment
    ScaledComplex r{hi->re + std::ldexp(lo->re, static_cast<int>(shift)),
                    hi->im + std::ldexp(lo->im, static_cast<int>(shift)), hi->exp2};
    return r.normalize();
  }

  friend ScaledComplex operator-(const ScaledComplex& a, const ScaledComplex& b) { return a + (-b); }

  friend ScaledComplex operator*(const ScaledComplex& a, const ScaledComplex& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ScaledComplex r{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.exp2 + b.exp2};
    return r.normalize();
  }

  ScaledComplex times(double x) const {
    if (x == 0.0 || is_zero()) return {};
    ScaledComplex r{re * x, im * x, exp2};
    return r.normalize();
  }

  ScaledComplex times(std::complex<double> z) const {
    if (is_zero() || (z.real() == 0.0 && z.imag() == 0.0)) return {};
    ScaledComplex r{re * z.real() - im * z.imag(), re * z.imag() + im * z.real(), exp2};
    return r.normalize();
  }

  ScaledComplex times(const ScaledReal& s) const {
    if (is_zero()) return {};
    ScaledComplex r{re * s.mant, im * s.mant, exp2 + s.exp2};
    return r.normalize();
  }

  ScaledComplex div(const ScaledReal& s) const {
    if (is_zero()) return {};
    ScaledComplex r{re / s.mant, im / s.mant, exp2 - s.exp2};
    return r.normalize();
  }

  friend bool operator==(const ScaledComplex& a, const ScaledComplex& b) {
    return a.re == b.re && a.im == b.im && a.exp2 == b.exp2;
  }
};

/// [0!, 1!, ..., n!] as scaled values via cumulative products. Every module
/// that needs k! goes through this table so shared-factor rounding cancels
/// between computation routes.
inline std::vector<ScaledReal> factorial_table(int n) {
  std::vector<ScaledReal> t(static_cast<std::size_t>(n) + 1);
  t[0] = ScaledReal::one();
  for (int k = 1; k <= n; ++k) t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k) - 1].times(static_cast<double>(k));
  return t;
}

}  // namespace tdom
