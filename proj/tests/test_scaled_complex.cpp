#include <cmath>
#include <complex>

#include <doctest.h>

#include "tdom/scaled_complex.hpp"
#include "tdom/rng.hpp"

using tdom::Rng;
using tdom::ScaledComplex;
using tdom::ScaledReal;

TEST_CASE("normalization puts the modulus in [1,2) and is idempotent") {
  Rng rng(11);
  for (int i = 0; i < 2000; ++i) {
    ScaledComplex c{rng.uniform(-8.0, 8.0), rng.uniform(-8.0, 8.0),
                    static_cast<std::int64_t>(rng.uniform(-900.0, 900.0))};
    if (i % 17 == 0) c.im = 0.0;
    if (i % 31 == 0) {
      c.re = 0.0;
      c.im = 0.0;
    }
    c.normalize();
    if (c.is_zero()) {
      CHECK(c.exp2 == 0);
    } else {
      const double m = std::hypot(c.re, c.im);
      CHECK(m >= 1.0);
      CHECK(m < 2.0);
    }
    ScaledComplex again = c;
    again.normalize();
    CHECK(again == c);
  }
}

TEST_CASE("normalization preserves the represented value") {
  Rng rng(12);
  for (int i = 0; i < 500; ++i) {
    const std::complex<double> z(rng.uniform(-100.0, 100.0), rng.uniform(-100.0, 100.0));
    const ScaledComplex c = ScaledComplex::from(z);
    // power-of-two rescaling is exact, so decoding gives back z bit-for-bit
    CHECK(c.to_complex() == z);
  }
  CHECK(ScaledComplex::from(0.0).is_zero());
}

TEST_CASE("arithmetic agrees with plain complex arithmetic at moderate scale") {
  Rng rng(13);
  for (int i = 0; i < 500; ++i) {
    const std::complex<double> za(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
    const std::complex<double> zb(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0));
    const ScaledComplex a = ScaledComplex::from(za);
    const ScaledComplex b = ScaledComplex::from(zb);
    CHECK(std::abs((a + b).to_complex() - (za + zb)) <= 1e-15 * std::abs(za + zb) + 1e-300);
    CHECK(std::abs((a - b).to_complex() - (za - zb)) <= 1e-15 * std::abs(za - zb) + 1e-300);
    CHECK(std::abs((a * b).to_complex() - (za * zb)) <= 2e-15 * std::abs(za * zb) + 1e-300);
  }
}

TEST_CASE("addition aligns wildly different exponents") {
  const ScaledComplex big{1.0, 0.0, 1000};
  const ScaledComplex small{1.5, 0.0, -3000};
  CHECK((big + small) == big);  // below double resolution at this alignment
  const ScaledComplex mid{1.0, 0.0, 10};
  const ScaledComplex sum = big + mid;
  CHECK(sum.exp2 == 1000);
  CHECK(sum.re == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("log_abs spans huge exponents") {
  const ScaledComplex c{1.5, 0.0, 100000};
  CHECK(c.log_abs() == doctest::Approx(std::log(1.5) + 100000 * tdom::kLn2));
  CHECK(ScaledComplex::zero().log_abs() == -std::numeric_limits<double>::infinity());
}

TEST_CASE("from_polar_log round-trips the magnitude") {
  Rng rng(14);
  for (int i = 0; i < 200; ++i) {
    const double ln_mod = rng.uniform(-5000.0, 5000.0);
    const double phase = rng.uniform(0.0, 6.28);
    const ScaledComplex c = ScaledComplex::from_polar_log(ln_mod, phase);
    CHECK(c.log_abs() == doctest::Approx(ln_mod).epsilon(1e-12));
  }
}

TEST_CASE("factorial table is exact for small k and tracks lgamma for large k") {
  const auto t = tdom::factorial_table(400);
  double fact = 1.0;
  for (int k = 1; k <= 18; ++k) {
    fact *= k;
    CHECK(std::ldexp(t[static_cast<std::size_t>(k)].mant, static_cast<int>(t[static_cast<std::size_t>(k)].exp2)) == fact);
  }
  CHECK(t[400].log_value() == doctest::Approx(std::lgamma(401.0)).epsilon(1e-13));
  CHECK(t[0].log_value() == 0.0);
}

TEST_CASE("scaled real division undoes multiplication to a rounding") {
  const auto t = tdom::factorial_table(50);
  const ScaledReal f = t[37];
  const ScaledReal r = f.times(3.7).div(f);
  CHECK(r.log_value() == doctest::Approx(std::log(3.7)).epsilon(1e-15));
}
