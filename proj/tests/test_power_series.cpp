#include <cmath>
#include <complex>
#include <vector>

#include <doctest.h>

#include "tdom/example_families.hpp"
#include "tdom/power_series.hpp"
#include "test_util.hpp"

using namespace tdom;
using tdt::max_rel_err;
using tdt::monomial;
using tdt::random_series;

TEST_CASE("evaluate: truncated geometric series at z = 0.5") {
  const PowerSeries f = build({Family::geometric, 1, 60});
  // truncation leaves (1 - 0.5^61)/(1 - 0.5); the tail is 0.5^61/(1-0.5)
  const std::complex<double> v = evaluate(f, {0.5, 0.0});
  CHECK(std::abs(v - 2.0) <= 1e-12);
  CHECK(tail_bound(f, 0.5) >= std::pow(0.5, 61) / 0.5 * (1 - 1e-12));
}

TEST_CASE("evaluate: z = 0 returns the constant coefficient") {
  tdom::Rng rng(21);
  const PowerSeries f = random_series(rng, 40, 40.0);
  CHECK(evaluate(f, {0.0, 0.0}) == f.coeff(0).to_complex());
}

TEST_CASE("evaluate: monomial") {
  const PowerSeries f = monomial(3, 3);
  CHECK(evaluate(f, {2.0, 0.0}) == std::complex<double>(8.0, 0.0));
}

TEST_CASE("evaluate: huge coefficients overflow the final conversion only") {
  std::vector<ScaledComplex> c(3);
  c[0] = ScaledComplex{1.0, 0.0, 3000};
  c[2] = ScaledComplex::from(1.0);
  const PowerSeries f(std::move(c), "huge");
  CHECK_THROWS_WITH_AS((void)evaluate(f, {1.0, 0.0}), "magnitude out of range", std::range_error);
  // the scaled pipeline itself survives; a larger-magnitude piece dominates
  CHECK_NOTHROW((void)tail_bound(f, 1.0));
}

TEST_CASE("derivative basics") {
  const PowerSeries z3 = monomial(3, 3);
  const PowerSeries d = derivative(z3);
  CHECK(d.order() == 2);
  CHECK(d.coeff(2).to_complex() == std::complex<double>(3.0, 0.0));
  CHECK(d.coeff(1).is_zero());

  std::vector<ScaledComplex> c{ScaledComplex::from(5.0)};
  const PowerSeries konst(std::move(c), "const");
  const PowerSeries dk = derivative(konst);
  CHECK(dk.order() == 0);
  CHECK(dk.coeff(0).is_zero());

  const PowerSeries g = build({Family::geometric, 1, 12});
  const PowerSeries dg = derivative(g);
  CHECK(dg.order() == 11);
  for (int k = 0; k <= 11; ++k)
    CHECK(dg.coeff(k).to_complex() == std::complex<double>(k + 1.0, 0.0));
}

TEST_CASE("scale_var: identity, exact powers of two, inverse round trip") {
  tdom::Rng rng(22);
  const PowerSeries f = random_series(rng, 50, 200.0);
  const PowerSeries same = scale_var(f, 1.0);
  for (int k = 0; k <= 50; ++k) CHECK(same.coeff(k) == f.coeff(k));

  const PowerSeries ones = build({Family::geometric, 1, 30});
  const PowerSeries doubled = scale_var(ones, 2.0);
  for (int k = 0; k <= 30; ++k) {
    CHECK(doubled.coeff(k).re == 1.0);
    CHECK(doubled.coeff(k).exp2 == k);
  }

  const PowerSeries back = scale_var(scale_var(f, 2.0), 0.5);
  for (int k = 0; k <= 50; ++k) CHECK(back.coeff(k) == f.coeff(k));  // power-of-two scaling is exact
}

TEST_CASE("scale_var composition property") {
  tdom::Rng rng(23);
  for (int rep = 0; rep < 30; ++rep) {
    const PowerSeries f = random_series(rng, 60, 150.0);
    const double r1 = rng.uniform(0.5, 4.0);
    const double r2 = rng.uniform(0.5, 4.0);
    const PowerSeries lhs = scale_var(f, r1 * r2);
    const PowerSeries rhs = scale_var(scale_var(f, r1), r2);
    CHECK(max_rel_err(lhs, rhs) <= 1e-14);
  }
}

TEST_CASE("derivative commutes with scaling up to the chain-rule factor") {
  tdom::Rng rng(24);
  for (int rep = 0; rep < 30; ++rep) {
    const PowerSeries f = random_series(rng, 40, 100.0);
    const double r = rng.uniform(0.5, 4.0);
    const PowerSeries lhs = derivative(scale_var(f, r));
    PowerSeries rhs = scale_var(derivative(f), r);
    std::vector<ScaledComplex> scaled(static_cast<std::size_t>(rhs.order()) + 1);
    for (int k = 0; k <= rhs.order(); ++k) scaled[static_cast<std::size_t>(k)] = rhs.coeff(k).times(r);
    CHECK(max_rel_err(lhs, PowerSeries(std::move(scaled), "rhs")) <= 1e-14);
  }
}

TEST_CASE("mul_truncated basics") {
  const PowerSeries one_plus = PowerSeries::from_complex_coeffs(
      std::vector<std::complex<double>>{{1, 0}, {1, 0}}, "1+z");
  const PowerSeries one_minus = PowerSeries::from_complex_coeffs(
      std::vector<std::complex<double>>{{1, 0}, {-1, 0}}, "1-z");
  const PowerSeries prod = mul_truncated(one_plus, one_minus, 2);
  CHECK(prod.coeff(0).to_complex() == std::complex<double>(1, 0));
  CHECK(prod.coeff(1).is_zero());
  CHECK(prod.coeff(2).to_complex() == std::complex<double>(-1, 0));

  const PowerSeries z = PowerSeries::zero(5, "0");
  const PowerSeries pz = mul_truncated(one_plus, z, 5);
  for (int k = 0; k <= 5; ++k) CHECK(pz.coeff(k).is_zero());
}

TEST_CASE("mul_truncated matches the fp closed form") {
  // (z^3 - 1)(e^z - 1) assembled independently of the fp closed form
  const int order = 40;
  std::vector<ScaledComplex> zp(static_cast<std::size_t>(order) + 1);
  zp[0] = ScaledComplex::from(-1.0);
  zp[3] = ScaledComplex::from(1.0);
  const PowerSeries zp_minus_one(std::move(zp), "z^3-1");
  const auto fact = factorial_table(order);
  std::vector<ScaledComplex> em(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k)
    em[static_cast<std::size_t>(k)] = ScaledComplex::from(1.0).div(fact[static_cast<std::size_t>(k)]);
  const PowerSeries exp_minus_one(std::move(em), "e^z-1");

  const PowerSeries prod = mul_truncated(zp_minus_one, exp_minus_one, order);
  CHECK(max_rel_err(prod, build({Family::fp, 3, order})) <= 1e-14);
}

TEST_CASE("polynomial product evaluates consistently") {
  tdom::Rng rng(25);
  for (int rep = 0; rep < 20; ++rep) {
    std::vector<std::complex<double>> rf(3), rg(2);
    for (auto& r : rf) r = rng.in_disk(2.0);
    for (auto& r : rg) r = rng.in_disk(2.0);
    const PowerSeries f = polynomial_from_roots(rf, 3, "f");
    const PowerSeries g = polynomial_from_roots(rg, 2, "g");
    const PowerSeries fg = mul_truncated(f, g, 5);
    const std::complex<double> z = rng.in_disk(1.5);
    const std::complex<double> lhs = evaluate(fg, z);
    const std::complex<double> rhs = evaluate(f, z) * evaluate(g, z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("tail_bound: exponential series is trusted, geometric past radius 1 is not") {
  const PowerSeries e = PowerSeries::from_complex_coeffs(
      [] {
        std::vector<std::complex<double>> c(101);
        double f = 1.0;
        for (int k = 0; k <= 100; ++k) {
          c[static_cast<std::size_t>(k)] = {1.0 / f, 0.0};
          f *= k + 1.0;
        }
        return c;
      }(),
      "exp100");
  // independent oracle: the true discarded tail sum_{k=101}^inf 20^k / k!
  double log_true_tail = -std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (int k = 300; k >= 101; --k) acc = (acc + 1.0) * (20.0 / k);
  log_true_tail = std::log(acc) + 101 * std::log(20.0) - std::lgamma(102.0);
  const double bound = tail_bound(e, 20.0);
  CHECK(bound < 1e-10);
  CHECK(std::log(bound) >= log_true_tail);

  const PowerSeries g = build({Family::geometric, 1, 50});
  CHECK(tail_bound(g, 1.5) == std::numeric_limits<double>::infinity());
  // the envelope is exact here: the discarded tail is 0.9^51 / 0.1
  CHECK(tail_bound(g, 0.9) == doctest::Approx(std::pow(0.9, 51) / 0.1).epsilon(1e-12));

  const PowerSeries zero = PowerSeries::zero(30, "0");
  CHECK(tail_bound(zero, 123.0) == 0.0);

  // padded polynomials have exact zero tails
  std::vector<std::complex<double>> roots{{0.5, 0.2}, {-1.0, 0.1}};
  CHECK(tail_bound(polynomial_from_roots(roots, 8, "poly"), 5.0) == 0.0);
}

TEST_CASE("polynomial_from_roots expands correctly") {
  std::vector<std::complex<double>> roots{{1.0, 0.0}, {-2.0, 0.0}};
  const PowerSeries p = polynomial_from_roots(roots, 2, "(z-1)(z+2)");
  CHECK(p.coeff(0).to_complex() == std::complex<double>(-2, 0));
  CHECK(p.coeff(1).to_complex() == std::complex<double>(1, 0));
  CHECK(p.coeff(2).to_complex() == std::complex<double>(1, 0));
}

TEST_CASE("series invariants and errors") {
  CHECK_THROWS_AS(PowerSeries(std::vector<ScaledComplex>{}, "empty"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(scale_var(build({Family::geometric, 1, 3}), 0.0), "invalid scale",
                       std::invalid_argument);
  CHECK_THROWS_AS(tail_bound(build({Family::geometric, 1, 3}), -1.0), std::invalid_argument);
  const PowerSeries f = build({Family::geometric, 1, 5});
  CHECK(f.truncated(2).order() == 2);
  CHECK(f.truncated(8).coeff(8).is_zero());
  CHECK(f.truncated(8).coeff(5).to_complex() == std::complex<double>(1, 0));
}
