#include "tdom/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "tdom/borel.hpp"
#include "tdom/bounds.hpp"
#include "tdom/domination.hpp"
#include "tdom/example_families.hpp"
#include "tdom/parallel.hpp"
#include "tdom/rng.hpp"
#include "tdom/series_json.hpp"
#include "tdom/valency.hpp"

namespace tdom::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * std::numbers::pi;

CheckResult abs_check(std::string suite, std::string name, double measured, double expected, double tol,
                      std::string detail = {}) {
  CheckResult c{std::move(suite), std::move(name), false, measured, expected, tol, std::move(detail)};
  c.pass = std::fabs(measured - expected) <= tol;
  return c;
}

CheckResult upper_check(std::string suite, std::string name, double measured, double limit,
                        std::string detail = {}) {
  CheckResult c{std::move(suite), std::move(name), false, measured, limit, 0.0, std::move(detail)};
  c.pass = measured <= limit;
  return c;
}

// Zero-padded so tail_bound's fitting window sits on exact zeros.
int padded_order(int degree) { return degree + degree / 3 + 2; }

PowerSeries random_poly_off_circle(Rng& rng, int degree, double margin,
                                   std::vector<std::complex<double>>& roots_out) {
  roots_out.clear();
  while (static_cast<int>(roots_out.size()) < degree) {
    const std::complex<double> r = rng.in_disk(2.0);
    if (std::fabs(std::abs(r) - 1.0) < margin) continue;
    roots_out.push_back(r);
  }
  return polynomial_from_roots(roots_out, padded_order(degree), "random_poly");
}

PowerSeries random_series(Rng& rng, int order, double exp_span) {
  std::vector<ScaledComplex> c(static_cast<std::size_t>(order) + 1);
  for (auto& a : c) {
    const double mod = rng.uniform(1.0, 2.0);
    const double phase = rng.uniform(0.0, kTwoPi);
    a = ScaledComplex{mod * std::cos(phase), mod * std::sin(phase),
                      static_cast<std::int64_t>(rng.uniform(-exp_span, exp_span))};
    a.normalize();
  }
  return {std::move(c), "random_series"};
}

}  // namespace

PowerSeries exponential_series(int order) { return borel(build({Family::geometric, 1, order})); }

PowerSeries shifted_by_constant(const PowerSeries& f, std::complex<double> delta) {
  std::vector<ScaledComplex> c = f.coeffs();
  c[0] = c[0] + ScaledComplex::from(delta);
  return {std::move(c), f.label() + "+c"};
}

double max_relative_coefficient_error(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) return kInf;
  double worst = 0.0;
  for (int k = 0; k <= a.order(); ++k) {
    const ScaledComplex& x = a.coeff(k);
    const ScaledComplex& y = b.coeff(k);
    if (y.is_zero()) {
      if (!x.is_zero()) return kInf;
      continue;
    }
    const ScaledComplex d = x - y;
    if (d.is_zero()) continue;
    worst = std::max(worst, std::exp(d.log_abs() - y.log_abs()));
  }
  return worst;
}

OracleEquivalence winding_oracle_equivalence(std::uint64_t seed, int count, int max_degree,
                                             double margin, int threads) {
  struct Case {
    PowerSeries poly;
    int inside = 0;
  };
  std::vector<Case> cases;
  cases.reserve(static_cast<std::size_t>(count));
  Rng rng(splitmix64(seed ^ 0x706f6c79ULL));
  std::vector<std::complex<double>> roots;
  for (int i = 0; i < count; ++i) {
    const int degree = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_degree));
    PowerSeries poly = random_poly_off_circle(rng, degree, margin, roots);
    int inside = 0;
    for (const auto& r : roots)
      if (std::abs(r) < 1.0) ++inside;
    cases.push_back({std::move(poly), inside});
  }

  ContourSpec spec;
  spec.radius = 1.0;
  spec.initial_samples = 64;

  std::vector<int> ok(cases.size(), 0);
  parallel_for(cases.size(), threads, [&](std::size_t i) {
    try {
      const WindingResult w = count_zeros(cases[i].poly, spec);
      ok[i] = (w.certified && w.count == cases[i].inside) ? 1 : 0;
    } catch (const std::exception&) {
      ok[i] = 0;
    }
  });

  OracleEquivalence res;
  res.total = count;
  for (const int v : ok) res.agreed_certified += v;
  return res;
}

RYEmpirical ry_empirical(std::uint64_t seed, int count) {
  Rng rng(splitmix64(seed ^ 0x7279ULL));
  RYEmpirical res;
  res.total = count;
  for (int i = 0; i < count; ++i) {
    const int degree = 1 + i % 12;
    std::vector<std::complex<double>> roots(static_cast<std::size_t>(degree));
    for (auto& r : roots) r = rng.in_disk(0.2);
    const PowerSeries poly = polynomial_from_roots(roots, padded_order(degree), "ry_poly");
    const double c = minimal_constant(poly, 0, 1.0, poly.order(), true);
    if (static_cast<double>(degree) <= ry_zero_bound(0, c)) ++res.satisfied;
  }
  return res;
}

std::vector<CheckResult> bounds_suite(std::uint64_t seed) {
  const std::string s = "bounds";
  std::vector<CheckResult> out;

  // Pinned pipeline values; the expected numbers come from exact rationals
  // and direct enumeration.
  out.push_back(abs_check(s, "q_bound_p1_R1_A1", q_bound(1, 1.0, 1.0).q, 5.0 + 5.0 * std::log(3.0), 1e-9));
  {
    const EtaScanResult e = eta_scan(1, 4.0);
    out.push_back(abs_check(s, "eta_scan_p1_R4_value", std::exp(e.log_eta), 128.0 / 3.0, 1e-9));
    out.push_back(abs_check(s, "eta_scan_p1_R4_argmax", e.argmax_k, 4.0, 0.0, "tie with k=5 resolves down"));
  }
  {
    const EtaScanResult e = eta_scan(2, 1.0);
    out.push_back(abs_check(s, "eta_scan_p2_R1_value", std::exp(e.log_eta), 4.5, 1e-12));
    out.push_back(abs_check(s, "eta_scan_p2_R1_argmax", e.argmax_k, 3.0, 0.0));
  }
  {
    const EtaScanResult e = eta_scan(1, 1.0);
    out.push_back(abs_check(s, "eta_scan_p1_R1_value", std::exp(e.log_eta), 1.0, 1e-12));
    out.push_back(abs_check(s, "eta_scan_p1_R1_argmax", e.argmax_k, 2.0, 0.0));
  }
  out.push_back(abs_check(s, "nu_p3_R2", log_nu(3, 2.0), std::log(4.0 / 3.0), 1e-12));
  out.push_back(abs_check(s, "nu_p2_R4", log_nu(2, 4.0), std::log(4.0), 1e-12));
  out.push_back(abs_check(s, "ry_N1_C_e_minus_2", ry_zero_bound(1, std::exp(1.0) - 2.0), 10.0, 1e-9));
  out.push_back(abs_check(s, "ry_N0_C0", ry_zero_bound(0, 0.0), 5.0 * std::log(2.0), 1e-12));
  out.push_back(abs_check(s, "ry_N2_C100", ry_zero_bound(2, 100.0), 10.0 + 5.0 * std::log(102.0), 1e-12));
  {
    const EtaClosedBounds b = eta_closed_bounds(1, 1.0);
    out.push_back(abs_check(s, "eta1_closed_p1_R1", std::exp(b.log_eta1), 1.5, 1e-12));
    out.push_back(abs_check(s, "eta2_closed_p1_R1", std::exp(b.log_eta2), 9.0 * std::exp(1.0), 1e-10));
    const EtaClosedBounds b2 = eta_closed_bounds(1, 2.0);
    out.push_back(abs_check(s, "eta1_closed_p1_R2", std::exp(b2.log_eta1), 12.0, 1e-11));
    out.push_back(abs_check(s, "eta2_closed_p1_R2", std::exp(b2.log_eta2), 18.0 * std::exp(2.0), 1e-9));
  }
  out.push_back(abs_check(s, "q_bound_p2_R1_A1", q_bound(2, 1.0, 1.0).q, 10.0 + 5.0 * std::log(11.0), 1e-9));

  // Proof chain and headline envelope over the (p, R) grid.
  {
    const double rs[] = {1, 2, 5, 10, 20, 50, 100};
    double min_margin = kInf, min_ratio = kInf, max_ratio = 0.0;
    for (int p = 1; p <= 30; ++p) {
      for (const double r : rs) {
        const BoundReport b = q_bound(p, r, 1.0);
        min_margin = std::min(min_margin, std::max(b.log_eta1_bound, b.log_eta2_bound) - b.log_eta);
        const double ratio = b.q / (p * (1.0 + std::log(static_cast<double>(p)) + std::log(r)) + r);
        min_ratio = std::min(min_ratio, ratio);
        max_ratio = std::max(max_ratio, ratio);
      }
    }
    out.push_back(upper_check(s, "proof_chain_eta_le_closed", -min_margin, 1e-9,
                              "max over grid of log_eta - max(log_eta1, log_eta2)"));
    out.push_back(upper_check(s, "envelope_ratio_max", max_ratio, 20.0, "q / (p(1+ln p+ln R)+R)"));
    CheckResult lo{s, "envelope_ratio_positive", min_ratio > 0.0, min_ratio, 0.0, 0.0, "grid minimum"};
    out.push_back(lo);
  }

  // ry_zero_bound is nondecreasing in N and C.
  {
    Rng rng(splitmix64(seed ^ 0x6d6f6eULL));
    int violations = 0;
    for (int i = 0; i < 200; ++i) {
      const int n = static_cast<int>(rng.next() % 20);
      const double c = rng.uniform(0.0, 1e6);
      const double dc = rng.uniform(0.0, 1e5);
      if (ry_zero_bound(n + 1, c) < ry_zero_bound(n, c)) ++violations;
      if (ry_zero_bound(n, c + dc) < ry_zero_bound(n, c)) ++violations;
    }
    out.push_back(abs_check(s, "ry_monotone", violations, 0.0, 0.0, "200 random (N, C) pairs"));
  }

  // Head inequality: max_i |a_i| R^i / i! >= nu * max_i |a_i|.
  {
    Rng rng(splitmix64(seed ^ 0x686561ULL));
    const double rs[] = {1, 2, 5, 10, 20, 50, 100};
    int violations = 0, total = 0;
    for (int p = 1; p <= 30; ++p) {
      for (const double r : rs) {
        const double lnu = log_nu(p, r);
        const double log_r = std::log(r);
        for (int rep = 0; rep < 5; ++rep) {
          double lhs = -kInf, head = -kInf;
          for (int i = 1; i <= p; ++i) {
            const double la = rng.uniform(-14.0, 14.0);
            lhs = std::max(lhs, la + i * log_r - std::lgamma(i + 1.0));
            head = std::max(head, la);
          }
          ++total;
          if (lhs < lnu + head - 1e-9) ++violations;
        }
      }
    }
    out.push_back(abs_check(s, "head_inequality_nu", violations, 0.0, 0.0,
                            std::to_string(total) + " random head vectors on the grid"));
  }

  // Domination transfer: a shape-saturating sequence stays dominated on the
  // Borel side with constant A*eta/nu.
  {
    Rng rng(splitmix64(seed ^ 0x747261ULL));
    int violations = 0;
    for (int rep = 0; rep < 200; ++rep) {
      const int p = 1 + static_cast<int>(rng.next() % 8);
      const double r = rng.uniform(1.0, 50.0);
      const double a = rng.uniform(0.5, 4.0);
      const double log_r = std::log(r);
      std::vector<double> head_logs(static_cast<std::size_t>(p));
      double head = -kInf, borel_head = -kInf;
      for (int i = 1; i <= p; ++i) {
        head_logs[static_cast<std::size_t>(i - 1)] = rng.uniform(-2.0, 2.0);
        head = std::max(head, head_logs[static_cast<std::size_t>(i - 1)]);
        borel_head = std::max(borel_head, head_logs[static_cast<std::size_t>(i - 1)] + i * log_r -
                                              std::lgamma(i + 1.0));
      }
      const double log_c = std::log(a) + eta_scan(p, r).log_eta - log_nu(p, r);
      for (int k = p + 1; k <= 3 * p + 60; ++k) {
        // |a_k| saturates A k^(2p-1) max|a_i| exactly
        const double la = std::log(a) + (2.0 * p - 1.0) * std::log(static_cast<double>(k)) + head;
        const double lhs = la + k * log_r - std::lgamma(k + 1.0);
        if (lhs > log_c + borel_head + 1e-9) ++violations;
      }
    }
    out.push_back(abs_check(s, "domination_transfer", violations, 0.0, 0.0, "200 saturating sequences"));
  }

  return out;
}

std::vector<CheckResult> domination_suite(std::uint64_t seed) {
  const std::string s = "domination";
  std::vector<CheckResult> out;

  for (int p = 1; p <= 6; ++p) {
    const PowerSeries f = build({Family::fp_tilde, p, 400});
    const double a = minimal_power_factor(f, p, 0.999, static_cast<double>(p), 400, false);
    out.push_back(upper_check(s, "fp_tilde_power_fit_p" + std::to_string(p), a, 1.1, "m = p, R = 0.999"));
  }
  {
    const PowerSeries k = build({Family::koebe, 1, 300});
    out.push_back(abs_check(s, "koebe_power_fit", minimal_power_factor(k, 1, 0.99, 1.0, 300, false), 0.99,
                            1e-12, "saturated at k = 2"));
  }
  {
    const PowerSeries g = build({Family::geometric, 1, 100});
    out.push_back(abs_check(s, "geometric_min_constant_R_half", minimal_constant(g, 0, 0.5, 100, true), 0.5,
                            1e-15));
    DominationProfile prof{0, 0.5, DominationShape::constant(0.99 * 0.5), true};
    const DominationReport rep = check_domination(g, prof, 100);
    out.push_back(abs_check(s, "geometric_below_minimal_fails", rep.holds ? 1.0 : 0.0, 0.0, 0.0,
                            "worst_k=" + std::to_string(rep.worst_k)));
    out.push_back(abs_check(s, "geometric_below_minimal_worst_k", rep.worst_k, 1.0, 0.0));
  }
  {
    std::vector<ScaledComplex> mono(51);
    mono[1] = ScaledComplex::from(1.0);
    const PowerSeries z({mono.begin(), mono.end()}, "z");
    out.push_back(abs_check(s, "monomial_min_constant_zero", minimal_constant(z, 1, 1.0, 50, false), 0.0, 0.0));
    out.push_back(abs_check(s, "monomial_power_factor_zero", minimal_power_factor(z, 1, 1.0, 1.0, 50, false),
                            0.0, 0.0));
  }

  // Scaling invariance: fitting at (N, R) equals fitting the rescaled series
  // at R = 1.
  {
    Rng rng(splitmix64(seed ^ 0x736361ULL));
    double worst = 0.0;
    for (int rep = 0; rep < 100; ++rep) {
      const int order = 40 + static_cast<int>(rng.next() % 40);
      const PowerSeries f = random_series(rng, order, 300.0);
      const int n = static_cast<int>(rng.next() % 4);
      const double r = rng.uniform(0.25, 4.0);
      const double m = rng.uniform(0.0, 3.0);
      const PowerSeries g = scale_var(f, r);
      const double c1 = minimal_constant(f, n, r, order, true);
      const double c2 = minimal_constant(g, n, 1.0, order, true);
      const double a1 = minimal_power_factor(f, n, r, m, order, true);
      const double a2 = minimal_power_factor(g, n, 1.0, m, order, true);
      worst = std::max(worst, std::fabs(c1 - c2) / std::max(c1, c2));
      worst = std::max(worst, std::fabs(a1 - a2) / std::max(a1, a2));
    }
    out.push_back(upper_check(s, "scaling_invariance", worst, 1e-12, "100 random series"));
  }

  // Monotone in N, nondecreasing in k_max; consistency of the fitted
  // profiles; a_0 exclusion is a no-op when a_0 = 0.
  {
    Rng rng(splitmix64(seed ^ 0x6d6f6e32ULL));
    int violations = 0;
    double worst_ratio_err = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
      const int order = 30 + static_cast<int>(rng.next() % 30);
      PowerSeries f = random_series(rng, order, 200.0);
      const double r = rng.uniform(0.5, 2.0);
      const int n = 1 + static_cast<int>(rng.next() % 3);
      const double c_small = minimal_constant(f, n, r, order, true);
      const double c_big_n = minimal_constant(f, n + 2, r, order, true);
      if (c_big_n > c_small * (1 + 1e-12)) ++violations;
      const double c_kmax_lo = minimal_constant(f, n, r, order - 10, true);
      if (c_kmax_lo > c_small * (1 + 1e-12)) ++violations;

      DominationProfile prof{n, r, DominationShape::constant(c_small), true};
      const DominationReport rep_c = check_domination(f, prof, order);
      if (!rep_c.holds) ++violations;
      worst_ratio_err = std::max(worst_ratio_err, std::fabs(rep_c.worst_ratio - 1.0));

      const double m = rng.uniform(0.5, 2.5);
      DominationProfile prof_p{n, r, DominationShape::power(minimal_power_factor(f, n, r, m, order, true), m),
                               true};
      if (!check_domination(f, prof_p, order).holds) ++violations;

      // zero out a_0: include/exclude must agree exactly
      std::vector<ScaledComplex> cs = f.coeffs();
      cs[0] = ScaledComplex::zero();
      const PowerSeries g(std::move(cs), "g");
      if (minimal_constant(g, n, r, order, true) != minimal_constant(g, n, r, order, false)) ++violations;
    }
    out.push_back(abs_check(s, "monotone_and_consistent", violations, 0.0, 0.0, "50 random series"));
    out.push_back(upper_check(s, "minimal_profile_ratio_is_one", worst_ratio_err, 1e-12));
  }

  // Zero-padded polynomial dominated vacuously beyond its degree.
  {
    std::vector<std::complex<double>> roots{{0.3, 0.1}, {-0.2, 0.4}};
    const PowerSeries poly = polynomial_from_roots(roots, 30, "pad");
    DominationProfile prof{2, 1.0, DominationShape::constant(1.0), true};
    const DominationReport rep = check_domination(poly, prof, 30);
    const bool good = rep.holds && rep.worst_ratio == 0.0 && rep.worst_k == 3;
    out.push_back(abs_check(s, "zero_padded_vacuous", good ? 1.0 : 0.0, 1.0, 0.0));
  }

  return out;
}

std::vector<CheckResult> valency_suite(std::uint64_t seed, int threads) {
  const std::string s = "valency";
  std::vector<CheckResult> out;

  {
    const OracleEquivalence oe = winding_oracle_equivalence(seed, 500, 12, 0.05, threads);
    out.push_back(abs_check(s, "winding_oracle_equivalence", oe.agreed_certified, oe.total, 0.0,
                            "500 random polynomials, radius 1"));
  }

  // Zero counts of e^z - 1: the enumeration oracle first, then the winding
  // run must reproduce it.
  {
    const int expected_counts[] = {1, 3, 7};
    const double radii[] = {5.0, 10.0, 20.0};
    const PowerSeries e = exponential_series(100);
    const PowerSeries em1 = shifted_by_constant(e, {-1.0, 0.0});
    for (int i = 0; i < 3; ++i) {
      const auto oracle = analytic_solutions({Family::geometric, 1, 0}, {1.0, 0.0}, radii[i]);
      ContourSpec spec;
      spec.radius = radii[i];
      const WindingResult w = count_zeros(em1, spec);
      const bool good = static_cast<int>(oracle.size()) == expected_counts[i] &&
                        w.count == expected_counts[i] && w.certified;
      out.push_back(abs_check(s, "exp_minus_one_zeros_r" + std::to_string(static_cast<int>(radii[i])),
                              good ? w.count : -1, expected_counts[i], 0.0,
                              "oracle size " + std::to_string(oracle.size())));
    }
  }
  {
    const auto oracle = analytic_solutions({Family::fp, 3, 0}, {0.0, 0.0}, 7.0);
    ContourSpec spec;
    spec.radius = 7.0;
    const WindingResult w = count_zeros(build({Family::fp, 3, 120}), spec);
    const bool good = oracle.size() == 6 && w.count == 6 && w.certified;
    out.push_back(abs_check(s, "fp3_zeros_r7", good ? w.count : -1, 6.0, 0.0));
  }
  {
    const auto oracle = analytic_solutions({Family::exp_power, 2, 0}, {1.0, 0.0}, 3.0);
    ContourSpec spec;
    spec.radius = 3.0;
    const PowerSeries hm1 = shifted_by_constant(build({Family::exp_power, 2, 100}), {-1.0, 0.0});
    const WindingResult w = count_zeros(hm1, spec);
    const bool good = oracle.size() == 6 && w.count == 6 && w.certified;
    out.push_back(abs_check(s, "exp_power2_minus_one_zeros_r3", good ? w.count : -1, 6.0, 0.0,
                            "double zero at 0 plus four simple"));
  }

  // Univalence of the geometric series on a subdisk.
  {
    ContourSpec spec;
    spec.radius = 0.9;
    spec.min_modulus = 1e-7;  // explicit guard: the order-200 tail (~6e-9) sits near the auto guard
    const ValencyReport rep =
        valency_lower_bound(build({Family::geometric, 1, 200}), spec, 16, seed, threads);
    out.push_back(abs_check(s, "geometric_univalent_r0.9", rep.max_count, 1.0, 0.0,
                            std::to_string(rep.targets.size()) + " targets"));
  }

  // Monomial valency; every 0 < |c| < 1 has exactly five preimages.
  {
    std::vector<ScaledComplex> mono(9);
    mono[5] = ScaledComplex::from(1.0);
    const PowerSeries z5({mono.begin(), mono.end()}, "z^5");
    ContourSpec spec;
    spec.radius = 1.0;
    const ValencyReport rep = valency_lower_bound(z5, spec, 8, seed, threads);
    out.push_back(abs_check(s, "monomial_z5_valency", rep.max_count, 5.0, 0.0));
  }

  // Valency of the exponential series at radius 7, cross-checked per target
  // against the enumeration oracle.
  {
    ContourSpec spec;
    spec.radius = 7.0;
    const PowerSeries e = exponential_series(150);
    const ValencyReport rep = valency_lower_bound(e, spec, 16, seed, threads);
    int mismatches = 0;
    for (const auto& t : rep.targets) {
      if (!t.certified) continue;
      const auto oracle = analytic_solutions({Family::geometric, 1, 0}, t.c, 7.0);
      if (static_cast<int>(oracle.size()) != t.count) ++mismatches;
    }
    out.push_back(abs_check(s, "exp_valency_r7_max", rep.max_count, 3.0, 0.0));
    out.push_back(abs_check(s, "exp_valency_r7_oracle_agreement", mismatches, 0.0, 0.0,
                            "per-target enumeration"));

    // Monotone under grid refinement (fixed seed).
    ContourSpec spec_small = spec;
    const int m8 = valency_lower_bound(e, spec_small, 8, seed, threads).max_count;
    const int m12 = valency_lower_bound(e, spec_small, 12, seed, threads).max_count;
    const bool monotone = m8 <= m12 && m12 <= rep.max_count;
    out.push_back(abs_check(s, "grid_refinement_monotone", monotone ? 1.0 : 0.0, 1.0, 0.0,
                            "grids 8, 12, 16"));
  }

  // Winding additivity over products and rotation invariance.
  {
    Rng rng(splitmix64(seed ^ 0x616464ULL));
    int violations = 0;
    std::vector<std::complex<double>> roots_f, roots_g;
    for (int rep = 0; rep < 20; ++rep) {
      const int df = 1 + static_cast<int>(rng.next() % 5);
      const int dg = 1 + static_cast<int>(rng.next() % 5);
      const PowerSeries f = random_poly_off_circle(rng, df, 0.05, roots_f);
      const PowerSeries g = random_poly_off_circle(rng, dg, 0.05, roots_g);
      const PowerSeries prod = mul_truncated(f, g, padded_order(df + dg));
      ContourSpec spec;
      spec.radius = 1.0;
      spec.initial_samples = 64;
      const int cf = count_zeros(f, spec).count;
      const int cg = count_zeros(g, spec).count;
      if (count_zeros(prod, spec).count != cf + cg) ++violations;

      // rotate f's coefficients by e^(i k theta): counts are invariant
      const double theta = rng.uniform(0.0, kTwoPi);
      std::vector<ScaledComplex> rot(f.coeffs().size());
      for (int k = 0; k <= f.order(); ++k)
        rot[static_cast<std::size_t>(k)] = f.coeff(k).times(std::polar(1.0, k * theta));
      const PowerSeries fr(std::move(rot), "rotated");
      if (count_zeros(fr, spec).count != cf) ++violations;
    }
    out.push_back(abs_check(s, "additivity_and_rotation", violations, 0.0, 0.0, "20 random pairs"));
  }

  // A nonzero constant series has no zeros and certifies trivially.
  {
    std::vector<ScaledComplex> c{ScaledComplex::from(5.0)};
    const PowerSeries konst({c.begin(), c.end()}, "const5");
    ContourSpec spec;
    spec.radius = 2.0;
    spec.initial_samples = 64;
    const WindingResult w = count_zeros(konst, spec);
    out.push_back(abs_check(s, "constant_series_no_zeros", w.certified ? w.count : -1, 0.0, 0.0));
  }

  return out;
}

std::vector<CheckResult> borel_suite(std::uint64_t seed) {
  const std::string s = "borel";
  std::vector<CheckResult> out;

  // borel(all-ones) must equal the exponential coefficient sequence exactly:
  // both sides divide 1 by the same cumulative factorial scales.
  {
    const PowerSeries ones = build({Family::geometric, 1, 120});
    const PowerSeries b = borel(ones);
    const auto fact = factorial_table(120);
    const ScaledComplex one = ScaledComplex::from(1.0);
    int mismatches = 0;
    for (int k = 0; k <= 120; ++k)
      if (!(b.coeff(k) == one.div(fact[static_cast<std::size_t>(k)]))) ++mismatches;
    out.push_back(abs_check(s, "borel_ones_is_exponential_exact", mismatches, 0.0, 0.0));
  }

  // borel(fp_tilde(p)) == fp(p) to 1e-14 relative, orders up to 200.
  {
    double worst = 0.0;
    for (int p = 1; p <= 6; ++p) {
      const PowerSeries lhs = borel(build({Family::fp_tilde, p, 200}));
      const PowerSeries rhs = build({Family::fp, p, 200});
      worst = std::max(worst, max_relative_coefficient_error(lhs, rhs));
    }
    out.push_back(upper_check(s, "fp_pair_rel_error_p1_6", worst, 1e-14, "order 200"));
  }

  // Representation-level inverse: <= 1 ulp per coefficient.
  {
    Rng rng(splitmix64(seed ^ 0x756c70ULL));
    double worst = 0.0;
    std::vector<PowerSeries> batch;
    batch.push_back(build({Family::geometric, 1, 150}));
    batch.push_back(build({Family::fp, 3, 100}));
    batch.push_back(build({Family::exp_power, 2, 60}));
    batch.push_back(build({Family::koebe, 1, 80}));
    for (int rep = 0; rep < 20; ++rep) batch.push_back(random_series(rng, 100, 250.0));
    for (const PowerSeries& f : batch)
      worst = std::max(worst, max_relative_coefficient_error(inverse_borel_coeff(borel(f)), f));
    out.push_back(upper_check(s, "inverse_roundtrip_ulp", worst / 0x1.0p-52, 1.0, "in ulps"));
  }

  // Linearity.
  {
    Rng rng(splitmix64(seed ^ 0x6c696eULL));
    double worst = 0.0;
    for (int rep = 0; rep < 10; ++rep) {
      const PowerSeries f = random_series(rng, 60, 100.0);
      const PowerSeries g = random_series(rng, 60, 100.0);
      const std::complex<double> alpha = rng.in_annulus(0.5, 2.0);
      const std::complex<double> beta = rng.in_annulus(0.5, 2.0);
      std::vector<ScaledComplex> combo(61);
      for (int k = 0; k <= 60; ++k)
        combo[static_cast<std::size_t>(k)] = f.coeff(k).times(alpha) + g.coeff(k).times(beta);
      const PowerSeries lhs = borel(PowerSeries(std::move(combo), "combo"));
      const PowerSeries bf = borel(f);
      const PowerSeries bg = borel(g);
      std::vector<ScaledComplex> rhs(61);
      for (int k = 0; k <= 60; ++k)
        rhs[static_cast<std::size_t>(k)] = bf.coeff(k).times(alpha) + bg.coeff(k).times(beta);
      worst = std::max(worst,
                       max_relative_coefficient_error(lhs, PowerSeries(std::move(rhs), "rhs")));
    }
    out.push_back(upper_check(s, "linearity", worst, 1e-15, "10 random pairs"));
  }

  // Inverse integral reproduces 1/(1-z).
  {
    const PowerSeries e = exponential_series(200);
    const std::complex<double> zs[] = {{0.0, 0.0}, {0.5, 0.0}, {-0.5, 0.0}, {0.25, 0.25}};
    double worst = 0.0;
    for (const auto z : zs) {
      QuadratureSpec spec;
      spec.node_count = 64;
      spec.cutoff_T = 40.0;
      spec.trust_radius = std::max(std::abs(z) * spec.cutoff_T, 1.0);
      const IntegralResult r = inverse_borel_integral(e, z, spec);
      worst = std::max(worst, std::abs(r.value - 1.0 / (1.0 - z)));
    }
    out.push_back(upper_check(s, "integral_reproduces_geometric", worst, 1e-8, "4 sample points"));
  }

  // The reported error estimate covers the actual deviation on a z-grid.
  {
    const PowerSeries geo = build({Family::geometric, 1, 200});
    const PowerSeries e = borel(geo);
    int violations = 0;
    double worst_quotient = 0.0;
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        const std::complex<double> z = std::polar(0.15 * (i + 1), kTwoPi * j / 4.0);
        QuadratureSpec spec;
        spec.node_count = 64;
        spec.cutoff_T = 40.0;
        spec.trust_radius = std::max(std::abs(z) * spec.cutoff_T, 1.0);
        const IntegralResult r = inverse_borel_integral(e, z, spec);
        const double err = std::abs(r.value - evaluate(geo, z));
        worst_quotient = std::max(worst_quotient, err / r.error_estimate);
        if (err > r.error_estimate) ++violations;
      }
    }
    out.push_back(abs_check(s, "integral_within_error_estimate", violations, 0.0, 0.0,
                            "16-point grid, |z| <= 0.6"));
  }

  return out;
}

std::vector<CheckResult> run_suites(const std::string& which, std::uint64_t seed, int threads) {
  std::vector<CheckResult> out;
  const auto add = [&](std::vector<CheckResult> v) {
    out.insert(out.end(), std::make_move_iterator(v.begin()), std::make_move_iterator(v.end()));
  };
  if (which == "all" || which == "bounds") add(bounds_suite(seed));
  if (which == "all" || which == "domination") add(domination_suite(seed));
  if (which == "all" || which == "valency") add(valency_suite(seed, threads));
  if (which == "all" || which == "borel") add(borel_suite(seed));
  if (out.empty()) throw std::invalid_argument("unknown suite: " + which);
  return out;
}

void write_csv(std::ostream& out, const std::vector<CheckResult>& checks) {
  out << "suite,name,pass,measured,expected,tolerance,detail\n";
  for (const auto& c : checks) {
    std::string detail = c.detail;
    for (auto& ch : detail)
      if (ch == ',') ch = ';';
    out << c.suite << "," << c.name << "," << (c.pass ? 1 : 0) << "," << format_real17(c.measured) << ","
        << format_real17(c.expected) << "," << format_real17(c.tolerance) << "," << detail << "\n";
  }
}

}  // namespace tdom::verify
