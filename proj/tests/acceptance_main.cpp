// Acceptance suite: one pass/fail line per criterion, with timing.
// argv[1] = path to the tdom binary (used by the determinism criterion).

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tdom/borel.hpp"
#include "tdom/bounds.hpp"
#include "tdom/domination.hpp"
#include "tdom/example_families.hpp"
#include "tdom/parallel.hpp"
#include "tdom/rng.hpp"
#include "tdom/valency.hpp"
#include "tdom/verify.hpp"

using namespace tdom;

namespace {

int criteria_failed = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

void report(int criterion, const std::string& what, bool pass, double seconds, double budget) {
  const bool in_budget = seconds < budget;
  if (!pass || !in_budget) ++criteria_failed;
  std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)\n",
              pass && in_budget ? "PASS" : "FAIL", criterion, what.c_str(), seconds, budget);
}

std::string run_capture(const std::string& cmd, int& exit_code) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  if (!pipe) {
    exit_code = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  const std::string tdom_bin = argc > 1 ? argv[1] : "";
  const int threads = default_thread_count();

  // 1. Bound pipeline values against exact-rational / enumeration oracles.
  {
    Timer t;
    bool pass = true;
    pass = pass && std::fabs(q_bound(1, 1.0, 1.0).q - (5.0 + 5.0 * std::log(3.0))) <= 1e-9;
    const EtaScanResult eta = eta_scan(1, 4.0);
    pass = pass && std::fabs(std::exp(eta.log_eta) - 128.0 / 3.0) <= 1e-9 && eta.argmax_k == 4;
    pass = pass && std::fabs(log_nu(3, 2.0) - std::log(4.0 / 3.0)) <= 1e-12;
    pass = pass && std::fabs(ry_zero_bound(1, std::exp(1.0) - 2.0) - 10.0) <= 1e-9;
    report(1, "bound pipeline values", pass, t.seconds(), 1.0);
  }

  // 2. Proof-chain envelope over p in 1..30, R in {1,2,5,10,20,50,100}.
  {
    Timer t;
    bool pass = true;
    const double rs[] = {1, 2, 5, 10, 20, 50, 100};
    for (int p = 1; p <= 30 && pass; ++p) {
      for (const double r : rs) {
        const BoundReport b = q_bound(p, r, 1.0);
        if (b.log_eta > std::max(b.log_eta1_bound, b.log_eta2_bound) + 1e-9) pass = false;
        const double ratio = b.q / (p * (1.0 + std::log(static_cast<double>(p)) + std::log(r)) + r);
        if (!(ratio > 0.0 && ratio <= 20.0)) pass = false;
      }
    }
    report(2, "proof-chain envelope on the (p,R) grid", pass, t.seconds(), 5.0);
  }

  // 3. Winding oracle equivalence over 500 seeded random polynomials.
  {
    Timer t;
    const verify::OracleEquivalence oe = verify::winding_oracle_equivalence(0, 500, 12, 0.05, threads);
    report(3, "winding oracle equivalence, " + std::to_string(oe.agreed_certified) + "/500 certified agree",
           oe.agreed_certified == 500 && oe.total == 500, t.seconds(), 30.0);
  }

  // 4. Example-family zero counts and univalence, oracle first.
  {
    Timer t;
    bool pass = true;
    const PowerSeries em1 = verify::shifted_by_constant(verify::exponential_series(100), {-1.0, 0.0});
    const int expected[] = {1, 3, 7};
    const double radii[] = {5.0, 10.0, 20.0};
    for (int i = 0; i < 3; ++i) {
      const auto oracle = analytic_solutions({Family::geometric, 1, 0}, {1.0, 0.0}, radii[i]);
      if (static_cast<int>(oracle.size()) != expected[i]) pass = false;
      ContourSpec spec;
      spec.radius = radii[i];
      const WindingResult w = count_zeros(em1, spec);
      if (!(w.certified && w.count == expected[i])) pass = false;
    }
    {
      const auto oracle = analytic_solutions({Family::fp, 3, 0}, {0.0, 0.0}, 7.0);
      ContourSpec spec;
      spec.radius = 7.0;
      const WindingResult w = count_zeros(build({Family::fp, 3, 120}), spec);
      if (!(oracle.size() == 6 && w.certified && w.count == 6)) pass = false;
    }
    {
      const auto oracle = analytic_solutions({Family::exp_power, 2, 0}, {1.0, 0.0}, 3.0);
      ContourSpec spec;
      spec.radius = 3.0;
      const PowerSeries hm1 = verify::shifted_by_constant(build({Family::exp_power, 2, 100}), {-1.0, 0.0});
      const WindingResult w = count_zeros(hm1, spec);
      if (!(oracle.size() == 6 && w.certified && w.count == 6)) pass = false;
    }
    {
      ContourSpec spec;
      spec.radius = 0.9;
      spec.min_modulus = 1e-7;
      const ValencyReport rep =
          valency_lower_bound(build({Family::geometric, 1, 200}), spec, 16, 0, threads);
      if (rep.max_count != 1) pass = false;
    }
    report(4, "example-family zero counts and univalence", pass, t.seconds(), 60.0);
  }

  // 5. Borel structure: exact transform identity, fp pairs, inverse integral.
  {
    Timer t;
    bool pass = true;
    {
      const PowerSeries b = borel(build({Family::geometric, 1, 200}));
      const auto fact = factorial_table(200);
      const ScaledComplex one = ScaledComplex::from(1.0);
      for (int k = 0; k <= 200; ++k)
        if (!(b.coeff(k) == one.div(fact[static_cast<std::size_t>(k)]))) pass = false;
    }
    for (int p = 1; p <= 6; ++p) {
      const double err = verify::max_relative_coefficient_error(borel(build({Family::fp_tilde, p, 200})),
                                                                build({Family::fp, p, 200}));
      if (!(err <= 1e-14)) pass = false;
    }
    {
      const PowerSeries e = verify::exponential_series(200);
      const std::complex<double> zs[] = {{0.0, 0.0}, {0.5, 0.0}, {-0.5, 0.0}, {0.25, 0.25}};
      for (const auto z : zs) {
        QuadratureSpec spec;
        spec.node_count = 64;
        spec.cutoff_T = 40.0;
        spec.trust_radius = std::max(std::abs(z) * spec.cutoff_T, 1.0);
        const IntegralResult r = inverse_borel_integral(e, z, spec);
        if (!(std::abs(r.value - 1.0 / (1.0 - z)) <= 1e-8)) pass = false;
      }
    }
    report(5, "borel transform structure", pass, t.seconds(), 5.0);
  }

  // 6. Domination fits: fp_tilde power shape, koebe, scaling invariance.
  {
    Timer t;
    bool pass = true;
    for (int p = 1; p <= 6; ++p) {
      const PowerSeries f = build({Family::fp_tilde, p, 400});
      if (!(minimal_power_factor(f, p, 0.999, static_cast<double>(p), 400, false) <= 1.1)) pass = false;
    }
    {
      const PowerSeries k = build({Family::koebe, 1, 300});
      if (!(std::fabs(minimal_power_factor(k, 1, 0.99, 1.0, 300, false) - 0.99) <= 1e-12)) pass = false;
    }
    {
      Rng rng(splitmix64(99));
      for (int rep = 0; rep < 100 && pass; ++rep) {
        const int order = 40 + static_cast<int>(rng.next() % 40);
        std::vector<ScaledComplex> cs(static_cast<std::size_t>(order) + 1);
        for (auto& a : cs) {
          const double mod = rng.uniform(1.0, 2.0);
          const double phase = rng.uniform(0.0, 6.28);
          a = ScaledComplex{mod * std::cos(phase), mod * std::sin(phase),
                            static_cast<std::int64_t>(rng.uniform(-300.0, 300.0))};
          a.normalize();
        }
        const PowerSeries f(std::move(cs), "random");
        const int n = static_cast<int>(rng.next() % 4);
        const double r = rng.uniform(0.25, 4.0);
        const double c1 = minimal_constant(f, n, r, order, true);
        const double c2 = minimal_constant(scale_var(f, r), n, 1.0, order, true);
        if (!(std::fabs(c1 - c2) <= 1e-12 * std::max(c1, c2))) pass = false;
      }
    }
    report(6, "domination fits and scaling invariance", pass, t.seconds(), 10.0);
  }

  // 7. Zero-count bound check on 200 seeded polynomials rooted in D_0.2.
  {
    Timer t;
    const verify::RYEmpirical ry = verify::ry_empirical(0, 200);
    report(7, "zero-count bound holds on " + std::to_string(ry.satisfied) + "/200 polynomials",
           ry.satisfied == 200 && ry.total == 200, t.seconds(), 10.0);
  }

  // 8. Determinism: verify --suite all --seed 0 twice, byte-identical.
  {
    Timer t;
    bool pass = false;
    if (!tdom_bin.empty()) {
      const std::string csv1 = "tdom_acc_run1.csv", csv2 = "tdom_acc_run2.csv";
      int ec1 = 0, ec2 = 0;
      const std::string out1 =
          run_capture(tdom_bin + " verify --suite all --seed 0 --report " + csv1, ec1);
      const std::string out2 =
          run_capture(tdom_bin + " verify --suite all --seed 0 --report " + csv2, ec2);
      pass = ec1 == 0 && ec2 == 0 && !out1.empty() && out1 == out2 &&
             read_file(csv1) == read_file(csv2) && !read_file(csv1).empty();
      std::remove(csv1.c_str());
      std::remove(csv2.c_str());
    } else {
      std::printf("  (no tdom binary path given)\n");
    }
    report(8, "verify --suite all --seed 0 is byte-identical across runs", pass, t.seconds(), 120.0);
  }

  std::printf("%s\n", criteria_failed == 0 ? "acceptance: all criteria passed"
                                           : "acceptance: CRITERIA FAILED");
  return criteria_failed == 0 ? 0 : 1;
}
