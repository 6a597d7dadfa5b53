#include "tdom/example_families.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace tdom {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void check_id(const ExampleId& id) {
  if (id.order < 0) throw std::invalid_argument("order must be >= 0");
  const bool needs_p = id.name == Family::fp || id.name == Family::fp_tilde || id.name == Family::exp_power;
  if (needs_p && id.p < 1) throw std::invalid_argument("p must be >= 1");
}

std::string label_for(Family f, int p) {
  switch (f) {
    case Family::geometric: return "geometric";
    case Family::koebe: return "koebe";
    case Family::fp: return "fp(p=" + std::to_string(p) + ")";
    case Family::fp_tilde: return "fp_tilde(p=" + std::to_string(p) + ")";
    case Family::exp_power: return "exp_power(p=" + std::to_string(p) + ")";
  }
  throw std::invalid_argument("unknown family");
}

// k! / (k-p)! = k (k-1) ... (k-p+1) as a scaled value.
ScaledReal falling_factorial(int k, int p) {
  ScaledReal r = ScaledReal::one();
  for (int j = 0; j < p; ++j) r = r.times(static_cast<double>(k - j));
  return r;
}

void append_if_inside(std::vector<std::complex<double>>& out, std::complex<double> z, double radius,
                      int multiplicity = 1) {
  const double mod = std::abs(z);
  if (std::fabs(mod - radius) <= 1e-9) throw std::runtime_error("boundary-ambiguous enumeration");
  if (mod < radius)
    for (int m = 0; m < multiplicity; ++m) out.push_back(z);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::geometric: return "geometric";
    case Family::fp: return "fp";
    case Family::fp_tilde: return "fp_tilde";
    case Family::exp_power: return "exp_power";
    case Family::koebe: return "koebe";
  }
  throw std::invalid_argument("unknown family");
}

Family family_from_name(const std::string& name) {
  if (name == "geometric") return Family::geometric;
  if (name == "fp") return Family::fp;
  if (name == "fp_tilde") return Family::fp_tilde;
  if (name == "exp_power") return Family::exp_power;
  if (name == "koebe") return Family::koebe;
  throw std::invalid_argument("unknown example family: " + name);
}

PowerSeries build(const ExampleId& id) {
  check_id(id);
  const int n = id.order;
  std::vector<ScaledComplex> c(static_cast<std::size_t>(n) + 1);
  const ScaledComplex one = ScaledComplex::from(1.0);

  switch (id.name) {
    case Family::geometric:
      for (auto& a : c) a = one;
      break;

    case Family::koebe:
      for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = ScaledComplex::from(static_cast<double>(k));
      break;

    case Family::fp: {
      // (z^p - 1)(e^z - 1): -1/k! for 1 <= k <= p, then 1/(k-p)! - 1/k!.
      const auto fact = factorial_table(n);
      for (int k = 1; k <= n; ++k) {
        const ScaledComplex inv_k = one.div(fact[static_cast<std::size_t>(k)]);
        if (k <= id.p)
          c[static_cast<std::size_t>(k)] = -inv_k;
        else
          c[static_cast<std::size_t>(k)] = one.div(fact[static_cast<std::size_t>(k - id.p)]) - inv_k;
      }
      break;
    }

    case Family::fp_tilde: {
      // -1 for 1 <= k <= p, then k!/(k-p)! - 1.
      for (int k = 1; k <= n; ++k) {
        if (k <= id.p) {
          c[static_cast<std::size_t>(k)] = -one;
        } else {
          const ScaledReal ff = falling_factorial(k, id.p);
          c[static_cast<std::size_t>(k)] = one.times(ff) - one;
        }
      }
      break;
    }

    case Family::exp_power: {
      // e^(z^p): 1/l! at degree l*p.
      const auto fact = factorial_table(n / id.p);
      for (int l = 0; l * id.p <= n; ++l)
        c[static_cast<std::size_t>(l * id.p)] = one.div(fact[static_cast<std::size_t>(l)]);
      break;
    }
  }
  return {std::move(c), label_for(id.name, id.p)};
}

PowerSeries borel_counterpart(const ExampleId& id, int order) {
  check_id(id);
  switch (id.name) {
    case Family::geometric:
      return build({Family::geometric, 1, order});
    case Family::fp:
    case Family::fp_tilde:
      return build({Family::fp_tilde, id.p, order});
    case Family::exp_power: {
      // hat series: (l*p)!/l! at degree l*p; divergent for any z != 0.
      std::vector<ScaledComplex> c(static_cast<std::size_t>(order) + 1);
      const auto fact = factorial_table(order);
      const ScaledComplex one = ScaledComplex::from(1.0);
      for (int l = 0; l * id.p <= order; ++l) {
        const ScaledReal ratio =
            fact[static_cast<std::size_t>(l * id.p)].div(fact[static_cast<std::size_t>(l)]);
        c[static_cast<std::size_t>(l * id.p)] = one.times(ratio);
      }
      return {std::move(c), "hat(" + label_for(Family::exp_power, id.p) + ") [divergent for z != 0]"};
    }
    case Family::koebe:
      throw std::domain_error("no borel counterpart defined");
  }
  throw std::invalid_argument("unknown family");
}

std::vector<std::complex<double>> analytic_solutions(const ExampleId& id, std::complex<double> c,
                                                     double radius) {
  check_id(id);
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  std::vector<std::complex<double>> out;

  switch (id.name) {
    case Family::geometric: {
      // Solutions of e^z = c: Log c + 2*pi*i*k (principal branch; the k sweep
      // generates the full set, so the branch choice does not matter).
      if (c == std::complex<double>(0.0, 0.0)) throw std::invalid_argument("e^z = 0 has no solutions");
      const std::complex<double> log_c = std::log(c);
      const int k_max = static_cast<int>((radius + std::abs(log_c)) / kTwoPi) + 2;
      for (int k = -k_max; k <= k_max; ++k)
        append_if_inside(out, log_c + std::complex<double>(0.0, kTwoPi * k), radius);
      break;
    }

    case Family::fp: {
      if (c != std::complex<double>(0.0, 0.0))
        throw std::invalid_argument("analytic solutions for fp cover c = 0 only");
      // Roots of the two factors: p-th roots of unity, and 2*pi*i*k. All are
      // simple and the two sets never meet.
      for (int j = 0; j < id.p; ++j)
        append_if_inside(out, std::polar(1.0, kTwoPi * j / id.p), radius);
      const int k_max = static_cast<int>(radius / kTwoPi) + 2;
      for (int k = -k_max; k <= k_max; ++k)
        append_if_inside(out, std::complex<double>(0.0, kTwoPi * k), radius);
      break;
    }

    case Family::exp_power: {
      // e^(z^p) = c via u = z^p, e^u = c: u_k = Log c + 2*pi*i*k, then the p
      // p-th roots of each u_k. u = 0 (c = 1, k = 0) contributes z = 0 with
      // multiplicity p.
      if (c == std::complex<double>(0.0, 0.0)) throw std::invalid_argument("e^(z^p) = 0 has no solutions");
      const std::complex<double> log_c = std::log(c);
      const double u_limit = std::pow(radius, id.p);
      const int k_max = static_cast<int>((u_limit + std::abs(log_c)) / kTwoPi) + 2;
      for (int k = -k_max; k <= k_max; ++k) {
        const std::complex<double> u = log_c + std::complex<double>(0.0, kTwoPi * k);
        if (u == std::complex<double>(0.0, 0.0)) {
          append_if_inside(out, {0.0, 0.0}, radius, id.p);
          continue;
        }
        const double root_mod = std::pow(std::abs(u), 1.0 / id.p);
        const double base_arg = std::arg(u) / id.p;
        for (int l = 0; l < id.p; ++l)
          append_if_inside(out, std::polar(root_mod, base_arg + kTwoPi * l / id.p), radius);
      }
      break;
    }

    case Family::fp_tilde:
    case Family::koebe:
      throw std::domain_error("no analytic solution oracle for this family");
  }
  return out;
}

}  // namespace tdom
