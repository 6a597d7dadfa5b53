// tdom: Taylor domination, Borel transform, and valency toolkit.
//
// Every subcommand prints a deterministic JSON report to stdout (CSV where
// noted); identical inputs and seed give byte-identical output.

#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tdom/borel.hpp"
#include "tdom/bounds.hpp"
#include "tdom/domination.hpp"
#include "tdom/example_families.hpp"
#include "tdom/parallel.hpp"
#include "tdom/power_series.hpp"
#include "tdom/run_report.hpp"
#include "tdom/series_json.hpp"
#include "tdom/valency.hpp"
#include "tdom/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitContract = 2;
constexpr int kExitUncertified = 3;
constexpr int kSchemaVersion = 1;

std::complex<double> parse_complex(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw CLI::ValidationError(flag, "expected RE,IM");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError(flag, "expected RE,IM");
  }
}

tdom::OrderedJson new_report(const std::string& command) {
  tdom::OrderedJson rep;
  rep["command"] = command;
  rep["inputs"] = tdom::OrderedJson::object();
  rep["outputs"] = tdom::OrderedJson::object();
  rep["warnings"] = tdom::OrderedJson::array();
  rep["schema_version"] = kSchemaVersion;
  return rep;
}

void print_report(const tdom::OrderedJson& rep) { std::cout << tdom::dump_report_json(rep); }

struct SeriesArgs {
  std::string series_file;
  std::string example;
  int p = 1;
  int order = -1;
};

void add_series_options(CLI::App* cmd, SeriesArgs& args, bool order_required) {
  cmd->add_option("--series", args.series_file, "series JSON file");
  cmd->add_option("--example", args.example, "built-in family: geometric|fp|fp_tilde|exp_power|koebe");
  cmd->add_option("--p", args.p, "family parameter p");
  auto* order = cmd->add_option("--order", args.order, "truncation order");
  if (order_required) order->required();
}

tdom::PowerSeries load_series(const SeriesArgs& args) {
  if (args.series_file.empty() == args.example.empty())
    throw CLI::ValidationError("--series/--example", "exactly one input source required");
  if (!args.series_file.empty()) {
    tdom::PowerSeries f = tdom::read_series_file(args.series_file);
    return args.order >= 0 ? f.truncated(args.order) : f;
  }
  if (args.order < 0) throw CLI::ValidationError("--order", "required with --example");
  return tdom::build({tdom::family_from_name(args.example), args.p, args.order});
}

void echo_series_inputs(tdom::OrderedJson& inputs, const SeriesArgs& args) {
  if (!args.series_file.empty()) inputs["series"] = args.series_file;
  if (!args.example.empty()) {
    inputs["example"] = args.example;
    inputs["p"] = args.p;
  }
  if (args.order >= 0) inputs["order"] = args.order;
}

tdom::OrderedJson series_json_value(const tdom::PowerSeries& f) {
  tdom::OrderedJson j;
  j["label"] = f.label();
  j["order"] = f.order();
  auto coeffs = tdom::OrderedJson::array();
  for (int k = 0; k <= f.order(); ++k) {
    const tdom::ScaledComplex& c = f.coeff(k);
    coeffs.push_back(tdom::OrderedJson::array({c.re, c.im, c.exp2}));
  }
  j["coeffs"] = std::move(coeffs);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Taylor domination, Borel transforms, and measured valency of truncated power series"};
  app.require_subcommand(1);

  // bounds
  auto* bounds_cmd = app.add_subcommand("bounds", "valency bound for the Borel transform of a p-valent function");
  int b_p = 1;
  double b_r = 1.0, b_a = 1.0;
  bool b_csv = false;
  bounds_cmd->add_option("--p", b_p, "valency of the source function")->required();
  bounds_cmd->add_option("--R", b_r, "disk radius (>= 1)")->required();
  bounds_cmd->add_option("--A", b_a, "domination constant stand-in (default 1)");
  bounds_cmd->add_flag("--csv", b_csv, "emit a CSV row instead of JSON");

  // eta
  auto* eta_cmd = app.add_subcommand("eta", "scan max k^(2p-1) R^k / k! and its closed-form bounds");
  int e_p = 1;
  double e_r = 1.0;
  eta_cmd->add_option("--p", e_p)->required();
  eta_cmd->add_option("--R", e_r)->required();

  // zeros
  auto* zeros_cmd = app.add_subcommand("zeros", "argument-principle count of f(z) = c solutions in a disk");
  SeriesArgs z_series;
  add_series_options(zeros_cmd, z_series, true);
  double z_r = 1.0;
  std::string z_c = "0,0";
  int z_samples = 1024, z_max_samples = 1 << 20;
  double z_min_modulus = 0.0;
  zeros_cmd->add_option("--r", z_r, "contour radius")->required();
  zeros_cmd->add_option("--c", z_c, "target value RE,IM (default 0,0)");
  zeros_cmd->add_option("--samples", z_samples, "initial contour samples (power of two)");
  zeros_cmd->add_option("--max-samples", z_max_samples, "sample cap (power of two)");
  zeros_cmd->add_option("--min-modulus", z_min_modulus, "contour guard distance (default: scale-free auto)");

  // valency
  auto* valency_cmd = app.add_subcommand("valency", "certified lower bound for the valency on a disk");
  SeriesArgs v_series;
  add_series_options(valency_cmd, v_series, true);
  double v_r = 1.0;
  int v_grid = 16;
  std::uint64_t v_seed = 0;
  int v_threads = tdom::default_thread_count();
  int v_samples = 1024, v_max_samples = 1 << 20;
  double v_min_modulus = 0.0;
  valency_cmd->add_option("--r", v_r, "disk radius")->required();
  valency_cmd->add_option("--grid", v_grid, "target grid size (grid^2 samples)");
  valency_cmd->add_option("--seed", v_seed, "perturbation seed");
  valency_cmd->add_option("--threads", v_threads, "worker pool size (TDOM_THREADS overrides the default)");
  valency_cmd->add_option("--samples", v_samples, "initial contour samples (power of two)");
  valency_cmd->add_option("--max-samples", v_max_samples, "sample cap (power of two)");
  valency_cmd->add_option("--min-modulus", v_min_modulus, "contour guard distance (default: scale-free auto)");

  // dominate
  auto* dom_cmd = app.add_subcommand("dominate", "fit and check a Taylor domination profile");
  std::string d_series;
  int d_n = 0, d_kmax = 0;
  double d_r = 1.0, d_m = 0.0;
  bool d_exclude = false;
  dom_cmd->add_option("--series", d_series, "series JSON file")->required();
  dom_cmd->add_option("--N", d_n, "head length")->required();
  dom_cmd->add_option("--R", d_r, "weight radius")->required();
  dom_cmd->add_option("--kmax", d_kmax, "last tested index")->required();
  auto* d_m_opt = dom_cmd->add_option("--m", d_m, "fit S(k) = A k^m instead of a constant");
  dom_cmd->add_flag("--exclude-a0", d_exclude, "run the head maximum over 1..N instead of 0..N");

  // borel
  auto* borel_cmd = app.add_subcommand("borel", "Borel transform, its coefficient inverse, or the inverse integral");
  SeriesArgs br_series;
  add_series_options(borel_cmd, br_series, false);
  bool br_inverse = false, br_integral = false;
  std::string br_z = "0,0", br_out;
  double br_cutoff = 40.0;
  int br_nodes = 64;
  borel_cmd->add_flag("--inverse", br_inverse, "coefficient-wise inverse b_k -> b_k k!");
  borel_cmd->add_flag("--integral", br_integral, "evaluate int_0^inf e^(-t) g(tz) dt instead");
  borel_cmd->add_option("--z", br_z, "integral evaluation point RE,IM");
  borel_cmd->add_option("--cutoff", br_cutoff, "integral truncation T");
  borel_cmd->add_option("--nodes", br_nodes, "quadrature nodes");
  borel_cmd->add_option("--out", br_out, "write the resulting series to this file");

  // example
  auto* ex_cmd = app.add_subcommand("example", "export a built-in family to the series JSON format");
  std::string ex_name, ex_out;
  int ex_p = 1, ex_order = 0;
  ex_cmd->add_option("--name", ex_name, "geometric|fp|fp_tilde|exp_power|koebe")
      ->required()
      ->check(CLI::IsMember({"geometric", "fp", "fp_tilde", "exp_power", "koebe"}));
  ex_cmd->add_option("--p", ex_p, "family parameter p");
  ex_cmd->add_option("--order", ex_order, "truncation order")->required();
  ex_cmd->add_option("--out", ex_out, "output file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the built-in verification suites");
  std::string vf_suite = "all", vf_report;
  std::uint64_t vf_seed = 0;
  int vf_threads = tdom::default_thread_count();
  verify_cmd->add_option("--suite", vf_suite, "all|bounds|domination|valency|borel")
      ->check(CLI::IsMember({"all", "bounds", "domination", "valency", "borel"}));
  verify_cmd->add_option("--report", vf_report, "also write the checks as CSV to this file");
  verify_cmd->add_option("--seed", vf_seed, "seed for the randomized checks");
  verify_cmd->add_option("--threads", vf_threads, "worker pool size (TDOM_THREADS overrides the default)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (bounds_cmd->parsed()) {
      const tdom::BoundReport rep = tdom::q_bound(b_p, b_r, b_a);
      if (b_csv) {
        std::cout << "p,R,A,log_eta,eta_argmax_k,log_eta1_bound,log_eta2_bound,log_nu,log_C,q,valid_radius\n"
                  << rep.p << "," << tdom::format_real17(rep.R) << "," << tdom::format_real17(rep.A) << ","
                  << tdom::format_real17(rep.log_eta) << "," << rep.eta_argmax_k << ","
                  << tdom::format_real17(rep.log_eta1_bound) << "," << tdom::format_real17(rep.log_eta2_bound)
                  << "," << tdom::format_real17(rep.log_nu) << "," << tdom::format_real17(rep.log_C) << ","
                  << tdom::format_real17(rep.q) << "," << tdom::format_real17(rep.valid_radius) << "\n";
        return kExitOk;
      }
      tdom::OrderedJson out = new_report(command);
      out["inputs"] = {{"p", b_p}, {"R", b_r}, {"A", b_a}};
      out["outputs"]["log_eta"] = rep.log_eta;
      out["outputs"]["eta_argmax_k"] = rep.eta_argmax_k;
      out["outputs"]["log_eta1_bound"] = rep.log_eta1_bound;
      out["outputs"]["log_eta2_bound"] = rep.log_eta2_bound;
      out["outputs"]["log_nu"] = rep.log_nu;
      out["outputs"]["log_C"] = rep.log_C;
      out["outputs"]["q"] = rep.q;
      out["outputs"]["valid_radius"] = rep.valid_radius;
      out["warnings"].push_back(tdom::kLogBaseNote);
      out["warnings"].push_back(tdom::kValidRadiusNote);
      print_report(out);
      return kExitOk;
    }

    if (eta_cmd->parsed()) {
      const tdom::EtaScanResult scan = tdom::eta_scan(e_p, e_r);
      const tdom::EtaClosedBounds closed = tdom::eta_closed_bounds(e_p, e_r);
      tdom::OrderedJson out = new_report(command);
      out["inputs"] = {{"p", e_p}, {"R", e_r}};
      out["outputs"]["log_eta"] = scan.log_eta;
      out["outputs"]["eta"] = std::exp(scan.log_eta);
      out["outputs"]["eta_argmax_k"] = scan.argmax_k;
      out["outputs"]["log_eta1_bound"] = closed.log_eta1;
      out["outputs"]["log_eta2_bound"] = closed.log_eta2;
      out["warnings"].push_back(tdom::kLogBaseNote);
      print_report(out);
      return kExitOk;
    }

    if (zeros_cmd->parsed()) {
      const tdom::PowerSeries f = load_series(z_series);
      const std::complex<double> c = parse_complex(z_c, "--c");
      tdom::ContourSpec spec;
      spec.radius = z_r;
      spec.initial_samples = z_samples;
      spec.max_samples = z_max_samples;
      spec.min_modulus = z_min_modulus;
      const tdom::WindingResult w = tdom::winding_number(f, c, spec);
      tdom::OrderedJson out = new_report(command);
      echo_series_inputs(out["inputs"], z_series);
      out["inputs"]["r"] = z_r;
      out["inputs"]["c"] = tdom::OrderedJson::array({c.real(), c.imag()});
      out["inputs"]["samples"] = z_samples;
      out["inputs"]["max_samples"] = z_max_samples;
      out["outputs"]["count"] = w.count;
      out["outputs"]["certified"] = w.certified;
      if (!w.certified) out["warnings"].push_back("winding not certified: refine samples or adjust the guard");
      print_report(out);
      return w.certified ? kExitOk : kExitUncertified;
    }

    if (valency_cmd->parsed()) {
      const tdom::PowerSeries f = load_series(v_series);
      tdom::ContourSpec spec;
      spec.radius = v_r;
      spec.initial_samples = v_samples;
      spec.max_samples = v_max_samples;
      spec.min_modulus = v_min_modulus;
      const tdom::ValencyReport rep = tdom::valency_lower_bound(f, spec, v_grid, v_seed, v_threads);
      tdom::OrderedJson out = new_report(command);
      echo_series_inputs(out["inputs"], v_series);
      out["inputs"]["r"] = v_r;
      out["inputs"]["grid"] = v_grid;
      out["inputs"]["seed"] = v_seed;
      out["outputs"]["max_count"] = rep.max_count;
      out["outputs"]["grid_description"] = rep.grid_description;
      auto targets = tdom::OrderedJson::array();
      int uncertified = 0;
      for (const auto& t : rep.targets) {
        tdom::OrderedJson tj;
        tj["c"] = tdom::OrderedJson::array({t.c.real(), t.c.imag()});
        tj["count"] = t.count;
        tj["certified"] = t.certified;
        targets.push_back(std::move(tj));
        if (!t.certified) ++uncertified;
      }
      out["outputs"]["targets"] = std::move(targets);
      if (uncertified > 0)
        out["warnings"].push_back(std::to_string(uncertified) +
                                  " target(s) not certified and excluded from max_count");
      print_report(out);
      return kExitOk;
    }

    if (dom_cmd->parsed()) {
      const tdom::PowerSeries f = tdom::read_series_file(d_series);
      const bool power_fit = d_m_opt->count() > 0;
      const bool include_a0 = !d_exclude;
      const double fitted = power_fit
                                ? tdom::minimal_power_factor(f, d_n, d_r, d_m, d_kmax, include_a0)
                                : tdom::minimal_constant(f, d_n, d_r, d_kmax, include_a0);
      tdom::DominationProfile profile{d_n, d_r,
                                      power_fit ? tdom::DominationShape::power(fitted, d_m)
                                                : tdom::DominationShape::constant(fitted),
                                      include_a0};
      const tdom::DominationReport rep = tdom::check_domination(f, profile, d_kmax);
      tdom::OrderedJson out = new_report(command);
      out["inputs"] = {{"series", d_series}, {"N", d_n}, {"R", d_r}, {"kmax", d_kmax},
                       {"exclude_a0", d_exclude}};
      if (power_fit) out["inputs"]["m"] = d_m;
      out["outputs"]["shape"] = power_fit ? "A*k^m" : "constant";
      out["outputs"][power_fit ? "A" : "C"] = fitted;
      out["outputs"]["holds"] = rep.holds;
      out["outputs"]["worst_k"] = rep.worst_k;
      out["outputs"]["worst_ratio"] = rep.worst_ratio;
      out["outputs"]["k_range"] = tdom::OrderedJson::array({rep.k_range.first, rep.k_range.second});
      out["warnings"].push_back("fitted constants are truncation-dependent; k_range records the scan");
      print_report(out);
      return kExitOk;
    }

    if (borel_cmd->parsed()) {
      const tdom::PowerSeries f = load_series(br_series);
      if (br_integral) {
        const std::complex<double> z = parse_complex(br_z, "--z");
        tdom::QuadratureSpec spec;
        spec.node_count = br_nodes;
        spec.cutoff_T = br_cutoff;
        spec.trust_radius = std::max(std::abs(z) * br_cutoff, 1e-6);
        const tdom::IntegralResult res = tdom::inverse_borel_integral(f, z, spec);
        tdom::OrderedJson out = new_report(command);
        echo_series_inputs(out["inputs"], br_series);
        out["inputs"]["z"] = tdom::OrderedJson::array({z.real(), z.imag()});
        out["inputs"]["cutoff"] = br_cutoff;
        out["inputs"]["nodes"] = br_nodes;
        out["outputs"]["value"] = tdom::OrderedJson::array({res.value.real(), res.value.imag()});
        out["outputs"]["error_estimate"] = res.error_estimate;
        print_report(out);
        return kExitOk;
      }
      const tdom::PowerSeries g = br_inverse ? tdom::inverse_borel_coeff(f) : tdom::borel(f);
      if (!br_out.empty()) {
        tdom::write_series_file(br_out, g);
        return kExitOk;
      }
      tdom::OrderedJson out = new_report(command);
      echo_series_inputs(out["inputs"], br_series);
      out["inputs"]["inverse"] = br_inverse;
      out["outputs"]["series"] = series_json_value(g);
      if (g.label().find("divergent") != std::string::npos)
        out["warnings"].push_back("series flagged divergent: evaluation is untrusted at any nonzero radius");
      print_report(out);
      return kExitOk;
    }

    if (ex_cmd->parsed()) {
      const tdom::PowerSeries f = tdom::build({tdom::family_from_name(ex_name), ex_p, ex_order});
      tdom::write_series_file(ex_out, f);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const std::vector<tdom::verify::CheckResult> checks =
          tdom::verify::run_suites(vf_suite, vf_seed, vf_threads);
      int failed = 0;
      auto rows = tdom::OrderedJson::array();
      for (const auto& c : checks) {
        if (!c.pass) ++failed;
        tdom::OrderedJson row;
        row["suite"] = c.suite;
        row["name"] = c.name;
        row["pass"] = c.pass;
        row["measured"] = c.measured;
        row["expected"] = c.expected;
        row["tolerance"] = c.tolerance;
        row["detail"] = c.detail;
        rows.push_back(std::move(row));
      }
      tdom::OrderedJson out = new_report(command);
      out["inputs"] = {{"suite", vf_suite}, {"seed", vf_seed}};
      out["outputs"]["total"] = static_cast<int>(checks.size());
      out["outputs"]["passed"] = static_cast<int>(checks.size()) - failed;
      out["outputs"]["failed"] = failed;
      out["outputs"]["checks"] = std::move(rows);
      if (!vf_report.empty()) {
        std::ofstream csv(vf_report);
        if (!csv) throw std::runtime_error("cannot open report file: " + vf_report);
        tdom::verify::write_csv(csv, checks);
      }
      print_report(out);
      return failed == 0 ? kExitOk : kExitUncertified;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    tdom::OrderedJson out = new_report(command);
    out["outputs"]["error"] = e.what();
    print_report(out);
    return kExitContract;
  }
  return kExitUsage;
}
