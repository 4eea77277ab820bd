#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "korovkin/expr.hpp"
#include "korovkin/runner.hpp"

namespace {

int cmd_check_operator(const std::string& family, const std::string& phi_spec,
                       const std::string& distortion, int n, int grid,
                       std::uint64_t seed, double tol, int trials) {
  using namespace korovkin;
  ExperimentConfig cfg;
  cfg.family = family;
  cfg.phi = phi_spec;
  cfg.distortion = distortion;
  cfg.domain_kind = family == "weyl" ? "circle" : "interval";
  cfg.grid_size = grid;
  cfg.schedule = {n};
  try {
    const GridDomain domain = build_domain(cfg);
    const OperatorFamily F = build_family(cfg, domain);
    const OperatorInstance T = F.member(n);
    const bool strong = family != "choquet_kantorovich";
    bool all_pass = true;
    for (const AxiomReport& r : run_axiom_suite(T, tol, seed, trials, strong)) {
      std::printf("%-7s %-4s trials=%d max_violation=%.3g tol=%.3g\n",
                  to_string(r.tag), r.pass ? "pass" : "FAIL", r.trials,
                  r.max_violation, r.tol);
      if (!r.witness.empty()) std::printf("        witness: %s\n", r.witness.c_str());
      all_pass &= r.pass;
    }
    return all_pass ? 0 : korovkin::kExitConvergenceFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return korovkin::kExitUsage;
  }
}

int cmd_choquet(const std::string& f_spec, double a, double b,
                const std::string& g_spec, int resolution) {
  using namespace korovkin;
  try {
    const RealFunction f = FunctionExpr::parse(f_spec).to_function();
    const DistortionFunction g = build_distortion(g_spec);
    std::printf("%.17g\n", choquet_integral(f, a, b, g, resolution));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return korovkin::kExitUsage;
  }
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Korovkin-type convergence experiments for weakly nonlinear "
               "monotone operator families"};
  app.require_subcommand(1);

  // run
  std::string config_path, out_path;
  CLI::App* run = app.add_subcommand("run", "run an experiment config");
  run->add_option("--config", config_path, "experiment config file")
      ->required();
  run->add_option("--out", out_path, "output CSV path (JSON sidecar beside it)")
      ->required();

  // check-operator
  std::string family = "sup_bernstein", phi_spec = "identity",
              distortion = "sqrt";
  int n = 8, grid = 101, trials = 50;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  bool axioms = false;
  CLI::App* check = app.add_subcommand("check-operator",
                                       "run the axiom suite on one operator");
  check->add_option("--family", family,
                    "sup_bernstein | kantorovich | max_kantorovich | "
                    "choquet_kantorovich | weyl");
  check->add_option("--phi", phi_spec, "identity | poly:[c0,..] | expr:<src>");
  check->add_option("--distortion", distortion,
                    "identity | sqrt | power:<p> | expr:<src>");
  check->add_option("--n", n, "family index");
  check->add_option("--grid", grid, "grid size");
  check->add_option("--seed", seed, "sample seed");
  check->add_option("--tol", tol, "relative tolerance");
  check->add_option("--trials", trials, "sample count");
  check->add_flag("--axioms", axioms, "print axiom reports (default action)");

  // choquet
  std::string f_spec, g_spec = "sqrt";
  double a = 0.0, b = 1.0;
  int resolution = 10000;
  CLI::App* cho = app.add_subcommand("choquet",
                                     "evaluate one Choquet integral");
  cho->add_option("--f", f_spec, "integrand expression")->required();
  cho->add_option("--a", a, "lower endpoint");
  cho->add_option("--b", b, "upper endpoint");
  cho->add_option("--g", g_spec, "distortion spec");
  cho->add_option("--resolution", resolution, "sample count");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) return korovkin::run_experiment(config_path, out_path);
  if (check->parsed())
    return cmd_check_operator(family, phi_spec, distortion, n, grid, seed, tol,
                              trials);
  if (cho->parsed()) return cmd_choquet(f_spec, a, b, g_spec, resolution);
  return korovkin::kExitUsage;
}
