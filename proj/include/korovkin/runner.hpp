#pragma once

#include <string>

#include "korovkin/bernstein.hpp"
#include "korovkin/choquet.hpp"
#include "korovkin/config.hpp"
#include "korovkin/harness.hpp"

namespace korovkin {

// exit codes of the run subcommand
inline constexpr int kExitPass = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGateRefused = 2;
inline constexpr int kExitConvergenceFail = 3;

GridDomain build_domain(const ExperimentConfig& cfg);
CompositionMap build_phi(const std::string& spec, const GridDomain& domain);
DistortionFunction build_distortion(const std::string& spec);
RealFunction build_probe(const std::string& spec, const GridDomain& domain);
OperatorFamily build_family(const ExperimentConfig& cfg,
                            const GridDomain& domain);
OperatorInstance build_limit(const ExperimentConfig& cfg,
                             const GridDomain& domain);

/// Full experiment: gate, convergence run, axiom and a-priori probes; writes
/// the CSV table to `out_csv` and the JSON sidecar to `out_csv + ".json"`.
/// The SEED environment variable overrides the config seed. Returns the exit
/// code; never throws for config/gate/convergence conditions.
int run_experiment(const std::string& config_path, const std::string& out_csv);

/// `run_experiment` on an already-parsed config (error messages to stderr).
int run_parsed(const ExperimentConfig& cfg, const std::string& out_csv);

} // namespace korovkin
