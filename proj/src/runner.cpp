#include "korovkin/runner.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>

#include <json.hpp>

#include "korovkin/expr.hpp"
#include "korovkin/trig.hpp"

namespace korovkin {

namespace {

using nlohmann::json;

constexpr double kGoldenFraction = 0.6180339887498949; // (sqrt 5 - 1)/2

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

const char* verdict(bool pass) { return pass ? "pass" : "fail"; }

json to_json(const HypothesisReport& r) {
  return json{
      {"operator", r.operator_label},
      {"form", r.form},
      {"alpha", r.alpha},
      {"strict_positivity",
       json{{"min", r.min_unit_image},
            {"verdict", verdict(r.strict_positivity_pass)}}},
      {"functional_equation_residual",
       json{{"value", r.residual}, {"verdict", verdict(r.residual_pass)}}},
      {"tol", r.tol},
      {"verdict", verdict(r.pass())}};
}

json to_json(const AxiomReport& r) {
  json j{{"axiom", to_string(r.tag)},
         {"trials", r.trials},
         {"max_violation", r.max_violation},
         {"tol", r.tol},
         {"verdict", verdict(r.pass)}};
  if (!r.witness.empty()) j["witness"] = r.witness;
  return j;
}

json to_json(const AprioriReport& r) {
  return json{{"function_id", r.function_id},
              {"epsilon", r.epsilon},
              {"delta", r.delta},
              {"alpha", r.alpha},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"slack", r.slack},
              {"tol", r.tol},
              {"verdict", verdict(r.pass)}};
}

json to_json(const ConvergenceReport& r) {
  json entries = json::array();
  for (const ConvergenceEntry& e : r.entries) {
    json errs = json::array();
    for (const auto& [n, err] : e.errors)
      errs.push_back(json{{"n", n}, {"error", err}});
    entries.push_back(json{{"function_id", e.function_id},
                           {"is_test_function", e.is_test_function},
                           {"errors", errs},
                           {"verdict", verdict(e.pass)}});
  }
  return json{{"schedule", r.schedule},
              {"norm", r.norm_tag},
              {"tol", r.tol},
              {"sup_operator_norm", r.sup_operator_norm},
              {"entries", entries},
              {"test_set_verdict", verdict(r.test_set_pass)},
              {"probes_verdict", verdict(r.probes_pass)},
              {"overall_verdict", verdict(r.overall_pass)}};
}

json echo_config(const ExperimentConfig& cfg) {
  json j = json::object();
  for (const auto& [k, v] : cfg.raw) j[k] = v;
  return j;
}

void write_csv(const std::string& path, const ConvergenceReport* report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot write CSV '" + path + "'");
  out << "n,function_id,norm,error\n";
  if (report == nullptr) return;
  for (const ConvergenceEntry& e : report->entries)
    for (const auto& [n, err] : e.errors)
      out << n << ',' << e.function_id << ',' << report->norm_tag << ','
          << fmt17(err) << '\n';
}

void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw config_error("cannot write JSON '" + path + "'");
  out << j.dump(2) << '\n';
}

double rotation_angle(const ExperimentConfig& cfg) {
  if (!cfg.alpha.has_value() || *cfg.alpha == "golden")
    return 2.0 * std::numbers::pi * kGoldenFraction;
  try {
    std::size_t used = 0;
    const double v = std::stod(*cfg.alpha, &used);
    if (used != cfg.alpha->size()) throw std::invalid_argument(*cfg.alpha);
    return v;
  } catch (const std::exception&) {
    throw config_error("config: alpha must be a number or 'golden'");
  }
}

std::optional<double> testset_alpha(const ExperimentConfig& cfg) {
  if (!cfg.alpha.has_value()) return std::nullopt;
  try {
    std::size_t used = 0;
    const double v = std::stod(*cfg.alpha, &used);
    if (used != cfg.alpha->size()) throw std::invalid_argument(*cfg.alpha);
    return v;
  } catch (const std::exception&) {
    throw config_error("config: alpha override must be a number");
  }
}

} // namespace

GridDomain build_domain(const ExperimentConfig& cfg) {
  if (cfg.domain_kind == "interval")
    return GridDomain::interval(cfg.interval_bounds[0], cfg.interval_bounds[1],
                                cfg.grid_size);
  if (cfg.domain_kind == "circle") return GridDomain::circle(cfg.grid_size);
  if (cfg.domain_kind == "box")
    return GridDomain::box(cfg.box_bounds, cfg.box_sizes);
  throw config_error("config: unknown domain kind '" + cfg.domain_kind + "'");
}

CompositionMap build_phi(const std::string& spec, const GridDomain& domain) {
  if (spec == "identity") return CompositionMap::identity(domain);
  if (spec.rfind("poly:", 0) == 0) {
    std::vector<double> coeffs;
    std::string body = spec.substr(5);
    if (!body.empty() && body.front() == '[') body.erase(0, 1);
    if (!body.empty() && body.back() == ']') body.pop_back();
    std::string cur;
    for (char c : body + ",") {
      if (c == ',') {
        if (!cur.empty()) coeffs.push_back(std::stod(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (coeffs.empty()) throw config_error("config: empty poly phi spec");
    return CompositionMap(RealFunction::polynomial(std::move(coeffs)), domain);
  }
  if (spec.rfind("expr:", 0) == 0)
    return CompositionMap(FunctionExpr::parse(spec.substr(5)).to_function(),
                          domain);
  throw config_error("config: bad phi spec '" + spec + "'");
}

DistortionFunction build_distortion(const std::string& spec) {
  if (spec == "identity") return DistortionFunction::identity();
  if (spec == "sqrt") return DistortionFunction::sqrt();
  if (spec.rfind("power:", 0) == 0)
    return DistortionFunction::power(std::stod(spec.substr(6)));
  if (spec.rfind("expr:", 0) == 0)
    return DistortionFunction(FunctionExpr::parse(spec.substr(5)).to_function());
  throw config_error("config: bad distortion spec '" + spec + "'");
}

RealFunction build_probe(const std::string& spec, const GridDomain& domain) {
  const RealFunction f = FunctionExpr::parse(spec).to_function();
  if (f.arity() > domain.dimension())
    throw config_error("config: probe '" + spec +
                       "' uses more variables than the domain has");
  for (std::size_t i = 0; i < domain.size(); ++i)
    (void)f(domain.point(i)); // evaluation errors surface now, with location
  return f;
}

OperatorFamily build_family(const ExperimentConfig& cfg,
                            const GridDomain& domain) {
  const int max_n = cfg.schedule.back();
  const std::string& tag = cfg.family;
  if (tag.rfind("cesaro:", 0) == 0) {
    ExperimentConfig inner = cfg;
    inner.family = tag.substr(7);
    if (inner.family.empty())
      throw config_error("config: cesaro needs an inner family tag");
    return cesaro_family(build_family(inner, domain));
  }
  if (tag == "weyl")
    return rotation_family(domain, rotation_angle(cfg), max_n);

  const CompositionMap phi = build_phi(cfg.phi, domain);
  if (tag == "sup_bernstein")
    return sup_bernstein_family(domain, phi, max_n, cfg.refinement);
  if (tag == "kantorovich") return kantorovich_family(domain, phi, max_n);
  if (tag == "max_kantorovich")
    return max_kantorovich_family(domain, phi, max_n);
  if (tag == "choquet_kantorovich")
    return choquet_kantorovich_family(domain, phi,
                                      build_distortion(cfg.distortion), max_n,
                                      cfg.resolution);
  throw config_error("config: unknown family '" + tag + "'");
}

OperatorInstance build_limit(const ExperimentConfig& cfg,
                             const GridDomain& domain) {
  if (cfg.limit == "identity")
    return composition_operator(domain, CompositionMap::identity(domain));
  if (cfg.limit == "composition")
    return composition_operator(domain, build_phi(cfg.phi, domain));
  if (cfg.limit == "circle_mean") return circle_mean_operator(domain);
  if (cfg.limit.rfind("expr:", 0) == 0)
    return composition_operator(
        domain, build_phi(cfg.limit, domain));
  throw config_error("config: unknown limit operator '" + cfg.limit + "'");
}

int run_parsed(const ExperimentConfig& config, const std::string& out_csv) {
  ExperimentConfig cfg = config;
  if (const char* env_seed = std::getenv("SEED")) {
    try {
      cfg.seed = std::stoull(env_seed);
    } catch (const std::exception&) {
      std::cerr << "bad SEED environment value '" << env_seed << "'\n";
      return kExitUsage;
    }
  }

  json sidecar;
  sidecar["config"] = echo_config(cfg);
  sidecar["seed"] = cfg.seed;
  const std::string json_path = out_csv + ".json";

  try {
    const GridDomain domain = build_domain(cfg);
    std::vector<RealFunction> probes;
    for (const std::string& spec : cfg.probes)
      probes.push_back(build_probe(spec, domain));

    const bool weyl_run = cfg.family == "weyl" && cfg.gate != "trig";
    const bool circle = domain.kind() == DomainKind::circle_angle;
    const NormKind norm_kind =
        cfg.norm == "sup" ? NormKind::sup() : NormKind::l1_trapezoid(domain);

    // for family=weyl the alpha key carries the rotation angle instead
    const std::optional<double> ts_alpha =
        cfg.family == "weyl" ? std::nullopt : testset_alpha(cfg);

    ConvergenceReport report;
    if (weyl_run) {
      const double angle = rotation_angle(cfg);
      sidecar["gate"] = "weyl";
      sidecar["rotation_angle"] = angle;
      // the circle-mean limit fails the multiplicative hypothesis; recorded
      // for reference, not enforced on this path
      sidecar["hypothesis"] = to_json(
          check_hypotheses(circle_mean_operator(domain), 0.0, cfg.hyp_tol));
      report = weyl_experiment(domain, probes, angle, cfg.schedule, cfg.tol);
    } else {
      const OperatorFamily F = build_family(cfg, domain);
      const OperatorInstance A = build_limit(cfg, domain);
      sidecar["gate"] = circle ? "trig" : "korovkin";
      try {
        report = run_korovkin_experiment(F, A, cfg.schedule, probes, norm_kind,
                                         ts_alpha, cfg.tol, cfg.hyp_tol);
        sidecar["hypothesis"] =
            to_json(check_hypotheses(A, ts_alpha.value_or(
                                            circle ? 0.0
                                                   : deficit_of_positivity(
                                                         F.input_domain())),
                                     cfg.hyp_tol));
      } catch (const gate_refused& e) {
        sidecar["hypothesis"] = to_json(e.report);
        sidecar["verdict"] = "gate_refused";
        sidecar["exit_code"] = kExitGateRefused;
        write_csv(out_csv, nullptr);
        write_json(json_path, sidecar);
        std::cerr << e.what() << '\n';
        return kExitGateRefused;
      }
    }

    // axiom suite on the smallest member, informational
    {
      const OperatorFamily F = build_family(cfg, domain);
      const OperatorInstance Tn = F.member(cfg.schedule.front());
      const bool strong = cfg.family != "choquet_kantorovich";
      json axioms = json::array();
      for (const AxiomReport& r :
           run_axiom_suite(Tn, cfg.axiom_tol, cfg.seed, 10, strong))
        axioms.push_back(to_json(r));
      sidecar["axioms"] = axioms;
    }

    // a-priori bounds at the largest member, interval domains only
    if (!circle && !weyl_run && !probes.empty()) {
      const OperatorFamily F = build_family(cfg, domain);
      const OperatorInstance Tn = F.member(cfg.schedule.back());
      const OperatorInstance A = build_limit(cfg, domain);
      const double alpha =
          ts_alpha.value_or(deficit_of_positivity(F.input_domain()));
      json apriori = json::array();
      for (const RealFunction& f : probes)
        apriori.push_back(to_json(apriori_bound(Tn, A, f, 0.1, alpha)));
      sidecar["apriori"] = apriori;
    }

    sidecar["convergence"] = to_json(report);
    const int code = report.overall_pass ? kExitPass : kExitConvergenceFail;
    sidecar["verdict"] = report.overall_pass ? "pass" : "convergence_fail";
    sidecar["exit_code"] = code;
    write_csv(out_csv, &report);
    write_json(json_path, sidecar);
    return code;
  } catch (const gate_refused& e) {
    std::cerr << e.what() << '\n';
    return kExitGateRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_experiment(const std::string& config_path, const std::string& out_csv) {
  try {
    return run_parsed(parse_config_file(config_path), out_csv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

} // namespace korovkin
