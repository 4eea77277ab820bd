#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "korovkin/domain.hpp"
#include "korovkin/operators.hpp"

namespace korovkin {

/// Result of the limit-operator checks: strict positivity of A(1) on the
/// output grid and the functional-equation residual (the "square_sum" form
/// A(1)A(sum (pr_k+a)^2) = sum (A(-pr_k-a))^2 on intervals/boxes, the
/// "trig" form A(3+2cos+2sin) = (A(-1-cos))^2 + (A(-1-sin))^2 on circles).
struct HypothesisReport {
  std::string operator_label;
  std::string form; // "square_sum" or "trig"
  double alpha = 0.0;
  double min_unit_image = 0.0; // min over the output grid of A(1)
  bool strict_positivity_pass = false;
  double residual = 0.0; // sup norm of the functional-equation defect
  bool residual_pass = false;
  double tol = 0.0;

  bool pass() const { return strict_positivity_pass && residual_pass; }
};

/// Thrown when an experiment's limit operator fails the hypothesis gate.
class gate_refused : public std::runtime_error {
public:
  explicit gate_refused(HypothesisReport r)
      : std::runtime_error("hypothesis gate refused for operator '" +
                           r.operator_label + "' (residual " +
                           std::to_string(r.residual) + ")"),
        report(std::move(r)) {}
  HypothesisReport report;
};

/// Both sides of the a-priori inequality bounding
/// ||T(f)A(1) - T(1)A(f)|| through the test functions, at the smallest
/// delta making |f(x)-f(y)| <= eps + delta|x-y|^2 on the grid.
struct AprioriReport {
  std::string function_id;
  double epsilon = 0.0;
  double delta = 0.0;
  double alpha = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0; // rhs - lhs
  double tol = 0.0;
  bool pass = false; // slack >= -tol
};

struct ConvergenceEntry {
  std::string function_id;
  bool is_test_function = false;
  std::vector<std::pair<int, double>> errors; // (n, ||T_n f - A f||)
  bool pass = false;
};

/// Error tables for the test set and the probes over the schedule. An entry
/// passes when its final error is below tol and at most half the first error
/// (errors at exact-arithmetic noise level, < 1e-12, count as converged).
struct ConvergenceReport {
  std::vector<int> schedule;
  std::string norm_tag;
  double tol = 0.0;
  double sup_operator_norm = 0.0; // max over the schedule of ||T_n||
  std::vector<ConvergenceEntry> entries; // test set first, then probes
  bool test_set_pass = false;
  bool probes_pass = false;
  bool overall_pass = false; // test set and probes both pass
};

HypothesisReport check_hypotheses(const OperatorInstance& A, double alpha,
                                  double tol);

AprioriReport apriori_bound(const OperatorInstance& T,
                            const OperatorInstance& A, const RealFunction& f,
                            double epsilon, double alpha, double tol = 1e-8);

/// Runs the gate, then tabulates ||T_n(f) - A(f)|| over the schedule for the
/// Korovkin test set and the probes. Throws gate_refused when the limit
/// operator fails check_hypotheses.
ConvergenceReport run_korovkin_experiment(
    const OperatorFamily& F, const OperatorInstance& A,
    std::span<const int> schedule, std::span<const RealFunction> probes,
    const NormKind& norm_kind, std::optional<double> alpha, double tol,
    double hyp_tol = 1e-8, bool simplified_test_set = false);

/// Ergodic-average experiment: Cesaro rotation family against the circle
/// mean, sup-norm errors over the schedule for {1, -cos, -sin, cos^2+sin^2}
/// plus the probes. Refuses rotation angles that look rational over pi.
ConvergenceReport weyl_experiment(const GridDomain& circle,
                                  std::span<const RealFunction> probes,
                                  double alpha_rot,
                                  std::span<const int> schedule, double tol);

/// Functional-equation survey: the check_hypotheses residual for each
/// candidate, no gating.
std::vector<HypothesisReport> probe_functional_equation(
    std::span<const OperatorInstance> candidates, double alpha, double tol);

} // namespace korovkin
