#include "korovkin/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "korovkin/trig.hpp"

namespace korovkin {

namespace {

// errors this small are exact-arithmetic noise, not a flat plateau
constexpr double kNoiseFloor = 1e-12;

double sup_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

RealFunction shifted_projection_neg(int k, double alpha) {
  std::string base = RealFunction::projection(k).name();
  char name[64];
  if (alpha == 0.0)
    std::snprintf(name, sizeof(name), "-%s", base.c_str());
  else
    std::snprintf(name, sizeof(name), "-(%s+%g)", base.c_str(), alpha);
  return RealFunction(name, k + 1, [k, alpha](std::span<const double> p) {
    return -(p[k] + alpha);
  });
}

RealFunction shifted_square_sum(int dim, double alpha) {
  char name[64];
  if (dim == 1)
    std::snprintf(name, sizeof(name),
                  alpha == 0.0 ? "x^2" : "(x+%g)^2", alpha);
  else
    std::snprintf(name, sizeof(name),
                  alpha == 0.0 ? "sum pr_k^2" : "sum(pr_k+%g)^2", alpha);
  return RealFunction(name, dim, [dim, alpha](std::span<const double> p) {
    double s = 0.0;
    for (int k = 0; k < dim; ++k) {
      const double t = p[k] + alpha;
      s += t * t;
    }
    return s;
  });
}

bool entry_pass(const std::vector<std::pair<int, double>>& errors,
                double tol) {
  const double first = errors.front().second;
  const double final = errors.back().second;
  if (!(final < tol)) return false;
  return final <= 0.5 * first || final < kNoiseFloor;
}

} // namespace

HypothesisReport check_hypotheses(const OperatorInstance& A, double alpha,
                                  double tol) {
  const GridDomain& K = A.input_domain();
  HypothesisReport r;
  r.operator_label = A.label();
  r.alpha = alpha;
  r.tol = tol;

  const std::vector<double> A1 = A(RealFunction::constant(1.0));
  r.min_unit_image = *std::min_element(A1.begin(), A1.end());
  r.strict_positivity_pass = r.min_unit_image > 0.0;

  if (K.kind() == DomainKind::circle_angle) {
    r.form = "trig";
    const std::vector<RealFunction> ts = trig_test_set(true);
    const std::vector<double> lhs = A(ts[3]); // 3+2cos+2sin
    const std::vector<double> ac = A(ts[1]);  // -1-cos
    const std::vector<double> as = A(ts[2]);  // -1-sin
    double res = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i)
      res = std::max(res,
                     std::abs(lhs[i] - ac[i] * ac[i] - as[i] * as[i]));
    r.residual = res;
  } else {
    r.form = "square_sum";
    if (alpha < deficit_of_positivity(K))
      throw std::invalid_argument("check_hypotheses: alpha below deficit");
    const int dim = K.dimension();
    const std::vector<double> AS = A(shifted_square_sum(dim, alpha));
    std::vector<double> sq(AS.size(), 0.0);
    for (int k = 0; k < dim; ++k) {
      const std::vector<double> Ak = A(shifted_projection_neg(k, alpha));
      for (std::size_t i = 0; i < sq.size(); ++i) sq[i] += Ak[i] * Ak[i];
    }
    double res = 0.0;
    for (std::size_t i = 0; i < AS.size(); ++i)
      res = std::max(res, std::abs(A1[i] * AS[i] - sq[i]));
    r.residual = res;
  }
  r.residual_pass = r.residual <= tol;
  return r;
}

AprioriReport apriori_bound(const OperatorInstance& T,
                            const OperatorInstance& A, const RealFunction& f,
                            double epsilon, double alpha, double tol) {
  const GridDomain& K = T.input_domain();
  if (K.kind() == DomainKind::circle_angle)
    throw std::domain_error("apriori_bound: interval/box domains only");
  if (alpha < deficit_of_positivity(K))
    throw std::invalid_argument("apriori_bound: alpha below deficit");

  AprioriReport r;
  r.function_id = f.name();
  r.epsilon = epsilon;
  r.alpha = alpha;
  r.tol = tol;
  r.delta = korovkin_delta(f, K, epsilon);

  // the defining scan must hold exactly when re-checked
  {
    const std::vector<double> fv = K.sample(f);
    const int dim = K.dimension();
    for (std::size_t i = 0; i < K.size(); ++i)
      for (std::size_t j = i + 1; j < K.size(); ++j) {
        double d2 = 0.0;
        for (int k = 0; k < dim; ++k) {
          const double d = K.point(i)[k] - K.point(j)[k];
          d2 += d * d;
        }
        const double bound = epsilon + r.delta * d2;
        if (std::abs(fv[i] - fv[j]) > bound * (1.0 + 1e-12) + 1e-300)
          throw std::logic_error("apriori_bound: delta re-scan failed");
      }
  }

  const int dim = K.dimension();
  const RealFunction one = RealFunction::constant(1.0);
  const RealFunction S = shifted_square_sum(dim, alpha);

  const std::vector<double> Tf = T(f);
  const std::vector<double> T1 = T(one);
  const std::vector<double> TS = T(S);
  const std::vector<double> Af = A(f);
  const std::vector<double> A1 = A(one);
  const std::vector<double> AS = A(S);

  std::vector<double> cross(Tf.size());
  for (std::size_t i = 0; i < cross.size(); ++i)
    cross[i] = Tf[i] * A1[i] - T1[i] * Af[i];
  r.lhs = sup_abs(cross);

  std::vector<double> diff(TS.size());
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = TS[i] - AS[i];
  const double nTSminusAS = sup_abs(diff);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = T1[i] - A1[i];
  const double nT1minusA1 = sup_abs(diff);

  std::vector<double> hyp(AS.size(), 0.0);
  for (std::size_t i = 0; i < hyp.size(); ++i) hyp[i] = A1[i] * AS[i];
  double proj_terms = 0.0;
  for (int k = 0; k < dim; ++k) {
    const RealFunction pk = shifted_projection_neg(k, alpha);
    const std::vector<double> Apk = A(pk);
    const std::vector<double> Tpk = T(pk);
    for (std::size_t i = 0; i < hyp.size(); ++i) hyp[i] -= Apk[i] * Apk[i];
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = Tpk[i] - Apk[i];
    proj_terms += sup_abs(Apk) * sup_abs(diff);
  }
  const double hyp_residual = sup_abs(hyp);

  r.rhs = epsilon * sup_abs(T1) * sup_abs(A1) +
          r.delta * (sup_abs(A1) * nTSminusAS + sup_abs(AS) * nT1minusA1 +
                     2.0 * hyp_residual + 2.0 * proj_terms);
  r.slack = r.rhs - r.lhs;
  r.pass = r.slack >= -tol;
  return r;
}

namespace {

ConvergenceReport tabulate(const OperatorFamily& F, const OperatorInstance& A,
                           std::span<const int> schedule,
                           std::span<const RealFunction> test_set,
                           std::span<const RealFunction> probes,
                           const NormKind& norm_kind, double tol) {
  if (schedule.empty())
    throw std::invalid_argument("experiment: empty schedule");
  for (std::size_t i = 0; i + 1 < schedule.size(); ++i)
    if (schedule[i] >= schedule[i + 1])
      throw std::invalid_argument("experiment: schedule must be strictly increasing");

  ConvergenceReport report;
  report.schedule.assign(schedule.begin(), schedule.end());
  report.norm_tag = norm_kind.tag();
  report.tol = tol;

  std::vector<const RealFunction*> all;
  for (const RealFunction& t : test_set) all.push_back(&t);
  for (const RealFunction& p : probes) all.push_back(&p);

  std::vector<std::vector<double>> limits;
  limits.reserve(all.size());
  for (const RealFunction* fn : all) limits.push_back(A(*fn));

  report.entries.resize(all.size());
  for (std::size_t fi = 0; fi < all.size(); ++fi) {
    report.entries[fi].function_id = all[fi]->name();
    report.entries[fi].is_test_function = fi < test_set.size();
  }

  double sup_norm_seen = 0.0;
  for (int n : schedule) {
    const OperatorInstance Tn = F.member(n);
    sup_norm_seen = std::max(sup_norm_seen, operator_norm(Tn));
    for (std::size_t fi = 0; fi < all.size(); ++fi) {
      std::vector<double> out = Tn(*all[fi]);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] -= limits[fi][i];
      report.entries[fi].errors.emplace_back(n, norm(out, norm_kind));
    }
  }
  report.sup_operator_norm = sup_norm_seen;
  if (!std::isfinite(sup_norm_seen))
    throw std::runtime_error("experiment: unbounded operator norms");

  report.test_set_pass = true;
  report.probes_pass = true;
  for (std::size_t fi = 0; fi < report.entries.size(); ++fi) {
    ConvergenceEntry& e = report.entries[fi];
    e.pass = entry_pass(e.errors, tol);
    (e.is_test_function ? report.test_set_pass : report.probes_pass) &= e.pass;
  }
  report.overall_pass = report.test_set_pass && report.probes_pass;
  return report;
}

} // namespace

ConvergenceReport run_korovkin_experiment(
    const OperatorFamily& F, const OperatorInstance& A,
    std::span<const int> schedule, std::span<const RealFunction> probes,
    const NormKind& norm_kind, std::optional<double> alpha, double tol,
    double hyp_tol, bool simplified_test_set) {
  const GridDomain& K = F.input_domain();
  const bool circle = K.kind() == DomainKind::circle_angle;
  const double a = alpha.value_or(circle ? 0.0 : deficit_of_positivity(K));

  const HypothesisReport hyp = check_hypotheses(A, a, hyp_tol);
  if (!hyp.pass()) throw gate_refused(hyp);

  const std::vector<RealFunction> test_set =
      circle ? trig_test_set(!simplified_test_set)
             : korovkin_test_set(K, a, simplified_test_set);
  return tabulate(F, A, schedule, test_set, probes, norm_kind, tol);
}

ConvergenceReport weyl_experiment(const GridDomain& circle,
                                  std::span<const RealFunction> probes,
                                  double alpha_rot,
                                  std::span<const int> schedule, double tol) {
  if (circle.kind() != DomainKind::circle_angle)
    throw std::domain_error("weyl_experiment: needs a circle domain");
  if (!looks_irrational_over_pi(alpha_rot))
    throw std::invalid_argument(
        "weyl_experiment: rotation angle looks rational over pi "
        "(unique ergodicity fails)");

  const int max_n = *std::max_element(schedule.begin(), schedule.end());
  const OperatorFamily F = rotation_family(circle, alpha_rot, max_n);
  const OperatorInstance A = circle_mean_operator(circle);

  std::vector<RealFunction> test_set;
  test_set.push_back(RealFunction::constant(1.0));
  test_set.push_back(RealFunction("-cos", 1, [](std::span<const double> p) {
    return -std::cos(p[0]);
  }));
  test_set.push_back(RealFunction("-sin", 1, [](std::span<const double> p) {
    return -std::sin(p[0]);
  }));
  test_set.push_back(
      RealFunction("cos^2+sin^2", 1, [](std::span<const double> p) {
        const double c = std::cos(p[0]);
        const double s = std::sin(p[0]);
        return c * c + s * s;
      }));
  return tabulate(F, A, schedule, test_set, probes, NormKind::sup(), tol);
}

std::vector<HypothesisReport> probe_functional_equation(
    std::span<const OperatorInstance> candidates, double alpha, double tol) {
  std::vector<HypothesisReport> out;
  out.reserve(candidates.size());
  for (const OperatorInstance& A : candidates)
    out.push_back(check_hypotheses(A, alpha, tol));
  return out;
}

} // namespace korovkin
