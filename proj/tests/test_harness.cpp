#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "korovkin/bernstein.hpp"
#include "korovkin/choquet.hpp"
#include "korovkin/harness.hpp"
#include "korovkin/trig.hpp"

using namespace korovkin;

namespace {

const double kPi = std::numbers::pi;
const double kGoldenAngle = 2.0 * kPi * (std::sqrt(5.0) - 1.0) / 2.0;

GridDomain unit_grid(int count = 101) {
  return GridDomain::interval(0.0, 1.0, count);
}

const RealFunction x_fn = RealFunction::projection(0);

RealFunction square_fn() {
  return RealFunction("x^2", 1,
                      [](std::span<const double> p) { return p[0] * p[0]; });
}

RealFunction sin3_fn() {
  return RealFunction("sin(3x)", 1, [](std::span<const double> p) {
    return std::sin(3.0 * p[0]);
  });
}

OperatorInstance mean_operator(const GridDomain& g) {
  const NormKind w = NormKind::l1_trapezoid(g);
  const double total = g.bounds()[0][1] - g.bounds()[0][0];
  return OperatorInstance(
      "interval_mean", g, g,
      [g, weights = w.weights(), total](const RealFunction& f) {
        double mean = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i)
          mean += weights[i] * f(g.point(i));
        mean /= total;
        return std::vector<double>(g.size(), mean);
      });
}

} // namespace

TEST_CASE("hypothesis check accepts unit-preserving substitutions") {
  const GridDomain g = unit_grid(101);
  for (const RealFunction& phi : {x_fn.renamed("identity"), square_fn()}) {
    const OperatorInstance A = composition_operator(g, CompositionMap(phi, g));
    const HypothesisReport r = check_hypotheses(A, 0.0, 1e-10);
    CHECK(r.form == "square_sum");
    CHECK(r.min_unit_image == doctest::Approx(1.0));
    CHECK(r.strict_positivity_pass);
    CHECK(r.residual < 1e-10);
    CHECK(r.pass());
  }
}

TEST_CASE("hypothesis check rejects the circle mean with residual one") {
  const GridDomain circle = GridDomain::circle(2048);
  const OperatorInstance A = circle_mean_operator(circle);
  const HypothesisReport r = check_hypotheses(A, 0.0, 1e-8);
  CHECK(r.form == "trig");
  CHECK(r.strict_positivity_pass);
  CHECK(r.residual == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_FALSE(r.pass());
}

TEST_CASE("hypothesis check flags the interval mean") {
  const GridDomain g = unit_grid(201);
  const HypothesisReport r = check_hypotheses(mean_operator(g), 0.0, 1e-8);
  // A(1)A(x^2) = 1/3 while (A(-x))^2 = 1/4
  CHECK(r.residual == doctest::Approx(1.0 / 12.0).epsilon(1e-3));
  CHECK_FALSE(r.pass());
}

TEST_CASE("functional equation survey ranks candidates") {
  const GridDomain g = unit_grid(101);
  std::vector<OperatorInstance> candidates;
  candidates.push_back(composition_operator(g, CompositionMap::identity(g)));
  candidates.push_back(
      composition_operator(g, CompositionMap(square_fn(), g)));
  // max of two distinct substitutions switches branch mid-interval
  const CompositionMap phi1(0.5 * x_fn, g);
  const CompositionMap phi2(square_fn(), g);
  const OperatorInstance c1 = composition_operator(g, phi1);
  const OperatorInstance c2 = composition_operator(g, phi2);
  candidates.push_back(OperatorInstance(
      "max-of-substitutions", g, g,
      [c1, c2](const RealFunction& f) {
        std::vector<double> a = c1(f);
        const std::vector<double> b = c2(f);
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], b[i]);
        return a;
      }));
  candidates.push_back(mean_operator(g));

  const auto reports = probe_functional_equation(candidates, 0.0, 1e-9);
  REQUIRE(reports.size() == 4);
  CHECK(reports[0].residual < 1e-12);
  CHECK(reports[1].residual < 1e-12);
  CHECK(reports[2].residual > 1e-3);
  CHECK(reports[3].residual > 1e-3);
}

TEST_CASE("a-priori bound: identity pair") {
  const GridDomain g = unit_grid(101);
  const OperatorInstance I = composition_operator(g, CompositionMap::identity(g));
  const AprioriReport r = apriori_bound(I, I, sin3_fn(), 0.1, 0.0);
  CHECK(r.lhs == doctest::Approx(0.0));
  CHECK(r.rhs == doctest::Approx(0.1)); // only the epsilon term survives
  CHECK(r.pass);
}

TEST_CASE("a-priori bound holds across families, probes, epsilons") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorInstance A = composition_operator(g, id);

  const RealFunction probes[] = {abs(x_fn - 0.5), sin3_fn(), square_fn()};
  const OperatorInstance ops[] = {
      sup_bernstein(g, 8, id),
      max_kantorovich(g, 4, id),
      choquet_kantorovich(g, 6, id, DistortionFunction::sqrt(), 128),
  };
  for (const OperatorInstance& T : ops)
    for (const RealFunction& f : probes)
      for (double eps : {0.5, 0.1, 0.02}) {
        const AprioriReport r = apriori_bound(T, A, f, eps, 0.0);
        INFO(T.label(), " f=", f.name(), " eps=", eps, " slack=", r.slack);
        CHECK(r.pass);
        CHECK(r.slack >= -1e-8);
      }
}

TEST_CASE("korovkin experiment passes for the window-sup family") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorFamily F = sup_bernstein_family(g, id, 64);
  const OperatorInstance A = composition_operator(g, id);
  const int schedule[] = {4, 8, 16, 32, 64};
  const RealFunction probes[] = {abs(x_fn - 0.5), sin3_fn()};

  const ConvergenceReport report = run_korovkin_experiment(
      F, A, schedule, probes, NormKind::sup(), std::nullopt, 0.12);
  CHECK(report.test_set_pass);
  CHECK(report.probes_pass);
  CHECK(report.overall_pass);
  CHECK(report.sup_operator_norm == doctest::Approx(1.0).epsilon(1e-9));
  for (const ConvergenceEntry& e : report.entries) {
    INFO(e.function_id);
    const bool noise = e.errors.back().second < 1e-12;
    CHECK((noise || e.errors.front().second >= e.errors.back().second));
  }
}

TEST_CASE("korovkin experiment refuses a failing gate") {
  const GridDomain circle = GridDomain::circle(512);
  const OperatorFamily F = rotation_family(circle, kGoldenAngle, 64);
  const OperatorInstance A = circle_mean_operator(circle);
  const int schedule[] = {4, 16, 64};
  try {
    run_korovkin_experiment(F, A, schedule, {}, NormKind::sup(), std::nullopt,
                            0.05);
    FAIL("gate should have refused");
  } catch (const gate_refused& e) {
    CHECK(e.report.form == "trig");
    CHECK(e.report.residual == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("gate soundness: test functions double as probes") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorFamily F = max_kantorovich_family(g, id, 64);
  const OperatorInstance A = composition_operator(g, id);
  const int schedule[] = {4, 16, 64};
  const auto probes = korovkin_test_set(g, 0.0);

  const ConvergenceReport report = run_korovkin_experiment(
      F, A, schedule, probes, NormKind::l1_trapezoid(g), std::nullopt, 0.05);
  CHECK(report.test_set_pass == report.probes_pass);
  CHECK(report.overall_pass);
}

TEST_CASE("strict positivity transfers the product bound") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  // A(f) = (1 + x) * f(x): monotone, linear, with A(1) strictly positive
  const OperatorInstance A(
      "weighted-identity", g, g,
      [g](const RealFunction& f) {
        std::vector<double> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
          const double x = g.point(i)[0];
          out[i] = (1.0 + x) * f(g.point(i));
        }
        return out;
      });
  const auto A1 = A(RealFunction::constant(1.0));
  const double min_a1 = *std::min_element(A1.begin(), A1.end());
  REQUIRE(min_a1 > 0.0);

  const OperatorInstance T = kantorovich(g, 8, id);
  for (const RealFunction& f : {abs(x_fn - 0.5), square_fn()}) {
    const auto Tf = T(f);
    const auto Af = A(f);
    double sup_err = 0.0, sup_scaled = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double d = Tf[i] - Af[i];
      sup_err = std::max(sup_err, std::abs(d));
      sup_scaled = std::max(sup_scaled, std::abs(d * A1[i]));
    }
    CHECK(min_a1 * sup_err <= sup_scaled + 1e-12);
  }
}

TEST_CASE("cesaro averages converge to the same limit") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorFamily F = kantorovich_family(g, id, 64);
  const OperatorInstance A = composition_operator(g, id);
  const int schedule[] = {4, 16, 64};
  const RealFunction probes[] = {abs(x_fn - 0.5)};

  const ConvergenceReport direct = run_korovkin_experiment(
      F, A, schedule, probes, NormKind::sup(), std::nullopt, 0.1);
  const ConvergenceReport averaged = run_korovkin_experiment(
      cesaro_family(F), A, schedule, probes, NormKind::sup(), std::nullopt,
      0.25);
  CHECK(direct.overall_pass);
  CHECK(averaged.overall_pass);
}

TEST_CASE("weyl experiment matches the geometric-sum envelope") {
  const GridDomain circle = GridDomain::circle(1024);
  const RealFunction probes[] = {
      RealFunction("cos", 1,
                   [](std::span<const double> p) { return std::cos(p[0]); }),
      RealFunction("cos^2", 1,
                   [](std::span<const double> p) {
                     const double c = std::cos(p[0]);
                     return c * c;
                   }),
  };
  const int schedule[] = {16, 64, 256, 1024};
  const ConvergenceReport report =
      weyl_experiment(circle, probes, kGoldenAngle, schedule, 5e-2);
  CHECK(report.overall_pass);

  // envelope |(1/n) sum e^{ik a}| <= (2/n)/|1-e^{ia}| for the cosine probe
  const double denom = std::abs(2.0 * std::sin(kGoldenAngle / 2.0));
  for (const ConvergenceEntry& e : report.entries) {
    if (e.function_id != "cos") continue;
    for (const auto& [n, err] : e.errors)
      CHECK(err <= (2.0 / n) / denom + 1e-6);
  }
}

TEST_CASE("weyl experiment rejects rational rotations") {
  const GridDomain circle = GridDomain::circle(256);
  const int schedule[] = {4, 16};
  CHECK_THROWS_AS(
      weyl_experiment(circle, {}, kPi / 2.0, schedule, 0.1),
      std::invalid_argument);
}
