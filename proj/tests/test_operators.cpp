#include <doctest.h>

#include <cmath>

#include "korovkin/bernstein.hpp"
#include "korovkin/operators.hpp"

using namespace korovkin;

namespace {

GridDomain unit_grid(int count = 101) {
  return GridDomain::interval(0.0, 1.0, count);
}

const RealFunction x_fn = RealFunction::projection(0);
const RealFunction one_fn = RealFunction::constant(1.0);

OperatorInstance identity_op(const GridDomain& g) {
  return composition_operator(g, CompositionMap::identity(g));
}

// pointwise f(x)^2: neither subadditive nor comonotone additive
OperatorInstance squaring_op(const GridDomain& g) {
  return OperatorInstance(
      "pointwise-square", g, g,
      [g](const RealFunction& f) {
        std::vector<double> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
          const double v = f(g.point(i));
          out[i] = v * v;
        }
        return out;
      });
}

std::vector<std::pair<RealFunction, RealFunction>> random_pairs(int count,
                                                                std::uint64_t seed) {
  SampleGenerator gen(seed);
  std::vector<std::pair<RealFunction, RealFunction>> out;
  for (int i = 0; i < count; ++i)
    out.emplace_back(gen.next_polynomial(), gen.next_polynomial());
  return out;
}

} // namespace

TEST_CASE("identity operator satisfies every axiom exactly") {
  const GridDomain g = unit_grid(41);
  const OperatorInstance I = identity_op(g);
  const auto pairs = random_pairs(20, 3);
  CHECK(check_sublinear(I, pairs, 0.0).pass);
  CHECK(check_krein(I, pairs, 1e-15).pass);

  SampleGenerator gen(5);
  std::vector<RealFunction> singles;
  for (int i = 0; i < 10; ++i) singles.push_back(gen.next_polynomial());
  CHECK(check_translatable(I, singles, 1e-15, true).pass);
}

TEST_CASE("pointwise squaring fails subadditivity with a witness") {
  const GridDomain g = unit_grid(11);
  const OperatorInstance S = squaring_op(g);
  const std::pair<RealFunction, RealFunction> ones{one_fn, one_fn};
  const auto report =
      check_sublinear(S, std::span(&ones, 1), 1e-9);
  CHECK_FALSE(report.pass);
  CHECK(report.max_violation > 0.1); // T(2)=4 against T(1)+T(1)=2
  CHECK_FALSE(report.witness.empty());

  const auto ca = check_comonotone_additive(S, 1e-9, 42, 4);
  CHECK_FALSE(ca.pass);
}

TEST_CASE("clipping composed with evaluation fails strong translatability") {
  const GridDomain g = unit_grid(11);
  const OperatorInstance T(
      "positive-part", g, g,
      [g](const RealFunction& f) {
        std::vector<double> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
          out[i] = std::max(f(g.point(i)), 0.0);
        return out;
      });
  const RealFunction minus_one = RealFunction::constant(-1.0);
  const auto report =
      check_translatable(T, std::span(&minus_one, 1), 1e-9, true);
  CHECK_FALSE(report.pass); // T(-1+1)=0 but T(-1)+T(1)=1
}

TEST_CASE("negation fails monotonicity; unordered samples are rejected") {
  const GridDomain g = unit_grid(11);
  const OperatorInstance N(
      "negate", g, g,
      [g](const RealFunction& f) {
        std::vector<double> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) out[i] = -f(g.point(i));
        return out;
      });
  const std::pair<RealFunction, RealFunction> ordered{
      RealFunction::constant(0.0), one_fn};
  CHECK_FALSE(check_monotone(N, std::span(&ordered, 1), 1e-9).pass);

  const std::pair<RealFunction, RealFunction> unordered{one_fn,
                                                        RealFunction::constant(0.0)};
  CHECK_THROWS_AS(check_monotone(N, std::span(&unordered, 1), 1e-9),
                  std::invalid_argument);
}

TEST_CASE("shipped operator families pass the axiom suite") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorInstance ops[] = {
      sup_bernstein(g, 4, id),
      max_kantorovich(g, 4, id),
  };
  for (const OperatorInstance& T : ops) {
    for (const AxiomReport& r : run_axiom_suite(T, 1e-9, 42, 20, true)) {
      INFO(T.label(), " axiom ", to_string(r.tag), " violation ",
           r.max_violation, " witness ", r.witness);
      CHECK(r.pass);
    }
  }
  // window sups are additive across comonotone pairs
  CHECK(check_comonotone_additive(ops[0], 1e-10, 9, 8).pass);
}

TEST_CASE("remark-style constant identity T(a*1) = a*T(1)") {
  const GridDomain g = unit_grid(51);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorInstance T = sup_bernstein(g, 6, id);
  const auto T1 = T(one_fn);
  for (double a : {-2.0, -1.0, 0.0, 1.0, 2.0}) {
    const auto Ta = T(RealFunction::constant(a));
    for (std::size_t i = 0; i < Ta.size(); ++i)
      CHECK(Ta[i] == doctest::Approx(a * T1[i]).epsilon(1e-12));
  }
}

TEST_CASE("sublinear operators satisfy -T(-f) <= T(f)") {
  const GridDomain g = unit_grid(51);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorInstance T = sup_bernstein(g, 5, id);
  SampleGenerator gen(17);
  for (int i = 0; i < 10; ++i) {
    const RealFunction f = gen.next_polynomial();
    const auto pos = T(f);
    const auto neg = T(-f);
    for (std::size_t j = 0; j < pos.size(); ++j)
      CHECK(-neg[j] <= pos[j] + 1e-12);
  }
}

TEST_CASE("krein inequality for specific pairs") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const RealFunction x2 = RealFunction("x^2", 1, [](std::span<const double> p) {
    return p[0] * p[0];
  });
  const std::pair<RealFunction, RealFunction> pair{x_fn, x2};
  CHECK(check_krein(kantorovich(g, 3, id), std::span(&pair, 1), 1e-10).pass);
  CHECK(check_krein(identity_op(g), std::span(&pair, 1), 1e-14).pass);
}

TEST_CASE("operator norm is the sup of T(1)") {
  const GridDomain g = unit_grid(21);
  CHECK(operator_norm(identity_op(g)) == 1.0);
  const OperatorInstance twice(
      "twice", g, g,
      [g](const RealFunction& f) {
        std::vector<double> out(g.size());
        for (std::size_t i = 0; i < g.size(); ++i)
          out[i] = 2.0 * f(g.point(i));
        return out;
      });
  CHECK(operator_norm(twice) == 2.0);
}

TEST_CASE("cesaro averaging of families") {
  const GridDomain g = unit_grid(21);
  // T_k(f) = k*f: the order-2 average is 1.5*f
  const OperatorFamily scaled(
      "scaled", g, g, 4, [g](int k) {
        return OperatorInstance(
            "scale" + std::to_string(k), g, g,
            [g, k](const RealFunction& f) {
              std::vector<double> out(g.size());
              for (std::size_t i = 0; i < g.size(); ++i)
                out[i] = k * f(g.point(i));
              return out;
            });
      });
  const OperatorFamily ces = cesaro_family(scaled);
  const auto out = ces.member(2)(x_fn);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(out[i] == doctest::Approx(1.5 * g.point(i)[0]));

  // constant family averages back to itself
  const OperatorFamily constant(
      "const", g, g, 8, [g](int) {
        return composition_operator(g, CompositionMap::identity(g));
      });
  const auto avg = cesaro_family(constant).member(5)(x_fn);
  const auto direct = constant.member(1)(x_fn);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(avg[i] == doctest::Approx(direct[i]).epsilon(1e-14));

  CHECK_THROWS_AS(cesaro_family(scaled).member(5), std::out_of_range);
}
