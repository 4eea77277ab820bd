#include <doctest.h>

#include <cmath>

#include "korovkin/bernstein.hpp"

using namespace korovkin;

namespace {

GridDomain unit_grid(int count = 101) {
  return GridDomain::interval(0.0, 1.0, count);
}

const RealFunction x_fn = RealFunction::projection(0);
const RealFunction one_fn = RealFunction::constant(1.0);

RealFunction square_fn() {
  return RealFunction("x^2", 1,
                      [](std::span<const double> p) { return p[0] * p[0]; });
}

double sup_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

} // namespace

TEST_CASE("basis values and combinatorial sums") {
  const auto b1 = bernstein_basis(1, 0.5);
  CHECK(b1[0] == doctest::Approx(0.5));
  CHECK(b1[1] == doctest::Approx(0.5));

  // first and second moment sums at n=3, x=0.5
  const auto b3 = bernstein_basis(3, 0.5);
  double m1 = 0.0, m2 = 0.0;
  for (int k = 0; k <= 3; ++k) {
    m1 += k * b3[k];
    m2 += k * k * b3[k];
  }
  CHECK(m1 == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(m2 == doctest::Approx(3.0).epsilon(1e-12));

  CHECK_THROWS_AS(bernstein_basis(3, 1.5), std::domain_error);
  CHECK_THROWS_AS(bernstein_basis(0, 0.5), std::invalid_argument);
}

TEST_CASE("basis partition of unity and range") {
  for (int n : {1, 7, 33, 64}) {
    for (int ix = 0; ix <= 20; ++ix) {
      const double x = ix / 20.0;
      const auto b = bernstein_basis(n, x);
      double sum = 0.0;
      for (double v : b) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        sum += v;
      }
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("composition map validates its range") {
  const GridDomain g = unit_grid(11);
  CHECK_NOTHROW(CompositionMap(square_fn(), g));
  CHECK_THROWS_AS(CompositionMap(x_fn + 0.5, g), std::domain_error);
  CHECK_THROWS_AS(CompositionMap(RealFunction::constant(-0.1), g),
                  std::domain_error);
}

TEST_CASE("composite simpson is exact on cubics") {
  const RealFunction cubic = RealFunction::polynomial({1.0, -2.0, 3.0, 4.0});
  // antiderivative: t - t^2 + t^3 + t^4
  const double expect = (0.7 - 0.49 + 0.343 + 0.2401) - (0.2 - 0.04 + 0.008 + 0.0016);
  CHECK(composite_simpson(cubic, 0.2, 0.7, 9) ==
        doctest::Approx(expect).epsilon(1e-14));
  CHECK_THROWS_AS(composite_simpson(cubic, 0.0, 1.0, 4),
                  std::invalid_argument);
}

TEST_CASE("window-sup operator: unital and hand-checked point") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorInstance T1 = sup_bernstein(g, 1, id);

  const auto ones = T1(one_fn);
  for (double v : ones) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));

  // n=1 at x=0: windows [0,1/2],[1/2,1]; p_{1,k}(0) = (1,0); sup of t is 1/2
  const auto tx = T1(x_fn);
  CHECK(tx.front() == doctest::Approx(0.5).epsilon(1e-14));
  // at x=1: p_{1,k}(1) = (0,1); sup over [1/2,1] is 1
  CHECK(tx.back() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("window-sup operator converges on -x") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const auto target = g.sample(-x_fn);
  double prev = 1e9;
  for (int n : {4, 16, 64}) {
    const auto out = sup_bernstein(g, n, id)(-x_fn);
    const double err = sup_diff(out, target);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 0.05);
}

TEST_CASE("window-sup refinement consistency") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const RealFunction kink = abs(x_fn - 0.5); // Lipschitz constant 1
  const int n = 8;
  const auto a = sup_bernstein(g, n, id, 1)(kink);
  const auto b = sup_bernstein(g, n, id, 2)(kink);
  // window sample spacing at refinement 1 bounds the sup gap for Lipschitz f
  const double spacing = 1.0 / ((n + 1) * (1 * ((101 + n) / (n + 1)) + 1));
  CHECK(sup_diff(a, b) <= spacing + 1e-15);
}

TEST_CASE("kantorovich closed forms") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const CompositionMap sq(square_fn(), g);

  // n=1, x=0 spot values
  const OperatorInstance K1 = kantorovich(g, 1, id);
  CHECK(K1(-x_fn).front() == doctest::Approx(-0.25).epsilon(1e-14));
  CHECK(K1(square_fn()).front() ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-14));

  for (const CompositionMap& phi : {id, sq}) {
    for (int n : {1, 2, 5, 16}) {
      const OperatorInstance Kn = kantorovich(g, n, phi);
      const auto u = Kn(one_fn);
      const auto mx = Kn(-x_fn);
      const auto x2 = Kn(square_fn());
      for (std::size_t i = 0; i < g.size(); ++i) {
        const double p = phi(g.point(i)[0]);
        const double np1 = n + 1.0;
        CHECK(u[i] == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(mx[i] == doctest::Approx(-n * p / np1 - 0.5 / np1).epsilon(1e-12));
        CHECK(x2[i] == doctest::Approx(n * (n - 1.0) * p * p / (np1 * np1) +
                                       2.0 * n * p / (np1 * np1) +
                                       1.0 / (3.0 * np1 * np1))
                           .epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("kantorovich l1 contraction") {
  const GridDomain g = unit_grid(257);
  const CompositionMap id = CompositionMap::identity(g);
  const NormKind l1 = NormKind::l1_trapezoid(g);
  const RealFunction probes[] = {
      RealFunction("1+sin3x", 1,
                   [](std::span<const double> p) {
                     return 1.0 + std::sin(3.0 * p[0]);
                   }),
      x_fn - 0.3,
      RealFunction::polynomial({0.5, -2.0, 1.5, 0.0, 1.0}),
  };
  for (const auto& f : probes) {
    // oracle: integral of |f| by fine midpoint sum
    double total = 0.0;
    const int steps = 100000;
    for (int i = 0; i < steps; ++i)
      total += std::abs(f((i + 0.5) / steps)) / steps;
    for (int n : {2, 8, 32}) {
      const auto out = kantorovich(g, n, id)(f);
      CHECK(norm(out, l1) <= total + 1e-4);
    }
  }
}

TEST_CASE("max-kantorovich dominates members and keeps closed-form values") {
  const GridDomain g = unit_grid(101);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorInstance M1 = max_kantorovich(g, 1, id);

  const auto ones = M1(one_fn);
  for (double v : ones) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));

  // max(K_1(x^2)(0), K_2(x^2)(0)) = max(1/12, 1/27) = 1/12
  CHECK(M1(square_fn()).front() ==
        doctest::Approx(1.0 / 12.0).epsilon(1e-13));

  const auto lo = kantorovich(g, 1, id)(square_fn());
  const auto hi = kantorovich(g, 2, id)(square_fn());
  const auto mx = M1(square_fn());
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(mx[i] >= lo[i] - 1e-15);
    CHECK(mx[i] >= hi[i] - 1e-15);
    CHECK(mx[i] <= std::max(lo[i], hi[i]) + 1e-15);
  }
}

TEST_CASE("composition operator") {
  const GridDomain g = unit_grid(21);
  const OperatorInstance A = composition_operator(g, CompositionMap::identity(g));
  const RealFunction f = RealFunction::polynomial({0.3, -1.0, 2.0});
  CHECK(sup_diff(A(f), g.sample(f)) == 0.0);

  const OperatorInstance Asq = composition_operator(g, CompositionMap(square_fn(), g));
  const auto out = Asq(x_fn);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const double x = g.point(i)[0];
    CHECK(out[i] == doctest::Approx(x * x));
  }
}

TEST_CASE("tensor window-sup operator on the unit square") {
  const std::array<std::array<double, 2>, 2> b{{{0.0, 1.0}, {0.0, 1.0}}};
  const std::array<int, 2> c{17, 17};
  const GridDomain sq = GridDomain::box(b, c);
  const GridDomain axis = unit_grid(17);
  const CompositionMap id = CompositionMap::identity(axis);

  const OperatorInstance T1 = tensor_sup_bernstein_2d(sq, 1, id);
  const auto ones = T1(one_fn);
  for (double v : ones) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));

  // y-independent probe agrees with the 1-D operator
  const OperatorInstance T1d = sup_bernstein(axis, 1, id, 2);
  const auto col = T1d(x_fn);
  const auto full = T1(x_fn);
  for (std::size_t i = 0; i < sq.size(); ++i) {
    const double x = sq.point(i)[0];
    std::size_t xi = 0;
    while (axis.point(xi)[0] != x) ++xi;
    CHECK(full[i] == doctest::Approx(col[xi]).epsilon(1e-13));
  }
  CHECK(full.front() == doctest::Approx(0.5).epsilon(1e-13)); // (0,0) value

  // x+y converges toward the identity image
  const RealFunction plus("x+y", 2, [](std::span<const double> p) {
    return p[0] + p[1];
  });
  const auto target = sq.sample(plus);
  const double e2 = sup_diff(tensor_sup_bernstein_2d(sq, 2, id)(plus), target);
  const double e16 = sup_diff(tensor_sup_bernstein_2d(sq, 16, id)(plus), target);
  CHECK(e16 < e2);

  CHECK_THROWS_AS(tensor_sup_bernstein_2d(axis, 1, id), std::domain_error);
}

TEST_CASE("families expose members and reject out-of-range indices") {
  const GridDomain g = unit_grid(33);
  const CompositionMap id = CompositionMap::identity(g);
  const OperatorFamily F = sup_bernstein_family(g, id, 8);
  CHECK(F.member(8)(one_fn).size() == g.size());
  CHECK_THROWS_AS(F.member(9), std::out_of_range);
  CHECK_THROWS_AS(F.member(0), std::out_of_range);
}
