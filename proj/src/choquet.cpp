#include "korovkin/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace korovkin {

DistortionFunction::DistortionFunction(RealFunction g, std::string tag)
    : g_(std::move(g)), tag_(std::move(tag)) {
  constexpr int kProbe = 1001;
  constexpr double kTol = 1e-12;
  std::vector<double> v(kProbe);
  for (int i = 0; i < kProbe; ++i) {
    v[i] = g_(static_cast<double>(i) / (kProbe - 1));
    if (!std::isfinite(v[i]))
      throw std::domain_error("DistortionFunction: non-finite value");
  }
  if (std::abs(v.front()) > kTol || std::abs(v.back() - 1.0) > kTol)
    throw std::domain_error("DistortionFunction: needs g(0)=0 and g(1)=1");
  for (int i = 0; i + 1 < kProbe; ++i)
    if (!(v[i] < v[i + 1]))
      throw std::domain_error("DistortionFunction: not strictly increasing");
  // midpoint concavity over all probe pairs with a grid midpoint
  for (int i = 0; i < kProbe; ++i)
    for (int j = i + 2; j < kProbe; j += 2)
      if (v[(i + j) / 2] < 0.5 * (v[i] + v[j]) - kTol)
        throw std::domain_error("DistortionFunction: not concave");
}

DistortionFunction DistortionFunction::identity() {
  return DistortionFunction(RealFunction::projection(0).renamed("t"),
                            "identity");
}

DistortionFunction DistortionFunction::power(double p) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("DistortionFunction: power needs 0 < p <= 1");
  char tag[32];
  std::snprintf(tag, sizeof(tag), "power:%g", p);
  return DistortionFunction(
      RealFunction("t^" + std::to_string(p), 1,
                   [p](std::span<const double> q) { return std::pow(q[0], p); }),
      tag);
}

DistortionFunction DistortionFunction::sqrt() {
  return DistortionFunction(
      RealFunction("sqrt(t)", 1,
                   [](std::span<const double> q) { return std::sqrt(q[0]); }),
      "sqrt");
}

namespace {

// sorted-sum form; exactly translation-equivariant for all real shifts
double choquet_of_samples(std::vector<double>& values, double cell_measure,
                          const DistortionFunction& g) {
  std::sort(values.begin(), values.end(), std::greater<double>());
  double acc = 0.0;
  double prev = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double cum = g(cell_measure * static_cast<double>(i + 1));
    acc += values[i] * (cum - prev);
    prev = cum;
  }
  return acc;
}

} // namespace

double choquet_integral(const RealFunction& f, double a, double b,
                        const DistortionFunction& g, int resolution) {
  if (!(b > a)) throw std::invalid_argument("choquet_integral: needs b > a");
  if (resolution < 2)
    throw std::invalid_argument("choquet_integral: resolution must be >= 2");
  const double cell = (b - a) / resolution;
  std::vector<double> values(static_cast<std::size_t>(resolution));
  for (int i = 0; i < resolution; ++i) values[i] = f(a + (i + 0.5) * cell);
  return choquet_of_samples(values, cell, g);
}

OperatorInstance choquet_kantorovich(const GridDomain& domain, int n,
                                     const CompositionMap& phi,
                                     const DistortionFunction& g,
                                     int resolution) {
  if (domain.dimension() != 1 || domain.kind() == DomainKind::circle_angle)
    throw std::domain_error("choquet_kantorovich: needs a 1-D interval grid");
  if (n < 1) throw std::invalid_argument("choquet_kantorovich: n must be >= 1");
  if (resolution < 2)
    throw std::invalid_argument("choquet_kantorovich: resolution must be >= 2");

  const double window_len = 1.0 / (n + 1);
  const double normalizer = g(window_len);
  if (!(normalizer > 0.0))
    throw std::domain_error("choquet_kantorovich: vanishing window measure");

  const double cell = window_len / resolution;
  PointSet nodes;
  std::vector<std::vector<double>> window_pts(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const double lo = static_cast<double>(k) / (n + 1);
    window_pts[k].resize(static_cast<std::size_t>(resolution));
    for (int i = 0; i < resolution; ++i) {
      window_pts[k][i] = lo + (i + 0.5) * cell;
      nodes.push(window_pts[k][i]);
    }
  }

  std::vector<std::vector<double>> B(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    B[i] = bernstein_basis(n, phi(domain.point(i)[0]));

  auto apply = [window_pts = std::move(window_pts), B = std::move(B), g, cell,
                normalizer, n](const RealFunction& f) {
    std::vector<double> wterm(static_cast<std::size_t>(n) + 1);
    std::vector<double> values;
    for (int k = 0; k <= n; ++k) {
      values.resize(window_pts[k].size());
      for (std::size_t i = 0; i < values.size(); ++i)
        values[i] = f(window_pts[k][i]);
      wterm[k] = choquet_of_samples(values, cell, g) / normalizer;
    }
    std::vector<double> out(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) acc += B[i][k] * wterm[k];
      out[i] = acc;
    }
    return out;
  };
  return OperatorInstance("choquet_kantorovich[" + std::to_string(n) + "," +
                              g.tag() + "]",
                          domain, domain, std::move(apply), std::move(nodes));
}

OperatorFamily choquet_kantorovich_family(const GridDomain& domain,
                                          const CompositionMap& phi,
                                          const DistortionFunction& g,
                                          int max_n, int resolution) {
  return OperatorFamily(
      "choquet_kantorovich", domain, domain, max_n,
      [domain, phi, g, resolution](int n) {
        return choquet_kantorovich(domain, n, phi, g, resolution);
      });
}

OperatorInstance choquet_functional(const GridDomain& domain,
                                    const DistortionFunction& g,
                                    int resolution) {
  if (domain.dimension() != 1)
    throw std::domain_error("choquet_functional: 1-D domains only");
  const auto [a, b] = domain.bounds()[0];
  if (!(b > a))
    throw std::domain_error("choquet_functional: degenerate interval");
  const GridDomain point = GridDomain::interval(0.0, 0.0, 1);
  const double cell = (b - a) / resolution;
  PointSet nodes;
  for (int i = 0; i < resolution; ++i) nodes.push(a + (i + 0.5) * cell);
  auto apply = [a, b, g, resolution](const RealFunction& f) {
    return std::vector<double>{choquet_integral(f, a, b, g, resolution)};
  };
  return OperatorInstance("choquet_integral[" + g.tag() + "]", domain, point,
                          std::move(apply), std::move(nodes));
}

} // namespace korovkin
