#include "korovkin/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace korovkin {

std::vector<double> bernstein_basis(int n, double x) {
  if (n < 1) throw std::invalid_argument("bernstein_basis: degree must be >= 1");
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("bernstein_basis: x outside [0,1]");
  // b holds the degree-m basis after m rounds of the convex recurrence
  std::vector<double> b(static_cast<std::size_t>(n) + 1, 0.0);
  b[0] = 1.0;
  const double y = 1.0 - x;
  for (int m = 1; m <= n; ++m) {
    b[m] = x * b[m - 1];
    for (int k = m - 1; k >= 1; --k) b[k] = y * b[k] + x * b[k - 1];
    b[0] = y * b[0];
  }
  return b;
}

CompositionMap::CompositionMap(RealFunction phi, const GridDomain& domain)
    : phi_(std::move(phi)) {
  if (domain.dimension() != 1)
    throw std::domain_error("CompositionMap: 1-D base domains only");
  const auto [lo, hi] = domain.bounds()[0];
  for (std::size_t i = 0; i < domain.size(); ++i) {
    const double v = phi_(domain.point(i));
    if (!std::isfinite(v) || v < lo || v > hi)
      throw std::domain_error("CompositionMap: phi leaves the domain bounds");
  }
}

CompositionMap CompositionMap::identity(const GridDomain& domain) {
  return CompositionMap(RealFunction::projection(0).renamed("identity"),
                        domain);
}

double composite_simpson(const RealFunction& f, double a, double b,
                         int nodes) {
  if (nodes < 3 || nodes % 2 == 0)
    throw std::invalid_argument("composite_simpson: nodes must be odd >= 3");
  const double h = (b - a) / (nodes - 1);
  double acc = f(a) + f(b);
  for (int i = 1; i < nodes - 1; ++i)
    acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return acc * h / 3.0;
}

namespace {

struct Windows {
  int n;
  double lo(int k) const { return static_cast<double>(k) / (n + 1); }
  double hi(int k) const { return static_cast<double>(k + 1) / (n + 1); }
};

// equispaced window samples, both endpoints included
std::vector<double> window_samples(double lo, double hi, int npts) {
  std::vector<double> pts(static_cast<std::size_t>(npts));
  for (int i = 0; i < npts; ++i)
    pts[i] = lo + (hi - lo) * i / (npts - 1);
  pts.back() = hi;
  return pts;
}

// basis matrix B[i][k] = p_{n,k}(phi(x_i)) over the output grid
std::vector<std::vector<double>> basis_matrix(const GridDomain& domain, int n,
                                              const CompositionMap& phi) {
  std::vector<std::vector<double>> B(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    B[i] = bernstein_basis(n, phi(domain.point(i)[0]));
  return B;
}

void require_unit_interval(const GridDomain& domain, const char* who) {
  if (domain.dimension() != 1 || domain.kind() == DomainKind::circle_angle)
    throw std::domain_error(std::string(who) + ": needs a 1-D interval grid");
  if (domain.bounds()[0][0] < 0.0 || domain.bounds()[0][1] > 1.0)
    throw std::domain_error(std::string(who) + ": grid must lie in [0,1]");
}

} // namespace

OperatorInstance sup_bernstein(const GridDomain& domain, int n,
                               const CompositionMap& phi, int refinement) {
  require_unit_interval(domain, "sup_bernstein");
  if (n < 1) throw std::invalid_argument("sup_bernstein: n must be >= 1");
  if (refinement < 1)
    throw std::invalid_argument("sup_bernstein: refinement must be >= 1");

  const Windows w{n};
  const int interior =
      refinement *
      static_cast<int>((domain.size() + static_cast<std::size_t>(n)) / (n + 1));
  const int npts = interior + 2;
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(n) + 1);
  PointSet all_samples;
  for (int k = 0; k <= n; ++k) {
    samples[k] = window_samples(w.lo(k), w.hi(k), npts);
    for (double t : samples[k]) all_samples.push(t);
  }
  auto B = basis_matrix(domain, n, phi);

  auto apply = [samples = std::move(samples), B = std::move(B),
                n](const RealFunction& f) {
    std::vector<double> wmax(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
      double m = -std::numeric_limits<double>::infinity();
      for (double t : samples[k]) m = std::max(m, f(t));
      wmax[k] = m;
    }
    std::vector<double> out(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) acc += B[i][k] * wmax[k];
      out[i] = acc;
    }
    return out;
  };
  return OperatorInstance("sup_bernstein[" + std::to_string(n) + "]", domain,
                          domain, std::move(apply), std::move(all_samples));
}

OperatorInstance kantorovich(const GridDomain& domain, int n,
                             const CompositionMap& phi, int nodes_per_window) {
  require_unit_interval(domain, "kantorovich");
  if (n < 1) throw std::invalid_argument("kantorovich: n must be >= 1");
  if (nodes_per_window < 9) nodes_per_window = 9;
  if (nodes_per_window % 2 == 0) ++nodes_per_window;

  const Windows w{n};
  PointSet nodes;
  for (int k = 0; k <= n; ++k) {
    const double h = (w.hi(k) - w.lo(k)) / (nodes_per_window - 1);
    for (int i = 0; i < nodes_per_window; ++i) nodes.push(w.lo(k) + i * h);
  }
  auto B = basis_matrix(domain, n, phi);

  auto apply = [B = std::move(B), n, nodes_per_window,
                w](const RealFunction& f) {
    std::vector<double> wint(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      wint[k] = composite_simpson(f, w.lo(k), w.hi(k), nodes_per_window);
    std::vector<double> out(B.size());
    for (std::size_t i = 0; i < B.size(); ++i) {
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) acc += B[i][k] * wint[k];
      out[i] = (n + 1) * acc;
    }
    return out;
  };
  return OperatorInstance("kantorovich[" + std::to_string(n) + "]", domain,
                          domain, std::move(apply), std::move(nodes));
}

OperatorInstance max_kantorovich(const GridDomain& domain, int n,
                                 const CompositionMap& phi,
                                 int nodes_per_window) {
  OperatorInstance lo = kantorovich(domain, n, phi, nodes_per_window);
  OperatorInstance hi = kantorovich(domain, n + 1, phi, nodes_per_window);
  PointSet samples = lo.input_samples();
  samples.merge(hi.input_samples());
  auto apply = [lo = std::move(lo), hi = std::move(hi)](const RealFunction& f) {
    std::vector<double> a = lo(f);
    const std::vector<double> b = hi(f);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = std::max(a[i], b[i]);
    return a;
  };
  return OperatorInstance("max_kantorovich[" + std::to_string(n) + "]", domain,
                          domain, std::move(apply), std::move(samples));
}

OperatorInstance composition_operator(const GridDomain& domain,
                                      const CompositionMap& phi) {
  PointSet samples;
  std::vector<double> images(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    images[i] = phi(domain.point(i)[0]);
    samples.push(images[i]);
  }
  auto apply = [images = std::move(images)](const RealFunction& f) {
    std::vector<double> out(images.size());
    for (std::size_t i = 0; i < images.size(); ++i) out[i] = f(images[i]);
    return out;
  };
  return OperatorInstance("composition(" + phi.fn().name() + ")", domain,
                          domain, std::move(apply), std::move(samples));
}

OperatorInstance tensor_sup_bernstein_2d(const GridDomain& domain, int n,
                                         const CompositionMap& phi,
                                         int refinement) {
  if (domain.dimension() != 2)
    throw std::domain_error("tensor_sup_bernstein_2d: needs a 2-D grid");
  for (const auto& b : domain.bounds())
    if (b[0] < 0.0 || b[1] > 1.0)
      throw std::domain_error("tensor_sup_bernstein_2d: grid must lie in [0,1]^2");
  if (n < 1)
    throw std::invalid_argument("tensor_sup_bernstein_2d: n must be >= 1");

  // recover per-axis node lists from the product grid
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < domain.size(); ++i) {
    xs.push_back(domain.point(i)[0]);
    ys.push_back(domain.point(i)[1]);
  }
  auto uniq = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  uniq(xs);
  uniq(ys);

  const Windows w{n};
  const std::size_t per_axis = std::max(xs.size(), ys.size());
  const int interior =
      refinement *
      static_cast<int>((per_axis + static_cast<std::size_t>(n)) / (n + 1));
  const int npts = interior + 2;
  std::vector<std::vector<double>> samples(static_cast<std::size_t>(n) + 1);
  PointSet all_samples;
  all_samples.dim = 2;
  for (int k = 0; k <= n; ++k) samples[k] = window_samples(w.lo(k), w.hi(k), npts);
  for (int k = 0; k <= n; ++k)
    for (int j = 0; j <= n; ++j)
      for (double t : samples[k])
        for (double s : samples[j]) {
          all_samples.push(t);
          all_samples.push(s);
        }

  std::vector<std::vector<double>> Bx(xs.size()), By(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i)
    Bx[i] = bernstein_basis(n, phi(xs[i]));
  for (std::size_t i = 0; i < ys.size(); ++i)
    By[i] = bernstein_basis(n, phi(ys[i]));

  auto axis_index = [](const std::vector<double>& axis, double v) {
    const auto it = std::lower_bound(axis.begin(), axis.end(), v);
    return static_cast<std::size_t>(it - axis.begin());
  };
  std::vector<std::pair<std::size_t, std::size_t>> point_axes(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i)
    point_axes[i] = {axis_index(xs, domain.point(i)[0]),
                     axis_index(ys, domain.point(i)[1])};

  auto apply = [samples = std::move(samples), Bx = std::move(Bx),
                By = std::move(By), point_axes = std::move(point_axes),
                n](const RealFunction& f) {
    std::vector<std::vector<double>> wmax(
        static_cast<std::size_t>(n) + 1,
        std::vector<double>(static_cast<std::size_t>(n) + 1));
    for (int k = 0; k <= n; ++k)
      for (int j = 0; j <= n; ++j) {
        double m = -std::numeric_limits<double>::infinity();
        for (double t : samples[k])
          for (double s : samples[j]) m = std::max(m, f(t, s));
        wmax[k][j] = m;
      }
    std::vector<double> out(point_axes.size());
    for (std::size_t i = 0; i < point_axes.size(); ++i) {
      const auto& bx = Bx[point_axes[i].first];
      const auto& by = By[point_axes[i].second];
      double acc = 0.0;
      for (int k = 0; k <= n; ++k) {
        double inner = 0.0;
        for (int j = 0; j <= n; ++j) inner += by[j] * wmax[k][j];
        acc += bx[k] * inner;
      }
      out[i] = acc;
    }
    return out;
  };
  return OperatorInstance("tensor_sup_bernstein[" + std::to_string(n) + "]",
                          domain, domain, std::move(apply),
                          std::move(all_samples));
}

OperatorFamily sup_bernstein_family(const GridDomain& domain,
                                    const CompositionMap& phi, int max_n,
                                    int refinement) {
  return OperatorFamily(
      "sup_bernstein", domain, domain, max_n,
      [domain, phi, refinement](int n) {
        return sup_bernstein(domain, n, phi, refinement);
      });
}

OperatorFamily kantorovich_family(const GridDomain& domain,
                                  const CompositionMap& phi, int max_n,
                                  int nodes_per_window) {
  return OperatorFamily(
      "kantorovich", domain, domain, max_n,
      [domain, phi, nodes_per_window](int n) {
        return kantorovich(domain, n, phi, nodes_per_window);
      });
}

OperatorFamily max_kantorovich_family(const GridDomain& domain,
                                      const CompositionMap& phi, int max_n,
                                      int nodes_per_window) {
  return OperatorFamily(
      "max_kantorovich", domain, domain, max_n,
      [domain, phi, nodes_per_window](int n) {
        return max_kantorovich(domain, n, phi, nodes_per_window);
      });
}

} // namespace korovkin
