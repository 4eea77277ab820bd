#include "korovkin/domain.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace korovkin {

GridDomain::GridDomain(int dim, DomainKind kind, std::vector<double> coords,
                       std::vector<std::array<double, 2>> bounds)
    : dim_(dim), kind_(kind), coords_(std::move(coords)),
      bounds_(std::move(bounds)) {
  validate();
}

void GridDomain::validate() const {
  if (dim_ < 1) throw std::domain_error("GridDomain: dimension must be >= 1");
  if (coords_.empty() || coords_.size() % dim_ != 0)
    throw std::domain_error("GridDomain: empty or ragged point list");
  if (static_cast<int>(bounds_.size()) != dim_)
    throw std::domain_error("GridDomain: bounds/dimension mismatch");
  for (double c : coords_)
    if (!std::isfinite(c))
      throw std::domain_error("GridDomain: non-finite coordinate");
  for (std::size_t i = 0; i < size(); ++i) {
    const auto p = point(i);
    for (int k = 0; k < dim_; ++k)
      if (p[k] < bounds_[k][0] || p[k] > bounds_[k][1])
        throw std::domain_error("GridDomain: point outside bounds");
  }
  if (kind_ == DomainKind::circle_angle) {
    if (dim_ != 1)
      throw std::domain_error("GridDomain: circle domains are 1-D angles");
    for (double c : coords_)
      if (c < 0.0 || c >= 2.0 * std::numbers::pi)
        throw std::domain_error("GridDomain: angle outside [0, 2*pi)");
  }
}

GridDomain GridDomain::interval(double lo, double hi, int count) {
  if (count < 1) throw std::domain_error("interval: need at least one point");
  if (!(lo <= hi)) throw std::domain_error("interval: lo > hi");
  std::vector<double> coords(static_cast<std::size_t>(count));
  if (count == 1) {
    coords[0] = lo;
  } else {
    const double h = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) coords[i] = lo + h * i;
    coords.back() = hi; // exact endpoint
  }
  return GridDomain(1, DomainKind::interval, std::move(coords), {{lo, hi}});
}

GridDomain GridDomain::box(std::span<const std::array<double, 2>> bounds,
                           std::span<const int> counts) {
  if (bounds.empty() || bounds.size() != counts.size())
    throw std::domain_error("box: bounds/counts mismatch");
  const int dim = static_cast<int>(bounds.size());
  std::vector<std::vector<double>> axes(bounds.size());
  std::size_t total = 1;
  for (std::size_t k = 0; k < bounds.size(); ++k) {
    const GridDomain axis = interval(bounds[k][0], bounds[k][1], counts[k]);
    axes[k].assign(axis.coords_.begin(), axis.coords_.end());
    total *= axes[k].size();
  }
  std::vector<double> coords;
  coords.reserve(total * dim);
  std::vector<std::size_t> idx(bounds.size(), 0);
  for (std::size_t n = 0; n < total; ++n) {
    for (int k = 0; k < dim; ++k) coords.push_back(axes[k][idx[k]]);
    for (int k = dim - 1; k >= 0; --k) {
      if (++idx[k] < axes[k].size()) break;
      idx[k] = 0;
    }
  }
  return GridDomain(dim, dim == 1 ? DomainKind::interval : DomainKind::box,
                    std::move(coords),
                    std::vector<std::array<double, 2>>(bounds.begin(), bounds.end()));
}

GridDomain GridDomain::circle(int count) {
  if (count < 1) throw std::domain_error("circle: need at least one point");
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<double> coords(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) coords[i] = two_pi * i / count;
  return GridDomain(1, DomainKind::circle_angle, std::move(coords),
                    {{0.0, two_pi}});
}

GridDomain GridDomain::product(const GridDomain& a, const GridDomain& b) {
  const int dim = a.dim_ + b.dim_;
  std::vector<double> coords;
  coords.reserve(a.size() * b.size() * dim);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto pa = a.point(i);
      const auto pb = b.point(j);
      coords.insert(coords.end(), pa.begin(), pa.end());
      coords.insert(coords.end(), pb.begin(), pb.end());
    }
  std::vector<std::array<double, 2>> bounds = a.bounds_;
  bounds.insert(bounds.end(), b.bounds_.begin(), b.bounds_.end());
  return GridDomain(dim, DomainKind::product, std::move(coords),
                    std::move(bounds));
}

GridDomain GridDomain::shifted(double delta) const {
  if (kind_ == DomainKind::circle_angle)
    throw std::domain_error("shifted: circle domains cannot be translated");
  std::vector<double> coords(coords_);
  for (double& c : coords) c += delta;
  std::vector<std::array<double, 2>> bounds(bounds_);
  for (auto& b : bounds) {
    b[0] += delta;
    b[1] += delta;
  }
  return GridDomain(dim_, kind_, std::move(coords), std::move(bounds));
}

std::vector<double> GridDomain::sample(const RealFunction& f) const {
  std::vector<double> out(size());
  for (std::size_t i = 0; i < size(); ++i) out[i] = f(point(i));
  return out;
}

NormKind NormKind::sup() { return NormKind(); }

NormKind NormKind::l1(std::vector<double> weights) {
  if (weights.empty()) throw std::invalid_argument("l1 norm: empty weights");
  for (double w : weights)
    if (!(w >= 0.0)) throw std::invalid_argument("l1 norm: negative weight");
  NormKind k;
  k.weights_ = std::move(weights);
  return k;
}

NormKind NormKind::l1_trapezoid(const GridDomain& domain) {
  if (domain.dimension() != 1)
    throw std::invalid_argument("l1_trapezoid: 1-D domains only");
  const std::size_t n = domain.size();
  std::vector<double> w(n, 0.0);
  if (domain.kind() == DomainKind::circle_angle) {
    // periodic wrap: each point carries half of its two adjacent gaps
    const double two_pi = 2.0 * std::numbers::pi;
    for (std::size_t i = 0; i < n; ++i) {
      const double next = (i + 1 < n) ? domain.point(i + 1)[0]
                                      : domain.point(0)[0] + two_pi;
      const double prev = (i > 0) ? domain.point(i - 1)[0]
                                  : domain.point(n - 1)[0] - two_pi;
      w[i] = 0.5 * (next - prev);
    }
  } else {
    if (n == 1) {
      w[0] = domain.bounds()[0][1] - domain.bounds()[0][0];
    } else {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        const double h = domain.point(i + 1)[0] - domain.point(i)[0];
        w[i] += 0.5 * h;
        w[i + 1] += 0.5 * h;
      }
    }
  }
  return l1(std::move(w));
}

double norm(std::span<const double> values, const NormKind& kind) {
  if (kind.is_sup()) {
    double m = 0.0;
    for (double v : values) m = std::max(m, std::abs(v));
    return m;
  }
  if (kind.weights().size() != values.size())
    throw std::invalid_argument("norm: weight/value size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += kind.weights()[i] * std::abs(values[i]);
  return s;
}

double deficit_of_positivity(const GridDomain& domain) {
  if (domain.size() == 0) throw std::domain_error("deficit: empty domain");
  double min_coord = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (double c : domain.point(i)) min_coord = std::min(min_coord, c);
  return std::max(0.0, -min_coord);
}

namespace {

std::string shift_name(int k, double alpha) {
  const std::string pr = RealFunction::projection(k).name();
  if (alpha == 0.0) return pr;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "(%s+%g)", pr.c_str(), alpha);
  return buf;
}

} // namespace

std::vector<RealFunction> korovkin_test_set(const GridDomain& domain,
                                            double alpha, bool simplified) {
  if (domain.kind() == DomainKind::circle_angle)
    throw std::domain_error(
        "korovkin_test_set: use trig_test_set on circle domains");
  const double deficit = deficit_of_positivity(domain);
  if (alpha < deficit)
    throw std::invalid_argument("korovkin_test_set: alpha below deficit");
  const int dim = domain.dimension();

  std::vector<RealFunction> out;
  out.push_back(RealFunction::constant(1.0));
  for (int k = 0; k < dim; ++k) {
    if (simplified) {
      out.push_back(RealFunction("-" + RealFunction::projection(k).name(),
                                 k + 1,
                                 [k](std::span<const double> p) { return -p[k]; }));
    } else {
      out.push_back(RealFunction("-" + shift_name(k, alpha), k + 1,
                                 [k, alpha](std::span<const double> p) {
                                   return -(p[k] + alpha);
                                 }));
    }
  }
  char name[80];
  if (simplified) {
    if (alpha == 0.0)
      std::snprintf(name, sizeof(name), "%s", dim == 1 ? "x^2" : "sum pr_k^2");
    else
      std::snprintf(name, sizeof(name),
                    dim == 1 ? "x^2+%g*x" : "sum(pr_k^2+%g*pr_k)", 2.0 * alpha);
    out.push_back(RealFunction(name, dim,
                               [dim, alpha](std::span<const double> p) {
                                 double s = 0.0;
                                 for (int k = 0; k < dim; ++k)
                                   s += p[k] * p[k] + 2.0 * alpha * p[k];
                                 return s;
                               }));
  } else {
    if (dim == 1)
      std::snprintf(name, sizeof(name), "%s^2", shift_name(0, alpha).c_str());
    else if (alpha == 0.0)
      std::snprintf(name, sizeof(name), "sum pr_k^2");
    else
      std::snprintf(name, sizeof(name), "sum(pr_k+%g)^2", alpha);
    out.push_back(RealFunction(name, dim,
                               [dim, alpha](std::span<const double> p) {
                                 double s = 0.0;
                                 for (int k = 0; k < dim; ++k) {
                                   const double t = p[k] + alpha;
                                   s += t * t;
                                 }
                                 return s;
                               }));
  }
  return out;
}

std::vector<RealFunction> trig_test_set(bool plus_form) {
  std::vector<RealFunction> out;
  out.push_back(RealFunction::constant(1.0));
  if (plus_form) {
    out.push_back(RealFunction("-1-cos", 1, [](std::span<const double> p) {
      return -1.0 - std::cos(p[0]);
    }));
    out.push_back(RealFunction("-1-sin", 1, [](std::span<const double> p) {
      return -1.0 - std::sin(p[0]);
    }));
    out.push_back(RealFunction("3+2cos+2sin", 1, [](std::span<const double> p) {
      return 3.0 + 2.0 * std::cos(p[0]) + 2.0 * std::sin(p[0]);
    }));
  } else {
    out.push_back(RealFunction("-cos", 1, [](std::span<const double> p) {
      return -std::cos(p[0]);
    }));
    out.push_back(RealFunction("-sin", 1, [](std::span<const double> p) {
      return -std::sin(p[0]);
    }));
    out.push_back(RealFunction("2cos+2sin", 1, [](std::span<const double> p) {
      return 2.0 * std::cos(p[0]) + 2.0 * std::sin(p[0]);
    }));
  }
  return out;
}

double korovkin_delta(const RealFunction& f, const GridDomain& domain,
                      double epsilon) {
  if (!(epsilon > 0.0))
    throw std::invalid_argument("korovkin_delta: epsilon must be positive");
  if (domain.size() < 2)
    throw std::invalid_argument("korovkin_delta: need at least 2 points");
  const std::vector<double> values = domain.sample(f);
  const std::size_t n = domain.size();
  const int dim = domain.dimension();
  double delta = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto pi = domain.point(i);
    for (std::size_t j = i + 1; j < n; ++j) {
      const double gap = std::abs(values[i] - values[j]);
      if (gap <= epsilon) continue;
      const auto pj = domain.point(j);
      double d2 = 0.0;
      for (int k = 0; k < dim; ++k) {
        const double d = pi[k] - pj[k];
        d2 += d * d;
      }
      if (d2 == 0.0) return std::numeric_limits<double>::infinity();
      delta = std::max(delta, (gap - epsilon) / d2);
    }
  }
  return delta;
}

} // namespace korovkin
