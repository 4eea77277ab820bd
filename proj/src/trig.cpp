#include "korovkin/trig.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace korovkin {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0; // fmod can round up to the period
  return t;
}

void require_circle(const GridDomain& domain, const char* who) {
  if (domain.kind() != DomainKind::circle_angle)
    throw std::domain_error(std::string(who) + ": needs a circle domain");
}
} // namespace

RotationMap::RotationMap(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha < kTwoPi))
    throw std::invalid_argument("RotationMap: angle must lie in (0, 2*pi)");
}

double RotationMap::operator()(double theta) const {
  return wrap_angle(theta + alpha_);
}

double RotationMap::iterate(double theta, int k) const {
  if (k < 0) throw std::invalid_argument("RotationMap: negative iterate");
  return wrap_angle(theta + static_cast<double>(k) * alpha_);
}

bool looks_irrational_over_pi(double alpha) {
  constexpr double kTol = 1e-12;
  constexpr long kMaxDen = 10000;
  double x = alpha / std::numbers::pi;
  // continued-fraction convergents p/q of x up to q <= kMaxDen
  long p_prev = 1, q_prev = 0;
  long p_cur = static_cast<long>(std::floor(x));
  long q_cur = 1;
  double frac = x - std::floor(x);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(p_cur) / q_cur) < kTol) return false;
    if (frac < 1e-15) break;
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long p_next = a * p_cur + p_prev;
    const long q_next = a * q_cur + q_prev;
    if (q_next > kMaxDen) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return true;
}

OperatorFamily rotation_family(const GridDomain& circle, double alpha,
                               int max_n) {
  require_circle(circle, "rotation_family");
  const RotationMap rot(alpha);
  auto maker = [circle, rot](int n) {
    PointSet samples;
    if (static_cast<std::size_t>(n) * circle.size() <= 200000)
      for (int k = 0; k < n; ++k)
        for (std::size_t i = 0; i < circle.size(); ++i)
          samples.push(rot.iterate(circle.point(i)[0], k));
    auto apply = [circle, rot, n](const RealFunction& f) {
      std::vector<double> out(circle.size(), 0.0);
      for (std::size_t i = 0; i < circle.size(); ++i) {
        const double theta = circle.point(i)[0];
        double acc = 0.0;
        for (int k = 0; k < n; ++k) acc += f(rot.iterate(theta, k));
        out[i] = acc / n;
      }
      return out;
    };
    return OperatorInstance("weyl_average[" + std::to_string(n) + "]", circle,
                            circle, std::move(apply), std::move(samples));
  };
  return OperatorFamily("weyl_average", circle, circle, max_n,
                        std::move(maker));
}

OperatorInstance circle_mean_operator(const GridDomain& circle) {
  require_circle(circle, "circle_mean_operator");
  const NormKind weights = NormKind::l1_trapezoid(circle);
  auto apply = [circle, w = weights.weights()](const RealFunction& f) {
    double mean = 0.0;
    for (std::size_t i = 0; i < circle.size(); ++i)
      mean += w[i] * f(circle.point(i));
    mean /= kTwoPi;
    return std::vector<double>(circle.size(), mean);
  };
  PointSet samples;
  for (std::size_t i = 0; i < circle.size(); ++i)
    samples.push(circle.point(i)[0]);
  return OperatorInstance("circle_mean", circle, circle, std::move(apply),
                          std::move(samples));
}

} // namespace korovkin
