#include "korovkin/function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace korovkin {

RealFunction::RealFunction(std::string name, int arity, Evaluator eval)
    : name_(std::move(name)),
      arity_(arity),
      eval_(std::make_shared<const Evaluator>(std::move(eval))) {
  if (arity_ < 0) throw std::invalid_argument("RealFunction: negative arity");
  if (!*eval_) throw std::invalid_argument("RealFunction: empty evaluator");
}

double RealFunction::operator()(std::span<const double> point) const {
  if (static_cast<int>(point.size()) < arity_)
    throw std::invalid_argument("RealFunction '" + name_ +
                                "': point dimension below arity");
  return (*eval_)(point);
}

double RealFunction::operator()(double x) const {
  return (*this)(std::span<const double>(&x, 1));
}

double RealFunction::operator()(double x, double y) const {
  const double p[2] = {x, y};
  return (*this)(std::span<const double>(p, 2));
}

RealFunction RealFunction::renamed(std::string name) const {
  RealFunction out = *this;
  out.name_ = std::move(name);
  return out;
}

RealFunction RealFunction::constant(double c) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", c);
  return RealFunction(buf, 0, [c](std::span<const double>) { return c; });
}

RealFunction RealFunction::projection(int k) {
  if (k < 0) throw std::invalid_argument("projection: negative index");
  std::string name = k == 0 ? "x" : k == 1 ? "y" : "pr" + std::to_string(k + 1);
  return RealFunction(std::move(name), k + 1,
                      [k](std::span<const double> p) { return p[k]; });
}

RealFunction RealFunction::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  std::string name = "poly[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", coeffs[i]);
    name += buf;
    if (i + 1 < coeffs.size()) name += ",";
  }
  name += "]";
  return RealFunction(std::move(name), 1,
                      [c = std::move(coeffs)](std::span<const double> p) {
                        double acc = 0.0;
                        for (std::size_t i = c.size(); i-- > 0;)
                          acc = acc * p[0] + c[i];
                        return acc;
                      });
}

RealFunction RealFunction::linear_interpolant(std::vector<double> xs,
                                              std::vector<double> values,
                                              std::string name) {
  if (xs.size() != values.size())
    throw std::invalid_argument("linear_interpolant: size mismatch");
  if (xs.size() < 2)
    throw std::invalid_argument("linear_interpolant: need at least 2 nodes");
  if (!std::is_sorted(xs.begin(), xs.end()))
    throw std::invalid_argument("linear_interpolant: nodes not sorted");
  return RealFunction(
      std::move(name), 1,
      [xs = std::move(xs), vs = std::move(values)](std::span<const double> p) {
        const double x = p[0];
        if (x <= xs.front()) return vs.front();
        if (x >= xs.back()) return vs.back();
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs.begin());
        const double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return vs[i - 1] + t * (vs[i] - vs[i - 1]);
      });
}

namespace {
int max_arity(const RealFunction& f, const RealFunction& g) {
  return std::max(f.arity(), g.arity());
}
} // namespace

RealFunction operator+(const RealFunction& f, const RealFunction& g) {
  return RealFunction("(" + f.name() + "+" + g.name() + ")", max_arity(f, g),
                      [f, g](std::span<const double> p) { return f(p) + g(p); });
}

RealFunction operator-(const RealFunction& f, const RealFunction& g) {
  return RealFunction("(" + f.name() + "-" + g.name() + ")", max_arity(f, g),
                      [f, g](std::span<const double> p) { return f(p) - g(p); });
}

RealFunction operator-(const RealFunction& f) {
  return RealFunction("-" + f.name(), f.arity(),
                      [f](std::span<const double> p) { return -f(p); });
}

RealFunction operator*(double c, const RealFunction& f) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", c);
  return RealFunction(std::string(buf) + "*" + f.name(), f.arity(),
                      [c, f](std::span<const double> p) { return c * f(p); });
}

RealFunction operator+(const RealFunction& f, double c) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", c);
  return RealFunction("(" + f.name() + "+" + buf + ")", f.arity(),
                      [c, f](std::span<const double> p) { return f(p) + c; });
}

RealFunction operator-(const RealFunction& f, double c) { return f + (-c); }

RealFunction abs(const RealFunction& f) {
  return RealFunction("|" + f.name() + "|", f.arity(),
                      [f](std::span<const double> p) { return std::abs(f(p)); });
}

} // namespace korovkin
