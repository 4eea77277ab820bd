#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace korovkin {

/// A real-valued function evaluable at any point of a bounding box.
///
/// Functions are immutable values: the evaluator is shared, copies are cheap.
/// `arity` is the minimum point dimension the evaluator needs; constants have
/// arity 0 and accept points of any dimension.
class RealFunction {
public:
  using Evaluator = std::function<double(std::span<const double>)>;

  RealFunction(std::string name, int arity, Evaluator eval);

  static RealFunction constant(double c);
  /// Canonical projection on coordinate `k` (0-based). Named "x"/"y" in low
  /// dimensions, "pr<k+1>" otherwise.
  static RealFunction projection(int k);
  /// 1-D polynomial c0 + c1 x + c2 x^2 + ...
  static RealFunction polynomial(std::vector<double> coeffs);
  /// Piecewise-linear interpolant of per-point samples on a sorted 1-D grid.
  /// Constant extrapolation outside [xs.front(), xs.back()].
  static RealFunction linear_interpolant(std::vector<double> xs,
                                         std::vector<double> values,
                                         std::string name = "interp");

  double operator()(std::span<const double> point) const;
  double operator()(double x) const;
  double operator()(double x, double y) const;

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }

  RealFunction renamed(std::string name) const;

private:
  std::string name_;
  int arity_ = 0;
  std::shared_ptr<const Evaluator> eval_;
};

RealFunction operator+(const RealFunction& f, const RealFunction& g);
RealFunction operator-(const RealFunction& f, const RealFunction& g);
RealFunction operator-(const RealFunction& f);
RealFunction operator*(double c, const RealFunction& f);
RealFunction operator+(const RealFunction& f, double c);
RealFunction operator-(const RealFunction& f, double c);
RealFunction abs(const RealFunction& f);

} // namespace korovkin
