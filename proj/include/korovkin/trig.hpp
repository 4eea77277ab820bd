#pragma once

#include "korovkin/domain.hpp"
#include "korovkin/operators.hpp"

namespace korovkin {

/// The circle rotation theta -> (theta + alpha) mod 2*pi.
class RotationMap {
public:
  explicit RotationMap(double alpha);
  double operator()(double theta) const;
  double iterate(double theta, int k) const; // k-fold rotation
  double angle() const { return alpha_; }

private:
  double alpha_;
};

/// Floating-point proxy for "alpha/pi irrational": true when no rational
/// p/q with q <= 10^4 approximates alpha/pi within 1e-12 (continued-fraction
/// convergents).
bool looks_irrational_over_pi(double alpha);

/// member(n)(f) = (1/n) sum_{k=0..n-1} f o R_alpha^k on the circle grid.
OperatorFamily rotation_family(const GridDomain& circle, double alpha,
                               int max_n);

/// A(f) = (trapezoid mean of f over one period) * 1.
OperatorInstance circle_mean_operator(const GridDomain& circle);

} // namespace korovkin
