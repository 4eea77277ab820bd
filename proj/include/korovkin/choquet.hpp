#pragma once

#include "korovkin/bernstein.hpp"
#include "korovkin/domain.hpp"
#include "korovkin/function.hpp"
#include "korovkin/operators.hpp"

namespace korovkin {

/// The concave distortion g defining the capacity mu = g o (Lebesgue
/// measure). Must satisfy g(0)=0, g(1)=1, strictly increasing and midpoint
/// concave; all three are checked on a 1001-point probe grid at construction.
class DistortionFunction {
public:
  explicit DistortionFunction(RealFunction g, std::string tag = "user");
  static DistortionFunction identity();
  static DistortionFunction power(double p); // g(t) = t^p, 0 < p <= 1
  static DistortionFunction sqrt();          // power(0.5)

  double operator()(double t) const { return g_(t); }
  const std::string& tag() const { return tag_; }

private:
  RealFunction g_;
  std::string tag_;
};

/// Discrete Choquet integral of f over [a, b] against g o m: f is sampled at
/// the midpoints of R equal cells, values are sorted in decreasing order and
/// summed against increments of the distorted cumulative measure. Signed
/// integrands use the translation convention
/// (C)int f = (C)int (f + c) - c*g(b-a) with c = -min f.
double choquet_integral(const RealFunction& f, double a, double b,
                        const DistortionFunction& g, int resolution);

/// T_n(f)(x) = sum_k p_{n,k}(phi(x)) * (C)int_window f dmu / g(1/(n+1)).
OperatorInstance choquet_kantorovich(const GridDomain& domain, int n,
                                     const CompositionMap& phi,
                                     const DistortionFunction& g,
                                     int resolution = 256);

OperatorFamily choquet_kantorovich_family(const GridDomain& domain,
                                          const CompositionMap& phi,
                                          const DistortionFunction& g,
                                          int max_n, int resolution = 256);

/// The integral itself as an operator onto a one-point output grid; lets the
/// axiom checkers run against the functional directly.
OperatorInstance choquet_functional(const GridDomain& domain,
                                    const DistortionFunction& g,
                                    int resolution = 256);

} // namespace korovkin
