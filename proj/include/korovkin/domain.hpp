#pragma once

#include <array>
#include <span>
#include <vector>

#include "korovkin/function.hpp"

namespace korovkin {

enum class DomainKind { interval, box, circle_angle, product };

/// A compact subset of R^N sampled as a finite grid. All sup/inf over the
/// domain are taken over the grid points; resolution is the accuracy knob.
class GridDomain {
public:
  /// Uniform grid of `count` points on [lo, hi], endpoints included.
  static GridDomain interval(double lo, double hi, int count);
  /// Tensor-product grid on a box; one [lo, hi] pair and point count per axis.
  static GridDomain box(std::span<const std::array<double, 2>> bounds,
                        std::span<const int> counts);
  /// `count` equispaced angles in [0, 2*pi).
  static GridDomain circle(int count);
  /// Cartesian product of two domains (kind = product).
  static GridDomain product(const GridDomain& a, const GridDomain& b);

  int dimension() const { return dim_; }
  DomainKind kind() const { return kind_; }
  std::size_t size() const { return coords_.size() / dim_; }
  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<std::array<double, 2>>& bounds() const { return bounds_; }

  /// Every coordinate translated by +delta (bounds move along). Circle
  /// domains cannot be shifted.
  GridDomain shifted(double delta) const;

  std::vector<double> sample(const RealFunction& f) const;

private:
  GridDomain(int dim, DomainKind kind, std::vector<double> coords,
             std::vector<std::array<double, 2>> bounds);
  void validate() const;

  int dim_;
  DomainKind kind_;
  std::vector<double> coords_; // row-major, size() * dim_
  std::vector<std::array<double, 2>> bounds_;
};

/// Norm selector for sampled values: sup norm, or a weighted l1 sum whose
/// weights add up to the domain's measure.
class NormKind {
public:
  static NormKind sup();
  static NormKind l1(std::vector<double> weights);
  /// Trapezoid weights for a 1-D grid (periodic wrap for circle domains).
  static NormKind l1_trapezoid(const GridDomain& domain);

  bool is_sup() const { return weights_.empty(); }
  const std::vector<double>& weights() const { return weights_; }
  const char* tag() const { return is_sup() ? "sup" : "l1"; }

private:
  NormKind() = default;
  std::vector<double> weights_; // empty = sup
};

double norm(std::span<const double> values, const NormKind& kind);

/// Smallest shift along the all-ones direction moving the domain into the
/// nonnegative orthant: max(0, -min coordinate over all grid points).
double deficit_of_positivity(const GridDomain& domain);

/// Test functions {1, -(pr_k + alpha), sum (pr_k + alpha)^2}; with
/// `simplified` (valid under strong translatability)
/// {1, -pr_k, sum (pr_k^2 + 2 alpha pr_k)}.
std::vector<RealFunction> korovkin_test_set(const GridDomain& domain,
                                            double alpha,
                                            bool simplified = false);

/// Circle test functions of the angle variable. `plus_form` gives
/// {1, -1-cos, -1-sin, 3+2cos+2sin}; otherwise {1, -cos, -sin, 2cos+2sin}.
std::vector<RealFunction> trig_test_set(bool plus_form);

/// Smallest delta with |f(x)-f(y)| <= epsilon + delta*|x-y|^2 over all grid
/// point pairs. Returns +infinity when coincident points differ by more than
/// epsilon (degenerate sampling).
double korovkin_delta(const RealFunction& f, const GridDomain& domain,
                      double epsilon);

} // namespace korovkin
