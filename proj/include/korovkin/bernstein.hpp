#pragma once

#include "korovkin/domain.hpp"
#include "korovkin/function.hpp"
#include "korovkin/operators.hpp"

namespace korovkin {

/// Basis values p_{n,k}(x) = C(n,k) x^k (1-x)^(n-k) for k = 0..n, computed
/// by the convex-combination recurrence (no factorials, stable for large n).
std::vector<double> bernstein_basis(int n, double x);

/// A continuous reparametrization of the operator's base interval; the image
/// of the grid must stay within the domain bounds (checked on construction).
class CompositionMap {
public:
  CompositionMap(RealFunction phi, const GridDomain& domain);
  static CompositionMap identity(const GridDomain& domain);

  double operator()(double x) const { return phi_(x); }
  const RealFunction& fn() const { return phi_; }

private:
  RealFunction phi_;
};

/// Composite Simpson on [a, b] with `nodes` points (odd, >= 3); exact for
/// cubic integrands.
double composite_simpson(const RealFunction& f, double a, double b, int nodes);

/// T_n(f)(x) = sum_k p_{n,k}(phi(x)) * sup f over [k/(n+1), (k+1)/(n+1)],
/// window sups taken over equispaced samples (both endpoints always
/// included, interior density M * ceil(grid size / (n+1))).
OperatorInstance sup_bernstein(const GridDomain& domain, int n,
                               const CompositionMap& phi, int refinement = 2);

/// (K_n f)(x) = (n+1) sum_k p_{n,k}(phi(x)) * integral of f over the k-th
/// window, windows integrated by composite Simpson.
OperatorInstance kantorovich(const GridDomain& domain, int n,
                             const CompositionMap& phi,
                             int nodes_per_window = 9);

/// Pointwise maximum of kantorovich(n) and kantorovich(n+1).
OperatorInstance max_kantorovich(const GridDomain& domain, int n,
                                 const CompositionMap& phi,
                                 int nodes_per_window = 9);

/// A(f)(x) = f(phi(x)); linear, unital, an algebra homomorphism.
OperatorInstance composition_operator(const GridDomain& domain,
                                      const CompositionMap& phi);

/// Tensor-product form on [0,1]^2: per-axis basis weights against window
/// sups over rectangle windows.
OperatorInstance tensor_sup_bernstein_2d(const GridDomain& domain, int n,
                                         const CompositionMap& phi,
                                         int refinement = 2);

/// Families over a shared grid, members indexed 1..max_n.
OperatorFamily sup_bernstein_family(const GridDomain& domain,
                                    const CompositionMap& phi, int max_n,
                                    int refinement = 2);
OperatorFamily kantorovich_family(const GridDomain& domain,
                                  const CompositionMap& phi, int max_n,
                                  int nodes_per_window = 9);
OperatorFamily max_kantorovich_family(const GridDomain& domain,
                                      const CompositionMap& phi, int max_n,
                                      int nodes_per_window = 9);

} // namespace korovkin
