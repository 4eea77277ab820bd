#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "korovkin/domain.hpp"
#include "korovkin/function.hpp"

namespace korovkin {

/// Flat list of points in the input space where an operator evaluates its
/// argument (window sample points, quadrature nodes, ...). Used by the
/// checkers to take input-side sup norms over exactly the points the
/// operator can see.
struct PointSet {
  int dim = 1;
  std::vector<double> coords; // row-major

  std::size_t size() const { return coords.empty() ? 0 : coords.size() / dim; }
  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * dim, static_cast<std::size_t>(dim)};
  }
  void push(std::span<const double> p) {
    coords.insert(coords.end(), p.begin(), p.end());
  }
  void push(double x) { coords.push_back(x); }
  void merge(const PointSet& other);
};

/// A single operator T: C(K) -> C(X), sampled on the output grid.
class OperatorInstance {
public:
  using Apply = std::function<std::vector<double>(const RealFunction&)>;

  OperatorInstance(std::string label, GridDomain input, GridDomain output,
                   Apply apply, PointSet input_samples = {});

  /// One value per output grid point.
  std::vector<double> operator()(const RealFunction& f) const;

  const std::string& label() const { return label_; }
  const GridDomain& input_domain() const { return *input_; }
  const GridDomain& output_domain() const { return *output_; }
  const PointSet& input_samples() const { return input_samples_; }

private:
  std::string label_;
  std::shared_ptr<const GridDomain> input_;
  std::shared_ptr<const GridDomain> output_;
  Apply apply_;
  PointSet input_samples_;
};

/// Indexed family n -> T_n over shared domains, defined for 1..max_n.
class OperatorFamily {
public:
  using Maker = std::function<OperatorInstance(int)>;

  OperatorFamily(std::string label, GridDomain input, GridDomain output,
                 int max_n, Maker maker);

  OperatorInstance member(int n) const;
  int max_n() const { return max_n_; }
  const std::string& label() const { return label_; }
  const GridDomain& input_domain() const { return *input_; }
  const GridDomain& output_domain() const { return *output_; }

private:
  std::string label_;
  std::shared_ptr<const GridDomain> input_;
  std::shared_ptr<const GridDomain> output_;
  int max_n_;
  Maker maker_;
};

enum class AxiomTag { SL, TR, TRstar, CA, M, Krein };

const char* to_string(AxiomTag tag);

/// Outcome of one sampled axiom check. `max_violation` is relative to the
/// magnitude of the compared values; pass <=> max_violation <= tol.
struct AxiomReport {
  AxiomTag tag = AxiomTag::SL;
  int trials = 0;
  double max_violation = 0.0;
  double tol = 0.0;
  bool pass = true;
  std::string witness; // offending inputs, empty when passing
};

/// Deterministic test-function generator: polynomials of degree <= 4 with
/// coefficients in [-2, 2], reproducible from the seed.
class SampleGenerator {
public:
  explicit SampleGenerator(std::uint64_t seed);
  RealFunction next_polynomial();
  /// Pair (f, g) with f <= g everywhere (g = f + square of a linear poly).
  std::pair<RealFunction, RealFunction> next_ordered_pair();
  /// Comonotone pair (h, phi o h): h nondecreasing, phi increasing.
  std::pair<RealFunction, RealFunction> next_comonotone_pair();

private:
  double uniform(double lo, double hi);
  std::uint64_t state_;
};

AxiomReport check_sublinear(const OperatorInstance& T,
                            std::span<const std::pair<RealFunction, RealFunction>> samples,
                            double tol);

AxiomReport check_translatable(const OperatorInstance& T,
                               std::span<const RealFunction> samples,
                               double tol, bool strong);

/// Sample pairs must satisfy f <= g on the input grid (verified first).
AxiomReport check_monotone(const OperatorInstance& T,
                           std::span<const std::pair<RealFunction, RealFunction>> samples,
                           double tol);

AxiomReport check_comonotone_additive(const OperatorInstance& T, double tol,
                                      std::uint64_t seed = 42, int trials = 12);

/// |T(f)-T(g)| <= T(|f-g|) pointwise, and ||T(f)-T(g)|| <= ||T||*||f-g||
/// with ||f-g|| taken over the grid plus the operator's input samples.
AxiomReport check_krein(const OperatorInstance& T,
                        std::span<const std::pair<RealFunction, RealFunction>> samples,
                        double tol);

/// sup norm of T(1) on the output grid.
double operator_norm(const OperatorInstance& T);

/// member(n) = (1/n) * sum_{k=1..n} F.member(k), pointwise.
OperatorFamily cesaro_family(const OperatorFamily& F);

/// SL, TR*, M, Krein (and CA when `with_ca`) in order, all from one seed.
std::vector<AxiomReport> run_axiom_suite(const OperatorInstance& T, double tol,
                                         std::uint64_t seed, int trials,
                                         bool strong_translatable,
                                         bool with_ca = false);

} // namespace korovkin
