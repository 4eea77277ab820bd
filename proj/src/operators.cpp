#include "korovkin/operators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace korovkin {

void PointSet::merge(const PointSet& other) {
  if (other.size() == 0) return;
  if (size() == 0) {
    *this = other;
    return;
  }
  if (dim != other.dim)
    throw std::invalid_argument("PointSet::merge: dimension mismatch");
  coords.insert(coords.end(), other.coords.begin(), other.coords.end());
}

OperatorInstance::OperatorInstance(std::string label, GridDomain input,
                                   GridDomain output, Apply apply,
                                   PointSet input_samples)
    : label_(std::move(label)),
      input_(std::make_shared<const GridDomain>(std::move(input))),
      output_(std::make_shared<const GridDomain>(std::move(output))),
      apply_(std::move(apply)),
      input_samples_(std::move(input_samples)) {
  if (!apply_) throw std::invalid_argument("OperatorInstance: empty apply");
}

std::vector<double> OperatorInstance::operator()(const RealFunction& f) const {
  std::vector<double> out = apply_(f);
  if (out.size() != output_->size())
    throw std::runtime_error("operator '" + label_ +
                             "': output size mismatch");
  return out;
}

OperatorFamily::OperatorFamily(std::string label, GridDomain input,
                               GridDomain output, int max_n, Maker maker)
    : label_(std::move(label)),
      input_(std::make_shared<const GridDomain>(std::move(input))),
      output_(std::make_shared<const GridDomain>(std::move(output))),
      max_n_(max_n),
      maker_(std::move(maker)) {
  if (max_n_ < 1) throw std::invalid_argument("OperatorFamily: max_n < 1");
  if (!maker_) throw std::invalid_argument("OperatorFamily: empty maker");
}

OperatorInstance OperatorFamily::member(int n) const {
  if (n < 1 || n > max_n_)
    throw std::out_of_range("family '" + label_ + "': member " +
                            std::to_string(n) + " outside 1.." +
                            std::to_string(max_n_));
  return maker_(n);
}

const char* to_string(AxiomTag tag) {
  switch (tag) {
    case AxiomTag::SL: return "SL";
    case AxiomTag::TR: return "TR";
    case AxiomTag::TRstar: return "TRstar";
    case AxiomTag::CA: return "CA";
    case AxiomTag::M: return "M";
    case AxiomTag::Krein: return "Krein";
  }
  return "?";
}

// splitmix64: tiny, portable, stable across toolchains
SampleGenerator::SampleGenerator(std::uint64_t seed) : state_(seed) {}

double SampleGenerator::uniform(double lo, double hi) {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  const double u = static_cast<double>(z >> 11) * 0x1.0p-53;
  return lo + u * (hi - lo);
}

RealFunction SampleGenerator::next_polynomial() {
  std::vector<double> c(5);
  for (double& ci : c) ci = uniform(-2.0, 2.0);
  return RealFunction::polynomial(std::move(c));
}

std::pair<RealFunction, RealFunction> SampleGenerator::next_ordered_pair() {
  RealFunction f = next_polynomial();
  const double a = uniform(-1.0, 1.0);
  const double b = uniform(-1.0, 1.0);
  // g = f + (a + b x)^2 >= f everywhere
  RealFunction g = f + RealFunction::polynomial({a * a, 2.0 * a * b, b * b});
  return {std::move(f), g.renamed(f.name() + "+sq")};
}

std::pair<RealFunction, RealFunction> SampleGenerator::next_comonotone_pair() {
  // h nondecreasing: antiderivative of (a + b x)^2, plus an offset
  const double a = uniform(-1.0, 1.0);
  const double b = uniform(-1.0, 1.0);
  const double c0 = uniform(-1.0, 1.0);
  RealFunction h =
      RealFunction::polynomial({c0, a * a, a * b, b * b / 3.0}).renamed("h");
  // phi increasing: beta t + gamma t^3
  const double beta = uniform(0.2, 2.0);
  const double gamma = uniform(0.0, 1.0);
  RealFunction g("phi(h)", h.arity(),
                 [h, beta, gamma](std::span<const double> p) {
                   const double t = h(p);
                   return beta * t + gamma * t * t * t;
                 });
  return {std::move(h), std::move(g)};
}

namespace {

double rel_scale(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}

struct ViolationTracker {
  double max_violation = 0.0;
  std::string witness;
  double tol;

  explicit ViolationTracker(double tol) : tol(tol) {}

  void record(double violation, const char* what, const std::string& fname,
              const std::string& gname, double param, std::size_t point,
              double lhs, double rhs) {
    if (violation <= max_violation) return;
    max_violation = violation;
    if (violation > tol) {
      char buf[256];
      std::snprintf(buf, sizeof(buf),
                    "%s f=%s g=%s param=%g point=%zu lhs=%.17g rhs=%.17g",
                    what, fname.c_str(), gname.c_str(), param, point, lhs,
                    rhs);
      witness = buf;
    }
  }

  AxiomReport report(AxiomTag tag, int trials) const {
    AxiomReport r;
    r.tag = tag;
    r.trials = trials;
    r.max_violation = max_violation;
    r.tol = tol;
    r.pass = max_violation <= tol;
    if (!r.pass) r.witness = witness;
    return r;
  }
};

// one-sided: lhs <= rhs, violation relative to magnitudes
void check_le(ViolationTracker& t, std::span<const double> lhs,
              std::span<const double> rhs, const char* what,
              const std::string& fname, const std::string& gname,
              double param) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double v = (lhs[i] - rhs[i]) / rel_scale(lhs[i], rhs[i]);
    t.record(v, what, fname, gname, param, i, lhs[i], rhs[i]);
  }
}

void check_eq(ViolationTracker& t, std::span<const double> lhs,
              std::span<const double> rhs, const char* what,
              const std::string& fname, const std::string& gname,
              double param) {
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const double v = std::abs(lhs[i] - rhs[i]) / rel_scale(lhs[i], rhs[i]);
    t.record(v, what, fname, gname, param, i, lhs[i], rhs[i]);
  }
}

} // namespace

AxiomReport check_sublinear(
    const OperatorInstance& T,
    std::span<const std::pair<RealFunction, RealFunction>> samples,
    double tol) {
  if (samples.empty())
    throw std::invalid_argument("check_sublinear: no samples");
  if (tol < 0.0) throw std::invalid_argument("check_sublinear: negative tol");
  static constexpr double kLambdas[] = {0.0, 0.5, 1.0, 2.0};
  ViolationTracker t(tol);
  int trials = 0;
  for (const auto& [f, g] : samples) {
    ++trials;
    const std::vector<double> Tf = T(f);
    const std::vector<double> Tg = T(g);
    const std::vector<double> Tfg = T(f + g);
    std::vector<double> sum(Tf.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = Tf[i] + Tg[i];
    check_le(t, Tfg, sum, "subadditive", f.name(), g.name(), 0.0);
    for (double lam : kLambdas) {
      const std::vector<double> Tlf = T(lam * f);
      std::vector<double> scaled(Tf.size());
      for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = lam * Tf[i];
      check_eq(t, Tlf, scaled, "homogeneous", f.name(), "", lam);
    }
  }
  return t.report(AxiomTag::SL, trials);
}

AxiomReport check_translatable(const OperatorInstance& T,
                               std::span<const RealFunction> samples,
                               double tol, bool strong) {
  if (samples.empty())
    throw std::invalid_argument("check_translatable: no samples");
  static constexpr double kShifts[] = {0.0, 0.5, 1.0, 3.0};
  static constexpr double kNegShifts[] = {-0.5, -2.0};
  ViolationTracker t(tol);
  const std::vector<double> T1 = T(RealFunction::constant(1.0));
  int trials = 0;
  for (const RealFunction& f : samples) {
    ++trials;
    const std::vector<double> Tf = T(f);
    auto check_shift = [&](double alpha) {
      const std::vector<double> lhs = T(f + alpha);
      std::vector<double> rhs(Tf.size());
      for (std::size_t i = 0; i < rhs.size(); ++i)
        rhs[i] = Tf[i] + alpha * T1[i];
      check_eq(t, lhs, rhs, "translatable", f.name(), "", alpha);
    };
    for (double a : kShifts) check_shift(a);
    if (strong)
      for (double a : kNegShifts) check_shift(a);
  }
  return t.report(strong ? AxiomTag::TRstar : AxiomTag::TR, trials);
}

AxiomReport check_monotone(
    const OperatorInstance& T,
    std::span<const std::pair<RealFunction, RealFunction>> samples,
    double tol) {
  if (samples.empty()) throw std::invalid_argument("check_monotone: no samples");
  const GridDomain& K = T.input_domain();
  for (const auto& [f, g] : samples) {
    for (std::size_t i = 0; i < K.size(); ++i)
      if (f(K.point(i)) > g(K.point(i)))
        throw std::invalid_argument("check_monotone: sample pair (" + f.name() +
                                    ", " + g.name() +
                                    ") is not ordered on the input grid");
  }
  ViolationTracker t(tol);
  int trials = 0;
  for (const auto& [f, g] : samples) {
    ++trials;
    const std::vector<double> Tf = T(f);
    const std::vector<double> Tg = T(g);
    check_le(t, Tf, Tg, "monotone", f.name(), g.name(), 0.0);
  }
  return t.report(AxiomTag::M, trials);
}

AxiomReport check_comonotone_additive(const OperatorInstance& T, double tol,
                                      std::uint64_t seed, int trials) {
  SampleGenerator gen(seed);
  const GridDomain& K = T.input_domain();
  ViolationTracker t(tol);
  for (int trial = 0; trial < trials; ++trial) {
    const auto [f, g] = gen.next_comonotone_pair();
    const std::vector<double> fv = K.sample(f);
    const std::vector<double> gv = K.sample(g);
    for (std::size_t s = 0; s < K.size(); ++s)
      for (std::size_t u = s + 1; u < K.size(); ++u)
        if ((fv[s] - fv[u]) * (gv[s] - gv[u]) < 0.0)
          throw std::logic_error(
              "check_comonotone_additive: generated pair is not comonotone");
    const std::vector<double> Tf = T(f);
    const std::vector<double> Tg = T(g);
    const std::vector<double> Tfg = T(f + g);
    std::vector<double> sum(Tf.size());
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = Tf[i] + Tg[i];
    check_eq(t, Tfg, sum, "comonotone-additive", f.name(), g.name(), 0.0);
  }
  return t.report(AxiomTag::CA, trials);
}

AxiomReport check_krein(
    const OperatorInstance& T,
    std::span<const std::pair<RealFunction, RealFunction>> samples,
    double tol) {
  if (samples.empty()) throw std::invalid_argument("check_krein: no samples");
  const GridDomain& K = T.input_domain();
  const double Tnorm = operator_norm(T);
  ViolationTracker t(tol);
  int trials = 0;
  for (const auto& [f, g] : samples) {
    ++trials;
    const std::vector<double> Tf = T(f);
    const std::vector<double> Tg = T(g);
    const RealFunction diff = abs(f - g);
    const std::vector<double> Tdiff = T(diff);
    std::vector<double> gap(Tf.size());
    for (std::size_t i = 0; i < gap.size(); ++i)
      gap[i] = std::abs(Tf[i] - Tg[i]);
    check_le(t, gap, Tdiff, "krein-pointwise", f.name(), g.name(), 0.0);

    // ||f-g|| over every point the operator can evaluate
    double fg_norm = 0.0;
    for (std::size_t i = 0; i < K.size(); ++i)
      fg_norm = std::max(fg_norm, diff(K.point(i)));
    const PointSet& pts = T.input_samples();
    for (std::size_t i = 0; i < pts.size(); ++i)
      fg_norm = std::max(fg_norm, diff(pts.point(i)));
    double lhs = 0.0;
    for (double v : gap) lhs = std::max(lhs, v);
    const double rhs = Tnorm * fg_norm;
    t.record((lhs - rhs) / rel_scale(lhs, rhs), "krein-norm", f.name(),
             g.name(), 0.0, 0, lhs, rhs);
  }
  return t.report(AxiomTag::Krein, trials);
}

double operator_norm(const OperatorInstance& T) {
  const std::vector<double> T1 = T(RealFunction::constant(1.0));
  double m = 0.0;
  for (double v : T1) m = std::max(m, std::abs(v));
  return m;
}

OperatorFamily cesaro_family(const OperatorFamily& F) {
  auto maker = [F](int n) {
    std::vector<OperatorInstance> members;
    members.reserve(n);
    PointSet samples;
    for (int k = 1; k <= n; ++k) {
      members.push_back(F.member(k));
      samples.merge(members.back().input_samples());
    }
    auto apply = [members = std::move(members), n](const RealFunction& f) {
      std::vector<double> acc;
      for (const OperatorInstance& Tk : members) {
        const std::vector<double> v = Tk(f);
        if (acc.empty()) acc.assign(v.size(), 0.0);
        for (std::size_t i = 0; i < v.size(); ++i) acc[i] += v[i];
      }
      for (double& a : acc) a /= n;
      return acc;
    };
    return OperatorInstance("cesaro(" + F.label() + ")[" + std::to_string(n) +
                                "]",
                            F.input_domain(), F.output_domain(),
                            std::move(apply), std::move(samples));
  };
  return OperatorFamily("cesaro(" + F.label() + ")", F.input_domain(),
                        F.output_domain(), F.max_n(), std::move(maker));
}

std::vector<AxiomReport> run_axiom_suite(const OperatorInstance& T, double tol,
                                         std::uint64_t seed, int trials,
                                         bool strong_translatable,
                                         bool with_ca) {
  SampleGenerator gen(seed);
  std::vector<std::pair<RealFunction, RealFunction>> pairs;
  std::vector<std::pair<RealFunction, RealFunction>> ordered;
  std::vector<RealFunction> singles;
  for (int i = 0; i < trials; ++i) {
    pairs.emplace_back(gen.next_polynomial(), gen.next_polynomial());
    ordered.push_back(gen.next_ordered_pair());
    singles.push_back(gen.next_polynomial());
  }
  std::vector<AxiomReport> out;
  out.push_back(check_sublinear(T, pairs, tol));
  out.push_back(check_translatable(T, singles, tol, strong_translatable));
  out.push_back(check_monotone(T, ordered, tol));
  if (with_ca) out.push_back(check_comonotone_additive(T, tol, seed, trials));
  out.push_back(check_krein(T, pairs, tol));
  return out;
}

} // namespace korovkin
