#include "mcf/invariants.hpp"

#include <numeric>
#include <stdexcept>

namespace mcf {

EnumerationOptions with_mode(EnumerationOptions opts, int g, const InvariantMode& mode) {
  if (mode.kind == MultiplicityMode::lambda) {
    if (mode.g0 > g) throw std::domain_error("skeleton genus exceeds the genus");
    opts.lambda_g0 = mode.g0;
  } else {
    opts.lambda_g0.reset();
  }
  return opts;
}

GroupElement ep1_invariant(int g, const RamificationProfile& x, const InvariantMode& mode,
                           const EnumerationOptions& opts) {
  x.validate();
  TBasis total;
  for (const FloorDiagram& d : enumerate_floor_diagrams(g, x.a, x.w, with_mode(opts, g, mode)))
    total = tb_add(total, floor_multiplicity_t_basis(d, mode.kind));
  return from_t_basis(total);
}

GroupElement abelian_invariant(int g, const DiagramDegree& b, const InvariantMode& mode,
                               const EnumerationOptions& opts) {
  b.validate();
  TBasis total;
  for (const PearlDiagram& d : enumerate_pearl_diagrams(g, b, with_mode(opts, g, mode)))
    total = tb_add(total, pearl_multiplicity_t_basis(d, mode.kind));
  return from_t_basis(total);
}

std::int64_t divisibility_of_class(const DiagramDegree& b, const TorsionPoint& u) {
  b.validate();
  if (!u.killed_by(b.norm)) throw std::domain_error("monodromy is not |B|-torsion");
  return std::gcd(std::gcd(b.a, b.norm), b.norm / u.order());
}

TheoremKind parse_theorem_kind(const std::string& name) {
  if (name == "ep1_points") return TheoremKind::ep1_points;
  if (name == "abelian_points") return TheoremKind::abelian_points;
  if (name == "ep1_lambda") return TheoremKind::ep1_lambda;
  if (name == "abelian_lambda") return TheoremKind::abelian_lambda;
  throw std::invalid_argument("unknown theorem: " + name);
}

std::string to_string(TheoremKind kind) {
  switch (kind) {
    case TheoremKind::ep1_points:
      return "ep1_points";
    case TheoremKind::abelian_points:
      return "abelian_points";
    case TheoremKind::ep1_lambda:
      return "ep1_lambda";
    case TheoremKind::abelian_lambda:
      return "abelian_lambda";
  }
  return "";
}

std::int64_t theorem_exponent(TheoremKind kind, const TheoremParams& p) {
  const auto n = static_cast<std::int64_t>(p.profile.w.size());
  switch (kind) {
    case TheoremKind::ep1_points:
      return 2 * n + 4 * p.g - 4;
    case TheoremKind::abelian_points:
      return 4 * p.g - 3;
    case TheoremKind::ep1_lambda:
      return 2 * n + 2 * p.g0 + 2 * p.g - 4;
    case TheoremKind::abelian_lambda:
      return 2 * p.g + 2 * p.g0 - 3;
  }
  return 0;
}

namespace {

// Coeff_theta F(x) = sum over k | x with theta in (|x|/k)-torsion of
// k^alpha N(x/k), where N(y) is the coefficient of F(y) at a point of exact
// order |y|.
template <class Key>
void check_coefficients(const GSequence<Key>& f, std::int64_t alpha, const std::vector<Key>& orbit,
                        TheoremReport& report) {
  const auto& module = f.domain();
  for (const Key& x : orbit) {
    const std::int64_t n = module.norm(x);
    const GroupElement value = f(x);
    const auto divs = module.divisors(x);
    std::vector<std::pair<std::int64_t, Rational>> prim;
    for (const auto& [k, y] : divs) prim.emplace_back(k, f(y).coefficient(TorsionPoint(1, 0, module.norm(y))));
    for (std::int64_t px = 0; px < n; ++px)
      for (std::int64_t py = 0; py < n; ++py) {
        const TorsionPoint theta(px, py, n);
        Rational expected = 0;
        for (const auto& [k, c] : prim)
          if (theta.killed_by(n / k)) expected += rpow(k, alpha) * c;
        if (value.coefficient(theta) != expected) {
          report.coefficients_pass = false;
          report.coefficient_failures.push_back(module.describe(x) + " at " + theta.to_string());
        }
      }
  }
}

template <class Key>
TheoremReport run_theorem(TheoremKind kind, const GSequence<Key>& f, const Key& root, std::int64_t alpha,
                          std::int64_t delta_max, unsigned workers) {
  const auto& module = f.domain();
  if (module.length(root) != 1) throw std::domain_error("theorem parameter must be primitive");
  std::vector<Key> orbit;
  for (std::int64_t d = 1; d <= delta_max; ++d) orbit.push_back(module.act(d, root));
  TheoremReport report;
  report.kind = kind;
  report.mcf = check_alpha_mcf(f, alpha, orbit, workers);
  check_coefficients(f, alpha, orbit, report);
  return report;
}

}  // namespace

TheoremReport verify_theorem(TheoremKind kind, const TheoremParams& p, const EnumerationOptions& opts) {
  if (p.delta_max < 1) throw std::domain_error("delta_max must be positive");
  const std::int64_t alpha = p.alpha_override.value_or(theorem_exponent(kind, p));
  const bool lambda = kind == TheoremKind::ep1_lambda || kind == TheoremKind::abelian_lambda;
  const InvariantMode mode = lambda ? InvariantMode::lambda(p.g0) : InvariantMode::points();
  EnumerationOptions inner = opts;
  inner.workers = 1;
  if (kind == TheoremKind::ep1_points || kind == TheoremKind::ep1_lambda) {
    p.profile.validate();
    GSequence<RamificationProfile> f(ramification_module(), [g = p.g, mode, inner](const RamificationProfile& x) {
      return ep1_invariant(g, x, mode, inner);
    });
    return run_theorem(kind, f, p.profile, alpha, p.delta_max, opts.workers);
  }
  p.degree.validate();
  GSequence<DiagramDegree> f(degree_module(), [g = p.g, mode, inner](const DiagramDegree& b) {
    return abelian_invariant(g, b, mode, inner);
  });
  return run_theorem(kind, f, p.degree, alpha, p.delta_max, opts.workers);
}

MCFReport floor_diagram_orbit_check(const FloorDiagram& d, std::int64_t alpha, std::int64_t delta_max,
                                    MultiplicityMode mode) {
  if (d.length() != 1) throw std::domain_error("orbit check needs a primitive diagram");
  GSequence<FloorDiagram> f(floor_diagram_module(), [mode](const FloorDiagram& x) { return floor_multiplicity(x, mode); });
  std::vector<FloorDiagram> orbit;
  for (std::int64_t k = 1; k <= delta_max; ++k) orbit.push_back(scale_diagram(d, k));
  return check_alpha_mcf(f, alpha, orbit);
}

MCFReport pearl_diagram_orbit_check(const PearlDiagram& d, std::int64_t alpha, std::int64_t delta_max,
                                    MultiplicityMode mode) {
  if (d.length() != 1) throw std::domain_error("orbit check needs a primitive diagram");
  GSequence<PearlDiagram> f(pearl_diagram_module(), [mode](const PearlDiagram& x) { return pearl_multiplicity(x, mode); });
  std::vector<PearlDiagram> orbit;
  for (std::int64_t k = 1; k <= delta_max; ++k) orbit.push_back(scale_diagram(d, k));
  return check_alpha_mcf(f, alpha, orbit);
}

}  // namespace mcf
