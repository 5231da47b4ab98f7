#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcf/degrees.hpp"
#include "mcf/diagrams.hpp"
#include "mcf/mcf.hpp"

namespace mcf {

// Point insertions, or the lambda refinement over skeletons of genus g0.
struct InvariantMode {
  MultiplicityMode kind = MultiplicityMode::points;
  int g0 = 0;

  static InvariantMode points() { return {}; }
  static InvariantMode lambda(int g0) { return {MultiplicityMode::lambda, g0}; }
};

EnumerationOptions with_mode(EnumerationOptions opts, int g, const InvariantMode& mode);

GroupElement ep1_invariant(int g, const RamificationProfile& x, const InvariantMode& mode = {},
                           const EnumerationOptions& opts = {});
GroupElement abelian_invariant(int g, const DiagramDegree& b, const InvariantMode& mode = {},
                               const EnumerationOptions& opts = {});

// gcd(a, |B|, |B| / ord(u)).
std::int64_t divisibility_of_class(const DiagramDegree& b, const TorsionPoint& u);

enum class TheoremKind { ep1_points, abelian_points, ep1_lambda, abelian_lambda };

TheoremKind parse_theorem_kind(const std::string& name);
std::string to_string(TheoremKind kind);

struct TheoremParams {
  int g = 1;
  int g0 = 1;
  RamificationProfile profile{1, {1, -1}};
  DiagramDegree degree{1, 1};
  std::int64_t delta_max = 3;
  // Replaces the theorem's exponent, for negative controls.
  std::optional<std::int64_t> alpha_override;
};

std::int64_t theorem_exponent(TheoremKind kind, const TheoremParams& p);

struct TheoremReport {
  TheoremKind kind = TheoremKind::ep1_points;
  MCFReport mcf;
  // Coefficient identity at every correlator (or monodromy) point.
  bool coefficients_pass = true;
  std::vector<std::string> coefficient_failures;
  bool passed() const { return mcf.passed() && coefficients_pass; }
};

TheoremReport verify_theorem(TheoremKind kind, const TheoremParams& p, const EnumerationOptions& opts = {});

// The orbit delta -> m(delta * d) of one primitive diagram, checked against
// the exponent of the theorem it feeds.
MCFReport floor_diagram_orbit_check(const FloorDiagram& d, std::int64_t alpha, std::int64_t delta_max,
                                    MultiplicityMode mode = MultiplicityMode::points);
MCFReport pearl_diagram_orbit_check(const PearlDiagram& d, std::int64_t alpha, std::int64_t delta_max,
                                    MultiplicityMode mode = MultiplicityMode::points);

}  // namespace mcf
