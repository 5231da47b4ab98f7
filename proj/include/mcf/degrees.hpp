#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "mcf/mcf.hpp"

namespace mcf {

// Degree a over E and signed end weights w with sum zero. Negative entries
// are incoming ends (sources), positive ones outgoing ends (sinks).
struct RamificationProfile {
  std::int64_t a = 1;
  std::vector<std::int64_t> w;

  void validate() const;
  // gcd of the end weights.
  std::int64_t norm() const;
  std::string to_string() const;
  auto operator<=>(const RamificationProfile&) const = default;
};

// Degree (|B|, a) of a pearl diagram.
struct DiagramDegree {
  std::int64_t norm = 1;
  std::int64_t a = 1;

  void validate() const;
  std::string to_string() const;
  auto operator<=>(const DiagramDegree&) const = default;
};

NStarModule<RamificationProfile> ramification_module();
NStarModule<DiagramDegree> degree_module();

// Parses "1,-1" style integer lists.
std::vector<std::int64_t> parse_int_list(const std::string& text);

}  // namespace mcf
