#pragma once

#include <cstdint>

#include "mcf/group_algebra.hpp"

namespace mcf {

// sum over k | a of (a/k)^m T_{delta / gcd(delta, k)}, as a T-basis expansion.
TBasis refined_sigma_t_basis(unsigned m, std::int64_t delta, std::int64_t a);

// Same value materialized in the group algebra. Requires delta, a >= 1.
GroupElement refined_sigma(unsigned m, std::int64_t delta, std::int64_t a);

}  // namespace mcf
