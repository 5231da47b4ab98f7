#pragma once

#include <json.hpp>

#include "mcf/diagrams.hpp"
#include "mcf/group_algebra.hpp"
#include "mcf/mcf.hpp"
#include "mcf/subgroups.hpp"

namespace mcf {

using Json = nlohmann::json;

// "p/q", or "p" when q == 1.
Json to_json(const Rational& r);
// Integer when it fits in 64 bits, decimal string otherwise.
Json to_json(const BigInt& z);
// {"k": "c_k"} keyed by k.
Json to_json(const TBasis& c);
// [{"x":[num,den],"y":[num,den],"coeff":[num,den]}] sorted by coordinates.
Json to_json(const GroupElement& a);
Json to_json(const FloorDiagram& d);
Json to_json(const PearlDiagram& d);
Json to_json(const MCFReport& r);
Json to_json(const Subgroup& k);

}  // namespace mcf
