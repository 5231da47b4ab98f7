#include "mcf/json_io.hpp"

#include <algorithm>

namespace mcf {

namespace {

Json fraction(const Rational& r) { return Json::array({to_json(BigInt(r.get_num())), to_json(BigInt(r.get_den()))}); }

const char* kind_name(FloorVertexKind k) {
  switch (k) {
    case FloorVertexKind::source:
      return "source";
    case FloorVertexKind::sink:
      return "sink";
    case FloorVertexKind::flat:
      return "flat";
    case FloorVertexKind::floor:
      return "floor";
  }
  return "";
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const BigInt& z) {
  if (mpz_fits_slong_p(z.get_mpz_t())) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

Json to_json(const TBasis& c) {
  Json out = Json::object();
  for (const auto& [k, v] : c) out[std::to_string(k)] = to_json(v);
  return out;
}

Json to_json(const GroupElement& a) {
  std::vector<std::pair<TorsionPoint, Rational>> terms(a.terms().begin(), a.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    const Rational lx = l.first.x_value(), rx = r.first.x_value();
    if (lx != rx) return lx < rx;
    return l.first.y_value() < r.first.y_value();
  });
  Json out = Json::array();
  for (const auto& [p, c] : terms)
    out.push_back({{"x", fraction(p.x_value())}, {"y", fraction(p.y_value())}, {"coeff", fraction(c)}});
  return out;
}

Json to_json(const FloorDiagram& d) {
  Json vertices = Json::array();
  for (int p = 0; p < d.positions(); ++p) {
    const auto& v = d.interior[p];
    vertices.push_back({{"kind", kind_name(v.kind)}, {"a", v.a}, {"g", v.genus}, {"pos", p}});
  }
  for (int i = 0; i < d.ends(); ++i)
    vertices.push_back({{"kind", d.profile[i] < 0 ? "source" : "sink"}, {"a", 0}, {"g", 0}, {"pos", nullptr}, {"end", i}});
  Json edges = Json::array();
  for (const auto& e : d.edges) edges.push_back({e.tail, e.head, e.weight});
  return {{"vertices", vertices},
          {"edges", edges},
          {"degree", Json::array({d.profile, d.degree_a()})},
          {"genus", d.genus()},
          {"labeled", d.labeled}};
}

Json to_json(const PearlDiagram& d) {
  Json vertices = Json::array();
  for (int p = 0; p < d.size(); ++p) {
    const auto& v = d.vertices[p];
    vertices.push_back({{"kind", v.kind == PearlVertexKind::pearl ? "pearl" : "flat"}, {"a", v.a}, {"g", v.genus}, {"pos", p}});
  }
  Json edges = Json::array();
  for (const auto& e : d.edges) edges.push_back({e.tail, e.head, e.weight, e.winding});
  return {{"vertices", vertices},
          {"edges", edges},
          {"degree", Json::array({d.norm(), d.degree_a()})},
          {"genus", d.genus()},
          {"labeled", d.labeled}};
}

Json to_json(const MCFReport& r) {
  Json checked = Json::array();
  for (const auto& c : r.checked) {
    Json item = {{"element", c.element}, {"pass", c.pass}, {"lhs", to_json(c.lhs)}, {"rhs", to_json(c.rhs)}};
    if (!c.note.empty()) item["note"] = c.note;
    checked.push_back(item);
  }
  return {{"alpha", r.alpha}, {"passed", r.passed()}, {"checked", checked}};
}

Json to_json(const Subgroup& k) {
  const Cotype ct = k.cotype();
  return {{"modulus", k.modulus()},
          {"basis", Json::array({Json::array({k.a(), k.b()}), Json::array({0, k.c()})})},
          {"cotype", Json::array({ct.d1, ct.d2})},
          {"index", k.index()},
          {"order", k.order()}};
}

}  // namespace mcf
