#include "mcf/diagrams.hpp"
#include "mcf/refined_divisors.hpp"

namespace mcf {

namespace {

void require_point_mode_genera(const std::vector<int>& genera) {
  for (int g : genera)
    if (g != 1) throw InvalidDiagram("point insertions need genus-1 vertices");
}

// a^(n_v - 1) [W_{g_v}(w_v)] sigma^{delta}_{m}(a) for one decorated vertex.
TBasis vertex_factor(std::int64_t a, int genus, const std::vector<std::int64_t>& signed_weights, std::int64_t delta,
                     MultiplicityMode mode) {
  const auto valence = static_cast<std::int64_t>(signed_weights.size());
  Rational c = rpow(a, valence - 1);
  unsigned m = 1;
  if (mode == MultiplicityMode::lambda) {
    c *= wg_polynomial(genus, signed_weights);
    m = static_cast<unsigned>(2 * genus - 1);
  }
  return tb_scale(c, refined_sigma_t_basis(m, delta, a));
}

}  // namespace

TBasis floor_multiplicity_t_basis(const FloorDiagram& d, MultiplicityMode mode) {
  if (auto defect = floor_diagram_defect(d)) throw InvalidDiagram(*defect);
  std::vector<int> genera;
  for (const auto& v : d.interior)
    if (v.kind == FloorVertexKind::floor) genera.push_back(v.genus);
  if (mode == MultiplicityMode::points) require_point_mode_genera(genera);

  BigInt edge_factor = 1;
  for (const auto& e : d.edges) {
    if (!d.is_flat(e.tail) && !d.is_flat(e.head)) edge_factor *= e.weight * e.weight;
    if (d.is_bounded(e)) edge_factor *= e.weight;
  }
  const std::int64_t delta = d.norm();
  TBasis out{{1, Rational(edge_factor)}};
  for (int v = 0; v < d.positions(); ++v) {
    if (d.is_flat(v)) continue;
    std::vector<std::int64_t> w;
    for (const auto& e : d.edges) {
      if (e.tail == v) w.push_back(e.weight);
      if (e.head == v) w.push_back(-e.weight);
    }
    out = tb_mul(out, vertex_factor(d.interior[v].a, d.interior[v].genus, w, delta, mode));
  }
  out = tb_mul(out, TBasis{{delta / d.length(), Rational(1)}});
  const BigInt denom = d.labeled ? factorial(static_cast<unsigned>(d.edges.size())) : BigInt(automorphism_count(d));
  return tb_scale(make_rational(BigInt(1), denom), out);
}

GroupElement floor_multiplicity(const FloorDiagram& d, MultiplicityMode mode) {
  return from_t_basis(floor_multiplicity_t_basis(d, mode));
}

TBasis pearl_multiplicity_t_basis(const PearlDiagram& d, MultiplicityMode mode) {
  if (auto defect = pearl_diagram_defect(d)) throw InvalidDiagram(*defect);
  std::vector<int> genera;
  for (const auto& v : d.vertices)
    if (v.kind == PearlVertexKind::pearl) genera.push_back(v.genus);
  if (mode == MultiplicityMode::points) require_point_mode_genera(genera);

  const std::int64_t delta = d.norm();
  BigInt edge_factor = BigInt(delta) * delta;
  for (const auto& e : d.edges) {
    if (!d.is_flat(e.tail) && !d.is_flat(e.head)) edge_factor *= e.weight * e.weight;
    edge_factor *= e.weight;
  }
  TBasis out{{1, Rational(edge_factor)}};
  for (int v = 0; v < d.size(); ++v) {
    if (d.is_flat(v)) continue;
    std::vector<std::int64_t> w;
    for (const auto& e : d.edges) {
      if (e.tail == v) w.push_back(e.weight);
      if (e.head == v) w.push_back(-e.weight);
    }
    out = tb_mul(out, vertex_factor(d.vertices[v].a, d.vertices[v].genus, w, delta, mode));
  }
  out = tb_mul(out, TBasis{{delta / d.length(), Rational(1)}});
  const BigInt denom = d.labeled ? factorial(static_cast<unsigned>(d.edges.size())) : BigInt(automorphism_count(d));
  return tb_scale(make_rational(BigInt(1), denom), out);
}

GroupElement pearl_multiplicity(const PearlDiagram& d, MultiplicityMode mode) {
  return from_t_basis(pearl_multiplicity_t_basis(d, mode));
}

}  // namespace mcf
