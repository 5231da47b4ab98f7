#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "mcf/diagrams.hpp"
#include "union_find.hpp"

namespace mcf {

using detail::UnionFind;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) {
  const std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace

// ---------------------------------------------------------------- floors

std::int64_t FloorDiagram::degree_a() const {
  std::int64_t s = 0;
  for (const auto& v : interior)
    if (v.kind == FloorVertexKind::floor) s += v.a;
  return s;
}

std::int64_t FloorDiagram::norm() const {
  std::int64_t g = 0;
  for (std::int64_t x : profile) g = std::gcd(g, x);
  return g;
}

std::int64_t FloorDiagram::length() const {
  std::int64_t g = 0;
  for (const auto& e : edges) g = std::gcd(g, e.weight);
  for (const auto& v : interior)
    if (v.kind == FloorVertexKind::floor) g = std::gcd(g, v.a);
  return g;
}

int FloorDiagram::floor_count() const {
  return static_cast<int>(std::count_if(interior.begin(), interior.end(),
                                        [](const FloorVertex& v) { return v.kind == FloorVertexKind::floor; }));
}

int FloorDiagram::flat_count() const { return positions() - floor_count(); }

int FloorDiagram::bounded_edge_count() const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const FloorEdge& e) { return is_bounded(e); }));
}

int FloorDiagram::free_edge_count() const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [&](const FloorEdge& e) { return !is_flat(e.tail) && !is_flat(e.head); }));
}

int FloorDiagram::valence(int v) const {
  int n = 0;
  for (const auto& e : edges) n += (e.tail == v) + (e.head == v);
  return n;
}

int FloorDiagram::first_betti() const {
  UnionFind uf(vertex_count());
  int components = vertex_count();
  for (const auto& e : edges)
    if (uf.unite(e.tail, e.head)) --components;
  return static_cast<int>(edges.size()) - vertex_count() + components;
}

int FloorDiagram::genus() const {
  int g = first_betti();
  for (const auto& v : interior)
    if (v.kind == FloorVertexKind::floor) g += v.genus;
  return g;
}

int FloorDiagram::skeleton_genus() const { return first_betti() + floor_count(); }

std::string FloorDiagram::canonical_key() const {
  std::string out = labeled ? "L|" : "U|";
  for (const auto& v : interior) {
    if (v.kind == FloorVertexKind::flat)
      out += "f ";
    else
      out += "F" + std::to_string(v.a) + "g" + std::to_string(v.genus) + " ";
  }
  out += "|";
  for (std::int64_t x : profile) out += std::to_string(x) + " ";
  out += "|";
  std::vector<FloorEdge> es = edges;
  if (!labeled) std::sort(es.begin(), es.end());
  for (const auto& e : es)
    out += std::to_string(e.tail) + ">" + std::to_string(e.head) + ":" + std::to_string(e.weight) + " ";
  return out;
}

std::optional<std::string> floor_diagram_defect(const FloorDiagram& d) {
  const int n_pos = d.positions();
  const int nv = d.vertex_count();
  if (d.ends() < 2) return "fewer than two ends";
  std::int64_t sum = 0;
  for (std::int64_t x : d.profile) {
    if (x == 0) return "zero end weight";
    sum += x;
  }
  if (sum != 0) return "end weights do not sum to zero";
  for (const auto& v : d.interior) {
    if (v.kind == FloorVertexKind::flat && (v.a != 0 || v.genus != 0)) return "decorated flat";
    if (v.kind == FloorVertexKind::floor && (v.a < 1 || v.genus < 1)) return "floor without positive labels";
    if (v.kind != FloorVertexKind::flat && v.kind != FloorVertexKind::floor) return "interior vertex of end kind";
  }
  std::vector<int> in_count(nv, 0), out_count(nv, 0);
  std::vector<std::int64_t> in_weight(nv, 0), out_weight(nv, 0);
  for (const auto& e : d.edges) {
    if (e.tail < 0 || e.tail >= nv || e.head < 0 || e.head >= nv) return "edge endpoint out of range";
    if (e.weight < 1) return "non-positive edge weight";
    if (e.tail == e.head) return "loop";
    const bool te = d.is_end_vertex(e.tail), he = d.is_end_vertex(e.head);
    if (te && he) return "edge between two ends";
    if (!te && !he && e.tail >= e.head) return "bounded edge against the order";
    if (te && (d.profile[e.tail - n_pos] > 0 || e.weight != -d.profile[e.tail - n_pos])) return "source end mismatch";
    if (he && (d.profile[e.head - n_pos] < 0 || e.weight != d.profile[e.head - n_pos])) return "sink end mismatch";
    ++out_count[e.tail];
    ++in_count[e.head];
    out_weight[e.tail] += e.weight;
    in_weight[e.head] += e.weight;
  }
  for (int v = n_pos; v < nv; ++v)
    if (in_count[v] + out_count[v] != 1) return "end vertex is not univalent";
  for (int v = 0; v < n_pos; ++v) {
    if (in_weight[v] != out_weight[v]) return "unbalanced vertex at position " + std::to_string(v);
    if (d.is_flat(v) && (in_count[v] != 1 || out_count[v] != 1)) return "flat is not bivalent";
    if (in_count[v] == 0) return "isolated vertex at position " + std::to_string(v);
  }

  UnionFind whole(nv);
  int components = nv;
  for (const auto& e : d.edges)
    if (whole.unite(e.tail, e.head)) --components;
  if (components != 1) return "disconnected";

  // Cut at flats: a flat at p keeps its incoming side as node p and its
  // outgoing side as node nv + p.
  UnionFind hat(nv + n_pos);
  for (int v = n_pos; v < nv; ++v) hat.mark_end(v);
  for (const auto& e : d.edges) {
    const int t = d.is_flat(e.tail) ? nv + e.tail : e.tail;
    if (!hat.unite(t, e.head)) return "cycle away from the flats";
  }
  for (int v = 0; v < nv + n_pos; ++v) {
    if (v >= nv && !d.is_flat(v - nv)) continue;
    if (hat.ends(v) != 1) return "component without a unique end";
  }
  return std::nullopt;
}

bool floor_count_identities_hold(const FloorDiagram& d) {
  const int g = d.skeleton_genus();
  const int n = d.ends();
  const int eb = d.bounded_edge_count();
  int valence_sum = 0;
  for (int v = 0; v < d.positions(); ++v)
    if (!d.is_flat(v)) valence_sum += d.valence(v);
  return d.flat_count() == eb + 1 - g && d.floor_count() == n + 2 * g - 2 - eb &&
         d.free_edge_count() == n + 2 * g - 2 - eb && valence_sum == n + 2 * g - 2 &&
         d.positions() == n + g - 1;
}

FloorDiagram scale_diagram(const FloorDiagram& d, std::int64_t k) {
  if (k < 1) throw std::domain_error("scale factor must be positive");
  FloorDiagram out = d;
  for (auto& v : out.interior) v.a *= k;
  for (auto& x : out.profile) x *= k;
  for (auto& e : out.edges) e.weight *= k;
  return out;
}

FloorDiagram divide_diagram(const FloorDiagram& d, std::int64_t k) {
  if (k < 1 || d.length() % k != 0) throw std::domain_error("diagram is not divisible by " + std::to_string(k));
  FloorDiagram out = d;
  for (auto& v : out.interior) v.a /= k;
  for (auto& x : out.profile) x /= k;
  for (auto& e : out.edges) e.weight /= k;
  return out;
}

std::int64_t automorphism_count(const FloorDiagram& d) {
  if (d.labeled) return 1;
  std::map<FloorEdge, std::int64_t> groups;
  for (const auto& e : d.edges)
    if (d.is_bounded(e)) ++groups[e];
  std::int64_t aut = 1;
  for (const auto& [e, m] : groups) aut *= factorial(static_cast<unsigned>(m)).get_si();
  return aut;
}

NStarModule<FloorDiagram> floor_diagram_module() {
  NStarModule<FloorDiagram> m;
  m.name = "floor diagrams";
  m.act = [](std::int64_t k, const FloorDiagram& d) { return scale_diagram(d, k); };
  m.norm = [](const FloorDiagram& d) { return d.norm(); };
  m.divisors = [](const FloorDiagram& d) {
    std::vector<std::pair<std::int64_t, FloorDiagram>> out;
    for (std::int64_t k : divisors(d.length())) out.emplace_back(k, divide_diagram(d, k));
    return out;
  };
  m.describe = [](const FloorDiagram& d) { return d.canonical_key(); };
  return m;
}

// ---------------------------------------------------------------- pearls

std::int64_t PearlDiagram::path_length(const PearlEdge& e) const {
  return mod(e.head - e.tail, size()) + e.winding * size();
}

std::int64_t PearlDiagram::crossings(const PearlEdge& e, int s) const {
  const std::int64_t len = path_length(e);
  const std::int64_t first = mod(s - e.tail, size());
  if (first >= len) return 0;
  return 1 + (len - 1 - first) / size();
}

std::int64_t PearlDiagram::degree_a() const {
  std::int64_t s = 0;
  for (const auto& v : vertices)
    if (v.kind == PearlVertexKind::pearl) s += v.a;
  return s;
}

std::int64_t PearlDiagram::norm() const {
  std::int64_t s = 0;
  for (const auto& e : edges) s += e.weight * crossings(e, size() - 1);
  return s;
}

std::int64_t PearlDiagram::weight_gcd() const {
  std::int64_t g = 0;
  for (const auto& e : edges) g = std::gcd(g, e.weight);
  return g;
}

std::int64_t PearlDiagram::length() const {
  std::int64_t g = weight_gcd();
  for (const auto& v : vertices)
    if (v.kind == PearlVertexKind::pearl) g = std::gcd(g, v.a);
  return g;
}

int PearlDiagram::pearl_count() const {
  return static_cast<int>(std::count_if(vertices.begin(), vertices.end(),
                                        [](const PearlVertex& v) { return v.kind == PearlVertexKind::pearl; }));
}

int PearlDiagram::flat_count() const { return size() - pearl_count(); }

int PearlDiagram::free_edge_count() const {
  return static_cast<int>(
      std::count_if(edges.begin(), edges.end(), [&](const PearlEdge& e) { return !is_flat(e.tail) && !is_flat(e.head); }));
}

int PearlDiagram::valence(int v) const {
  int n = 0;
  for (const auto& e : edges) n += (e.tail == v) + (e.head == v);
  return n;
}

int PearlDiagram::first_betti() const {
  UnionFind uf(size());
  int components = size();
  for (const auto& e : edges)
    if (uf.unite(e.tail, e.head)) --components;
  return static_cast<int>(edges.size()) - size() + components;
}

int PearlDiagram::genus() const {
  int g = first_betti();
  for (const auto& v : vertices)
    if (v.kind == PearlVertexKind::pearl) g += v.genus;
  return g;
}

int PearlDiagram::skeleton_genus() const { return first_betti() + pearl_count(); }

std::string PearlDiagram::canonical_key() const {
  std::string out = labeled ? "L|" : "U|";
  for (const auto& v : vertices) {
    if (v.kind == PearlVertexKind::flat)
      out += "f ";
    else
      out += "P" + std::to_string(v.a) + "g" + std::to_string(v.genus) + " ";
  }
  out += "|";
  std::vector<PearlEdge> es = edges;
  if (!labeled) std::sort(es.begin(), es.end());
  for (const auto& e : es)
    out += std::to_string(e.tail) + ">" + std::to_string(e.head) + ":" + std::to_string(e.weight) + "r" +
           std::to_string(e.winding) + " ";
  return out;
}

std::optional<std::string> pearl_diagram_defect(const PearlDiagram& d) {
  const int g = d.size();
  if (g < 2) return "fewer than two vertices";
  for (const auto& v : d.vertices) {
    if (v.kind == PearlVertexKind::flat && (v.a != 0 || v.genus != 0)) return "decorated flat";
    if (v.kind == PearlVertexKind::pearl && (v.a < 1 || v.genus < 1)) return "pearl without positive labels";
  }
  std::vector<int> in_count(g, 0), out_count(g, 0);
  std::vector<std::int64_t> in_weight(g, 0), out_weight(g, 0);
  for (const auto& e : d.edges) {
    if (e.tail < 0 || e.tail >= g || e.head < 0 || e.head >= g) return "edge endpoint out of range";
    if (e.weight < 1) return "non-positive edge weight";
    if (e.winding < 0) return "negative winding";
    if (d.path_length(e) < 1) return "edge of zero length";
    ++out_count[e.tail];
    ++in_count[e.head];
    out_weight[e.tail] += e.weight;
    in_weight[e.head] += e.weight;
  }
  for (int v = 0; v < g; ++v) {
    if (in_weight[v] != out_weight[v]) return "unbalanced vertex " + std::to_string(v);
    if (d.is_flat(v) && (in_count[v] != 1 || out_count[v] != 1)) return "flat is not bivalent";
    if (in_count[v] == 0) return "isolated vertex " + std::to_string(v);
  }
  const std::int64_t deg = d.norm();
  if (deg < 1) return "zero degree";
  for (int s = 0; s < g; ++s) {
    std::int64_t c = 0;
    for (const auto& e : d.edges) c += e.weight * d.crossings(e, s);
    if (c != deg) return "degree differs along the cycle";
  }
  // Cutting at flats must leave a tree.
  UnionFind hat(2 * g);
  int components = 0;
  for (int v = 0; v < g; ++v) components += d.is_flat(v) ? 2 : 1;
  for (const auto& e : d.edges) {
    const int t = d.is_flat(e.tail) ? g + e.tail : e.tail;
    if (!hat.unite(t, e.head)) return "cycle away from the flats";
    --components;
  }
  if (components != 1) return "cut at the flats is disconnected";
  return std::nullopt;
}

bool pearl_count_identities_hold(const PearlDiagram& d) {
  const int g = d.size();
  const int eb = static_cast<int>(d.edges.size());
  int valence_sum = 0;
  for (int v = 0; v < g; ++v)
    if (!d.is_flat(v)) valence_sum += d.valence(v);
  return d.skeleton_genus() == g && d.flat_count() == 1 - g + eb && d.pearl_count() == 2 * g - 1 - eb &&
         d.free_edge_count() == 2 * g - 2 - eb && valence_sum == 2 * g - 2;
}

PearlDiagram scale_diagram(const PearlDiagram& d, std::int64_t k) {
  if (k < 1) throw std::domain_error("scale factor must be positive");
  PearlDiagram out = d;
  for (auto& v : out.vertices) v.a *= k;
  for (auto& e : out.edges) e.weight *= k;
  return out;
}

PearlDiagram divide_diagram(const PearlDiagram& d, std::int64_t k) {
  if (k < 1 || d.length() % k != 0) throw std::domain_error("diagram is not divisible by " + std::to_string(k));
  PearlDiagram out = d;
  for (auto& v : out.vertices) v.a /= k;
  for (auto& e : out.edges) e.weight /= k;
  return out;
}

std::int64_t automorphism_count(const PearlDiagram& d) {
  if (d.labeled) return 1;
  std::map<PearlEdge, std::int64_t> groups;
  for (const auto& e : d.edges) ++groups[e];
  std::int64_t aut = 1;
  for (const auto& [e, m] : groups) aut *= factorial(static_cast<unsigned>(m)).get_si();
  return aut;
}

NStarModule<PearlDiagram> pearl_diagram_module() {
  NStarModule<PearlDiagram> m;
  m.name = "pearl diagrams";
  m.act = [](std::int64_t k, const PearlDiagram& d) { return scale_diagram(d, k); };
  m.norm = [](const PearlDiagram& d) { return d.norm(); };
  m.divisors = [](const PearlDiagram& d) {
    std::vector<std::pair<std::int64_t, PearlDiagram>> out;
    for (std::int64_t k : divisors(d.length())) out.emplace_back(k, divide_diagram(d, k));
    return out;
  };
  m.describe = [](const PearlDiagram& d) { return d.canonical_key(); };
  return m;
}

// ---------------------------------------------------------------- shared

Rational wg_polynomial(int g, const std::vector<std::int64_t>& w) {
  if (g < 0) throw std::domain_error("genus must be nonnegative");
  std::int64_t sum = 0;
  for (std::int64_t x : w) {
    if (x == 0) throw std::domain_error("weights must be nonzero");
    sum += x;
  }
  if (sum != 0) throw std::domain_error("weights must sum to zero");
  const std::size_t n = w.size();
  if (n > 20) throw BoundExceeded("vertex valence", std::to_string(n) + " adjacent edges");
  const int power = static_cast<int>(n) + 2 * g - 2;
  if (power < 0) throw std::domain_error("negative weight-polynomial degree");
  BigInt total = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    std::int64_t ws = 0;
    int bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (s >> i & 1) {
        ws += w[i];
        ++bits;
      }
    BigInt term;
    mpz_pow_ui(term.get_mpz_t(), BigInt(static_cast<long>(ws)).get_mpz_t(), static_cast<unsigned long>(power));
    if (bits % 2) total -= term;
    else total += term;
  }
  BigInt prod = 1;
  for (std::int64_t x : w) prod *= x;
  Rational r = make_rational(total, prod * factorial(static_cast<unsigned>(power)));
  if ((n + g - 1) % 2) r = -r;
  return r;
}

}  // namespace mcf
