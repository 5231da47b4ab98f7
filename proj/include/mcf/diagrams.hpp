#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcf/degrees.hpp"
#include "mcf/group_algebra.hpp"
#include "mcf/mcf.hpp"

namespace mcf {

enum class EnumerationMode { unlabeled_aut, labeled };

struct EnumerationOptions {
  EnumerationMode mode = EnumerationMode::unlabeled_aut;
  unsigned workers = 1;
  // Skeleton genus in the lambda refinement; the extra genus is spread over
  // floors or pearls. Unset means point insertions.
  std::optional<int> lambda_g0;
  int max_genus = 4;
  std::int64_t max_floor_degree = 12;
  std::int64_t max_pearl_norm = 8;
  std::int64_t max_pearl_degree = 8;
  // Refuse to expand labeled diagrams with more edges than this.
  int max_labeled_edges = 9;
};

enum class MultiplicityMode { points, lambda };

// ---------------------------------------------------------------- floors

enum class FloorVertexKind { source, sink, flat, floor };

struct FloorVertex {
  FloorVertexKind kind = FloorVertexKind::flat;
  std::int64_t a = 0;
  int genus = 0;
  auto operator<=>(const FloorVertex&) const = default;
};

struct FloorEdge {
  int tail = 0;
  int head = 0;
  std::int64_t weight = 1;
  auto operator<=>(const FloorEdge&) const = default;
};

// Vertices 0..N-1 are the flats and floors in their total order; vertex N+i
// is the end labeled i, with signed weight profile[i].
struct FloorDiagram {
  std::vector<FloorVertex> interior;
  std::vector<std::int64_t> profile;
  std::vector<FloorEdge> edges;
  // Edge order is part of the data when true.
  bool labeled = false;

  int positions() const { return static_cast<int>(interior.size()); }
  int ends() const { return static_cast<int>(profile.size()); }
  int vertex_count() const { return positions() + ends(); }
  bool is_end_vertex(int v) const { return v >= positions(); }
  bool is_flat(int v) const { return v < positions() && interior[v].kind == FloorVertexKind::flat; }
  bool is_bounded(const FloorEdge& e) const { return !is_end_vertex(e.tail) && !is_end_vertex(e.head); }

  std::int64_t degree_a() const;
  std::int64_t norm() const;
  std::int64_t length() const;
  int floor_count() const;
  int flat_count() const;
  int bounded_edge_count() const;
  // Edges with neither endpoint a flat.
  int free_edge_count() const;
  int valence(int v) const;
  int first_betti() const;
  int genus() const;
  // b1 plus the number of floors.
  int skeleton_genus() const;

  std::string canonical_key() const;
  auto operator<=>(const FloorDiagram&) const = default;
};

// Reason the diagram is invalid, or nullopt.
std::optional<std::string> floor_diagram_defect(const FloorDiagram& d);
bool floor_count_identities_hold(const FloorDiagram& d);

std::vector<FloorDiagram> enumerate_floor_diagrams(int g, std::int64_t a, const std::vector<std::int64_t>& w,
                                                   const EnumerationOptions& opts = {});

FloorDiagram scale_diagram(const FloorDiagram& d, std::int64_t k);
// Divides every weight and label by k; requires k | length().
FloorDiagram divide_diagram(const FloorDiagram& d, std::int64_t k);
std::int64_t automorphism_count(const FloorDiagram& d);

GroupElement floor_multiplicity(const FloorDiagram& d, MultiplicityMode mode = MultiplicityMode::points);
TBasis floor_multiplicity_t_basis(const FloorDiagram& d, MultiplicityMode mode = MultiplicityMode::points);

NStarModule<FloorDiagram> floor_diagram_module();

// ---------------------------------------------------------------- pearls

enum class PearlVertexKind { pearl, flat };

struct PearlVertex {
  PearlVertexKind kind = PearlVertexKind::flat;
  std::int64_t a = 0;
  int genus = 0;
  auto operator<=>(const PearlVertex&) const = default;
};

// The edge runs forward along the cycle from tail to head, going round
// `winding` extra full turns.
struct PearlEdge {
  int tail = 0;
  int head = 0;
  std::int64_t weight = 1;
  std::int64_t winding = 0;
  auto operator<=>(const PearlEdge&) const = default;
};

// Vertex i sits on the i-th component of the cycle.
struct PearlDiagram {
  std::vector<PearlVertex> vertices;
  std::vector<PearlEdge> edges;
  bool labeled = false;

  int size() const { return static_cast<int>(vertices.size()); }
  bool is_flat(int v) const { return vertices[v].kind == PearlVertexKind::flat; }
  std::int64_t path_length(const PearlEdge& e) const;
  // Times the edge passes over the segment from s to s+1 (mod size).
  std::int64_t crossings(const PearlEdge& e, int s) const;

  std::int64_t degree_a() const;
  std::int64_t norm() const;
  std::int64_t weight_gcd() const;
  std::int64_t length() const;
  int pearl_count() const;
  int flat_count() const;
  int free_edge_count() const;
  int valence(int v) const;
  int first_betti() const;
  int genus() const;
  int skeleton_genus() const;

  std::string canonical_key() const;
  auto operator<=>(const PearlDiagram&) const = default;
};

std::optional<std::string> pearl_diagram_defect(const PearlDiagram& d);
bool pearl_count_identities_hold(const PearlDiagram& d);

std::vector<PearlDiagram> enumerate_pearl_diagrams(int g, const DiagramDegree& b, const EnumerationOptions& opts = {});

PearlDiagram scale_diagram(const PearlDiagram& d, std::int64_t k);
PearlDiagram divide_diagram(const PearlDiagram& d, std::int64_t k);
std::int64_t automorphism_count(const PearlDiagram& d);

GroupElement pearl_multiplicity(const PearlDiagram& d, MultiplicityMode mode = MultiplicityMode::points);
TBasis pearl_multiplicity_t_basis(const PearlDiagram& d, MultiplicityMode mode = MultiplicityMode::points);

NStarModule<PearlDiagram> pearl_diagram_module();

// ---------------------------------------------------------------- shared

// Weight polynomial of a vertex of genus g with signed adjacent weights w.
Rational wg_polynomial(int g, const std::vector<std::int64_t>& w);

}  // namespace mcf
