#pragma once

// Triangular mesh data model and the edge topology derived from it.
//
// All vertex, element and edge indices are 0-based in memory. The text file
// format (see mesh_io.hpp) is 1-based and converted once at ingest. Messages
// meant for users quote 1-based indices so they can be matched against the
// file.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace bdmfem {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }

/// Boundary condition attached to one element edge slot.
enum class Marker : std::uint8_t { Interior = 0, Dirichlet = 1, Neumann = 2 };

using Triangle = std::array<int, 3>;
using TriangleMarkers = std::array<Marker, 3>;

/// Local edge i of a triangle is the edge opposite local vertex i, traversed
/// in the counterclockwise direction of the element.
inline constexpr std::array<std::array<int, 2>, 3> kLocalEdges{{{1, 2}, {2, 0}, {0, 1}}};

/// Vertices, counterclockwise triangles, and per-slot boundary markers
/// (markers[t][i] annotates the edge opposite vertex i of element t).
struct Mesh {
  std::vector<Point> nodes;
  std::vector<Triangle> elements;
  std::vector<TriangleMarkers> markers;

  int num_nodes() const { return static_cast<int>(nodes.size()); }
  int num_elements() const { return static_cast<int>(elements.size()); }
  double signed_area(int t) const;
  double total_area() const;
  double max_edge_length() const;
};

/// Globally oriented edge: start < end.
struct Edge {
  int start = 0;
  int end = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct EdgeTopology {
  /// Unique edges, lexicographically sorted.
  std::vector<Edge> edges;
  /// Global edge index of each (element, local edge) slot.
  std::vector<std::array<int, 3>> elem_to_edge;
  /// +1 when the slot's counterclockwise direction agrees with the global
  /// (ascending) direction of the edge, -1 otherwise.
  std::vector<std::array<int, 3>> sign_edge;
  /// Number of element slots referencing each edge (1 on the boundary, 2 inside).
  std::vector<int> edge_multiplicity;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_elements() const { return static_cast<int>(elem_to_edge.size()); }
  bool is_boundary(int edge) const { return edge_multiplicity[edge] == 1; }
};

/// Dirichlet and Neumann edges resolved from the per-slot markers.
struct BoundaryEdges {
  std::vector<Edge> dirichlet;
  std::vector<Edge> neumann;
  /// Element-induced orientation relative to the global one, per row.
  std::vector<int> sign_d;
  std::vector<int> sign_n;
  /// Row positions of dirichlet/neumann inside EdgeTopology::edges.
  std::vector<int> ind_d;
  std::vector<int> ind_n;
};

enum class MeshRule {
  MarkerArraySize,
  IndexOutOfRange,
  UnreferencedVertex,
  NonPositiveArea,
  NonManifoldEdge,
  InvalidMarker,
  MarkerOnInteriorEdge,
  UnmarkedBoundaryEdge,
};

struct MeshViolation {
  MeshRule rule;
  int element = -1;  // 0-based, -1 when not element specific
  int vertex = -1;   // 0-based, -1 when not vertex specific
  std::string message;
};

/// Checks every Mesh invariant; an empty result means the mesh is valid.
std::vector<MeshViolation> validate_mesh(const Mesh& mesh);

/// Throws MeshError summarizing the violations when validate_mesh is not empty.
void require_valid(const Mesh& mesh);

/// Derives edges, the element-to-edge map and orientation signs.
/// Throws MeshError on out-of-range indices or an edge shared by more than two
/// elements.
EdgeTopology build_edge_topology(const Mesh& mesh);

/// Resolves markers to sorted Dirichlet/Neumann edge lists.
/// Throws MeshError when a nonzero marker sits on an interior edge.
BoundaryEdges classify_boundary(const Mesh& mesh, const EdgeTopology& topo);

/// Red refinement: every triangle is split into four through its edge
/// midpoints. Midpoint of global edge k becomes vertex num_nodes + k.
Mesh uniform_refine(const Mesh& mesh);
Mesh uniform_refine(const Mesh& mesh, const EdgeTopology& topo);

/// Returns a copy with every nonzero marker replaced by Dirichlet.
Mesh with_all_dirichlet(Mesh mesh);

}  // namespace bdmfem
