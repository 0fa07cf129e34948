#pragma once

#include <array>
#include <vector>

#include "bdmfem/mesh.hpp"

namespace bdmfem {

/// Coefficients of the barycentric gradients, per element:
///   grad lambda_i      = (a_i, b_i) / (2|K|)
///   grad-perp lambda_i = (b_i, -a_i) / (2|K|)
/// with a_i = y_{i+1} - y_{i+2}, b_i = x_{i+2} - x_{i+1} (cyclic, 0-based).
/// The affine constants are never needed and are not stored.
struct BarycentricCoefficients {
  std::vector<std::array<double, 3>> a;
  std::vector<std::array<double, 3>> b;
  std::vector<double> area;

  Point grad(int t, int i) const { return {a[t][i] / (2 * area[t]), b[t][i] / (2 * area[t])}; }
  Point grad_perp(int t, int i) const { return {b[t][i] / (2 * area[t]), -a[t][i] / (2 * area[t])}; }
};

/// Length, unit tangent and unit normal of every global edge (s, t), s < t:
///   tangent = (x_t - x_s, y_t - y_s) / |E|,  normal = (y_t - y_s, x_s - x_t) / |E|.
struct EdgeGeometry {
  std::vector<double> length;
  std::vector<Point> tangent;
  std::vector<Point> normal;
};

/// Throws MeshError naming the first element with non-positive area.
BarycentricCoefficients barycentric_gradients(const Mesh& mesh);

/// Throws MeshError on a zero-length edge.
EdgeGeometry edge_geometry(const Mesh& mesh, const EdgeTopology& topo);

/// Barycentric coordinates of a physical point with respect to element t,
/// via sub-triangle area ratios.
std::array<double, 3> barycentric_at(const Mesh& mesh, int t, Point p);

/// Physical location of the point with barycentric coordinates lambda in element t.
Point physical_point(const Mesh& mesh, int t, const std::array<double, 3>& lambda);

Point centroid(const Mesh& mesh, int t);

/// Adjacent (element, local edge) slots of a global edge; the second slot is
/// {-1, -1} on the boundary.
struct EdgeNeighbors {
  std::array<int, 2> element{-1, -1};
  std::array<int, 2> local_edge{-1, -1};
};

/// A mesh together with everything derived from it once: topology, gradient
/// coefficients, edge geometry and edge-to-element adjacency. Immutable after
/// construction.
struct MeshData {
  Mesh mesh;
  EdgeTopology topo;
  BarycentricCoefficients coeffs;
  EdgeGeometry edges;
  std::vector<EdgeNeighbors> neighbors;

  int num_elements() const { return mesh.num_elements(); }
  int num_edges() const { return topo.num_edges(); }
};

/// Builds all derived data. Throws MeshError when the mesh is not valid.
MeshData prepare_mesh(Mesh mesh);

}  // namespace bdmfem
