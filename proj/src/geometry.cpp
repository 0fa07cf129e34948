#include "bdmfem/geometry.hpp"

#include <cmath>

#include <fmt/format.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

BarycentricCoefficients barycentric_gradients(const Mesh& mesh) {
  const int nt = mesh.num_elements();
  BarycentricCoefficients c;
  c.a.resize(nt);
  c.b.resize(nt);
  c.area.resize(nt);
  for (int t = 0; t < nt; ++t) {
    const auto& tri = mesh.elements[t];
    for (int i = 0; i < 3; ++i) {
      const Point next = mesh.nodes[tri[(i + 1) % 3]];
      const Point prev = mesh.nodes[tri[(i + 2) % 3]];
      c.a[t][i] = next.y - prev.y;
      c.b[t][i] = prev.x - next.x;
    }
    c.area[t] = (c.a[t][1] * c.b[t][2] - c.a[t][2] * c.b[t][1]) / 2.0;
    if (!(c.area[t] > 0.0))
      throw MeshError(fmt::format("degenerate or clockwise element {} (area {})", t + 1, c.area[t]));
  }
  return c;
}

EdgeGeometry edge_geometry(const Mesh& mesh, const EdgeTopology& topo) {
  const int ne = topo.num_edges();
  EdgeGeometry g;
  g.length.resize(ne);
  g.tangent.resize(ne);
  g.normal.resize(ne);
  for (int e = 0; e < ne; ++e) {
    const Point d = mesh.nodes[topo.edges[e].end] - mesh.nodes[topo.edges[e].start];
    const double len = std::hypot(d.x, d.y);
    if (!(len > 0.0))
      throw MeshError(fmt::format("zero-length edge between vertices {} and {}", topo.edges[e].start + 1,
                                  topo.edges[e].end + 1));
    g.length[e] = len;
    g.tangent[e] = {d.x / len, d.y / len};
    g.normal[e] = {d.y / len, -d.x / len};
  }
  return g;
}

std::array<double, 3> barycentric_at(const Mesh& mesh, int t, Point p) {
  const auto& tri = mesh.elements[t];
  const Point z[3] = {mesh.nodes[tri[0]], mesh.nodes[tri[1]], mesh.nodes[tri[2]]};
  const auto twice_area = [](Point u, Point v, Point w) {
    return (v.x - u.x) * (w.y - u.y) - (w.x - u.x) * (v.y - u.y);
  };
  const double total = twice_area(z[0], z[1], z[2]);
  return {twice_area(p, z[1], z[2]) / total, twice_area(z[0], p, z[2]) / total,
          twice_area(z[0], z[1], p) / total};
}

Point physical_point(const Mesh& mesh, int t, const std::array<double, 3>& lambda) {
  const auto& tri = mesh.elements[t];
  return lambda[0] * mesh.nodes[tri[0]] + lambda[1] * mesh.nodes[tri[1]] + lambda[2] * mesh.nodes[tri[2]];
}

Point centroid(const Mesh& mesh, int t) {
  const auto& tri = mesh.elements[t];
  const Point sum = mesh.nodes[tri[0]] + mesh.nodes[tri[1]] + mesh.nodes[tri[2]];
  return {sum.x / 3.0, sum.y / 3.0};
}

MeshData prepare_mesh(Mesh mesh) {
  require_valid(mesh);
  MeshData d;
  d.topo = build_edge_topology(mesh);
  d.coeffs = barycentric_gradients(mesh);
  d.edges = edge_geometry(mesh, d.topo);
  d.neighbors.resize(d.topo.num_edges());
  for (int t = 0; t < mesh.num_elements(); ++t)
    for (int i = 0; i < 3; ++i) {
      auto& nb = d.neighbors[d.topo.elem_to_edge[t][i]];
      const int k = nb.element[0] < 0 ? 0 : 1;
      nb.element[k] = t;
      nb.local_edge[k] = i;
    }
  d.mesh = std::move(mesh);
  return d;
}

}  // namespace bdmfem
