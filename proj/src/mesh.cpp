#include "bdmfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fmt/format.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

namespace {

std::uint64_t edge_key(int a, int b) {
  const auto lo = static_cast<std::uint64_t>(std::min(a, b));
  const auto hi = static_cast<std::uint64_t>(std::max(a, b));
  return (lo << 32) | hi;
}

bool indices_in_range(const Mesh& mesh) {
  const int n = mesh.num_nodes();
  for (const auto& tri : mesh.elements)
    for (int v : tri)
      if (v < 0 || v >= n) return false;
  return true;
}

}  // namespace

double Mesh::signed_area(int t) const {
  const auto& tri = elements[t];
  const Point p1 = nodes[tri[0]];
  const Point p2 = nodes[tri[1]];
  const Point p3 = nodes[tri[2]];
  return 0.5 * ((p2.x - p1.x) * (p3.y - p1.y) - (p3.x - p1.x) * (p2.y - p1.y));
}

double Mesh::total_area() const {
  double sum = 0.0;
  for (int t = 0; t < num_elements(); ++t) sum += signed_area(t);
  return sum;
}

double Mesh::max_edge_length() const {
  double h = 0.0;
  for (const auto& tri : elements)
    for (const auto& le : kLocalEdges) {
      const Point d = nodes[tri[le[1]]] - nodes[tri[le[0]]];
      h = std::max(h, std::hypot(d.x, d.y));
    }
  return h;
}

EdgeTopology build_edge_topology(const Mesh& mesh) {
  if (!indices_in_range(mesh))
    throw MeshError("element references a vertex index out of range");

  const int nt = mesh.num_elements();
  // (key, slot) with slot = 3*t + i
  std::vector<std::pair<std::uint64_t, int>> slots;
  slots.reserve(3 * static_cast<std::size_t>(nt));
  for (int t = 0; t < nt; ++t)
    for (int i = 0; i < 3; ++i) {
      const auto& tri = mesh.elements[t];
      slots.emplace_back(edge_key(tri[kLocalEdges[i][0]], tri[kLocalEdges[i][1]]), 3 * t + i);
    }
  std::sort(slots.begin(), slots.end());

  EdgeTopology topo;
  topo.elem_to_edge.resize(nt);
  topo.sign_edge.resize(nt);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto [key, slot] = slots[k];
    if (k == 0 || key != slots[k - 1].first) {
      topo.edges.push_back({static_cast<int>(key >> 32), static_cast<int>(key & 0xffffffffu)});
      topo.edge_multiplicity.push_back(0);
    }
    const int e = topo.num_edges() - 1;
    if (++topo.edge_multiplicity[e] > 2)
      throw MeshError(fmt::format("non-manifold edge between vertices {} and {}",
                                  topo.edges[e].start + 1, topo.edges[e].end + 1));
    const int t = slot / 3;
    const int i = slot % 3;
    const auto& tri = mesh.elements[t];
    topo.elem_to_edge[t][i] = e;
    topo.sign_edge[t][i] = tri[kLocalEdges[i][0]] < tri[kLocalEdges[i][1]] ? 1 : -1;
  }
  return topo;
}

BoundaryEdges classify_boundary(const Mesh& mesh, const EdgeTopology& topo) {
  struct Row {
    Edge edge;
    int sign;
    int index;
  };
  std::vector<Row> dirichlet, neumann;
  for (int t = 0; t < mesh.num_elements(); ++t)
    for (int i = 0; i < 3; ++i) {
      const Marker m = mesh.markers[t][i];
      if (m == Marker::Interior) continue;
      const int e = topo.elem_to_edge[t][i];
      if (!topo.is_boundary(e))
        throw MeshError(fmt::format("element {} marks interior edge {} as a boundary edge", t + 1, i + 1));
      Row row{topo.edges[e], topo.sign_edge[t][i], e};
      (m == Marker::Dirichlet ? dirichlet : neumann).push_back(row);
    }

  const auto by_edge = [](const Row& a, const Row& b) { return a.edge < b.edge; };
  std::sort(dirichlet.begin(), dirichlet.end(), by_edge);
  std::sort(neumann.begin(), neumann.end(), by_edge);

  BoundaryEdges bd;
  for (const auto& r : dirichlet) {
    bd.dirichlet.push_back(r.edge);
    bd.sign_d.push_back(r.sign);
    bd.ind_d.push_back(r.index);
  }
  for (const auto& r : neumann) {
    bd.neumann.push_back(r.edge);
    bd.sign_n.push_back(r.sign);
    bd.ind_n.push_back(r.index);
  }
  return bd;
}

std::vector<MeshViolation> validate_mesh(const Mesh& mesh) {
  std::vector<MeshViolation> out;
  const int n = mesh.num_nodes();
  const int nt = mesh.num_elements();

  if (static_cast<int>(mesh.markers.size()) != nt) {
    out.push_back({MeshRule::MarkerArraySize, -1, -1,
                   fmt::format("{} marker rows for {} elements", mesh.markers.size(), nt)});
    return out;
  }

  bool range_ok = true;
  std::vector<char> referenced(n, 0);
  for (int t = 0; t < nt; ++t)
    for (int v : mesh.elements[t]) {
      if (v < 0 || v >= n) {
        out.push_back({MeshRule::IndexOutOfRange, t, v,
                       fmt::format("element {} references vertex {} outside 1..{}", t + 1, v + 1, n)});
        range_ok = false;
      } else {
        referenced[v] = 1;
      }
    }
  for (int v = 0; v < n; ++v)
    if (!referenced[v])
      out.push_back({MeshRule::UnreferencedVertex, -1, v,
                     fmt::format("vertex {} is not referenced by any element", v + 1)});
  if (!range_ok) return out;

  for (int t = 0; t < nt; ++t)
    if (!(mesh.signed_area(t) > 0.0))
      out.push_back({MeshRule::NonPositiveArea, t, -1,
                     fmt::format("non-positive area at element {}", t + 1)});

  for (int t = 0; t < nt; ++t)
    for (int i = 0; i < 3; ++i) {
      const auto m = static_cast<int>(mesh.markers[t][i]);
      if (m < 0 || m > 2)
        out.push_back({MeshRule::InvalidMarker, t, -1,
                       fmt::format("element {} edge {} has marker {} (expected 0, 1 or 2)", t + 1, i + 1, m)});
    }

  EdgeTopology topo;
  try {
    topo = build_edge_topology(mesh);
  } catch (const MeshError& e) {
    out.push_back({MeshRule::NonManifoldEdge, -1, -1, e.what()});
    return out;
  }
  for (int t = 0; t < nt; ++t)
    for (int i = 0; i < 3; ++i) {
      const bool boundary = topo.is_boundary(topo.elem_to_edge[t][i]);
      const bool marked = mesh.markers[t][i] != Marker::Interior;
      if (marked && !boundary)
        out.push_back({MeshRule::MarkerOnInteriorEdge, t, -1,
                       fmt::format("element {} edge {} is interior but carries a boundary marker", t + 1, i + 1)});
      if (!marked && boundary)
        out.push_back({MeshRule::UnmarkedBoundaryEdge, t, -1,
                       fmt::format("element {} edge {} lies on the boundary but has marker 0", t + 1, i + 1)});
    }
  return out;
}

void require_valid(const Mesh& mesh) {
  const auto violations = validate_mesh(mesh);
  if (violations.empty()) return;
  std::string msg = fmt::format("invalid mesh ({} violation{}):", violations.size(),
                                violations.size() == 1 ? "" : "s");
  for (const auto& v : violations) msg += "\n  " + v.message;
  throw MeshError(msg);
}

Mesh uniform_refine(const Mesh& mesh) { return uniform_refine(mesh, build_edge_topology(mesh)); }

Mesh uniform_refine(const Mesh& mesh, const EdgeTopology& topo) {
  const int n = mesh.num_nodes();
  const int nt = mesh.num_elements();

  Mesh fine;
  fine.nodes = mesh.nodes;
  fine.nodes.reserve(n + topo.num_edges());
  for (const auto& e : topo.edges) fine.nodes.push_back(0.5 * (mesh.nodes[e.start] + mesh.nodes[e.end]));

  fine.elements.reserve(4 * static_cast<std::size_t>(nt));
  fine.markers.reserve(4 * static_cast<std::size_t>(nt));
  constexpr Marker o = Marker::Interior;
  for (int t = 0; t < nt; ++t) {
    const auto [v1, v2, v3] = mesh.elements[t];
    // m_i is the midpoint of the edge opposite v_i
    const int m1 = n + topo.elem_to_edge[t][0];
    const int m2 = n + topo.elem_to_edge[t][1];
    const int m3 = n + topo.elem_to_edge[t][2];
    const auto [p1, p2, p3] = mesh.markers[t];

    fine.elements.push_back({v1, m3, m2});
    fine.markers.push_back({o, p2, p3});
    fine.elements.push_back({m3, v2, m1});
    fine.markers.push_back({p1, o, p3});
    fine.elements.push_back({m2, m1, v3});
    fine.markers.push_back({p1, p2, o});
    fine.elements.push_back({m1, m2, m3});
    fine.markers.push_back({o, o, o});
  }
  return fine;
}

Mesh with_all_dirichlet(Mesh mesh) {
  for (auto& row : mesh.markers)
    for (auto& m : row)
      if (m != Marker::Interior) m = Marker::Dirichlet;
  return mesh;
}

}  // namespace bdmfem
