#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bdmfem/commands.hpp"
#include "bdmfem/errors.hpp"
#include "bdmfem/mesh.hpp"
#include "bdmfem/mesh_io.hpp"
#include "reference_data.hpp"

using namespace bdmfem;

namespace {

bool has_rule(const std::vector<MeshViolation>& v, MeshRule rule) {
  return std::any_of(v.begin(), v.end(), [&](const MeshViolation& x) { return x.rule == rule; });
}

}  // namespace

TEST_CASE("edge topology of the example mesh matches the reference matrices") {
  const Mesh mesh = builtin_paper_mesh();
  const EdgeTopology topo = build_edge_topology(mesh);
  CHECK(topo.num_edges() == 28);
  CHECK(format_edges_csv(topo) == reference::kEdgeCsv);
  CHECK(format_elem_to_edge_csv(topo) == reference::kElemToEdgeCsv);
  CHECK(format_sign_edge_csv(topo) == reference::kSignEdgeCsv);
  CHECK(topo.edges[1] == Edge{0, 3});
  CHECK(topo.elem_to_edge[1] == std::array<int, 3>{2, 9, 1});
  CHECK(topo.sign_edge[0] == std::array<int, 3>{-1, 1, -1});
}

TEST_CASE("single triangle topology") {
  const EdgeTopology topo = build_edge_topology(reference::reference_triangle());
  REQUIRE(topo.num_edges() == 3);
  CHECK(topo.edges[0] == Edge{0, 1});
  CHECK(topo.edges[1] == Edge{0, 2});
  CHECK(topo.edges[2] == Edge{1, 2});
  CHECK(topo.elem_to_edge[0] == std::array<int, 3>{2, 1, 0});
  CHECK(topo.sign_edge[0] == std::array<int, 3>{1, -1, 1});
}

TEST_CASE("topology invariants on refined meshes") {
  Mesh mesh = builtin_paper_mesh();
  for (int level = 0; level < 3; ++level) {
    const EdgeTopology topo = build_edge_topology(mesh);
    int boundary = 0;
    for (int e = 0; e < topo.num_edges(); ++e) boundary += topo.is_boundary(e);
    // Euler: 3 NT = 2 NE - boundary edges; V - E + F = 1 for a disc.
    CHECK(3 * mesh.num_elements() == 2 * topo.num_edges() - boundary);
    CHECK(mesh.num_nodes() - topo.num_edges() + mesh.num_elements() == 1);

    // Each interior edge is seen with opposite signs from its two elements.
    std::vector<int> sign_sum(topo.num_edges(), 0);
    std::vector<int> sign_prod(topo.num_edges(), 1);
    for (int t = 0; t < mesh.num_elements(); ++t)
      for (int i = 0; i < 3; ++i) {
        const int e = topo.elem_to_edge[t][i];
        sign_sum[e] += topo.sign_edge[t][i];
        sign_prod[e] *= topo.sign_edge[t][i];
        const auto [a, b] = kLocalEdges[i];
        const int ga = mesh.elements[t][a], gb = mesh.elements[t][b];
        CHECK(topo.edges[e] == Edge{std::min(ga, gb), std::max(ga, gb)});
        CHECK(topo.sign_edge[t][i] == (ga < gb ? 1 : -1));
      }
    for (int e = 0; e < topo.num_edges(); ++e)
      if (!topo.is_boundary(e)) {
        CHECK(sign_sum[e] == 0);
        CHECK(sign_prod[e] == -1);
      }
    CHECK(std::is_sorted(topo.edges.begin(), topo.edges.end()));
    mesh = uniform_refine(mesh);
  }
}

TEST_CASE("edge set does not depend on element order") {
  const Mesh mesh = builtin_paper_mesh();
  const EdgeTopology ref = build_edge_topology(mesh);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<int> perm(mesh.num_elements());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Mesh shuffled = mesh;
    for (int k = 0; k < mesh.num_elements(); ++k) {
      shuffled.elements[k] = mesh.elements[perm[k]];
      shuffled.markers[k] = mesh.markers[perm[k]];
    }
    const EdgeTopology topo = build_edge_topology(shuffled);
    CHECK(topo.edges == ref.edges);
    for (int k = 0; k < mesh.num_elements(); ++k) {
      CHECK(topo.elem_to_edge[k] == ref.elem_to_edge[perm[k]]);
      CHECK(topo.sign_edge[k] == ref.sign_edge[perm[k]]);
    }
  }
}

TEST_CASE("boundary classification of the example mesh") {
  const Mesh mesh = builtin_paper_mesh();
  const EdgeTopology topo = build_edge_topology(mesh);
  const BoundaryEdges bd = classify_boundary(mesh, topo);
  CHECK(bd.dirichlet.size() == 6);
  REQUIRE(bd.neumann.size() == 2);
  CHECK(bd.neumann[0] == Edge{0, 1});
  CHECK(bd.neumann[1] == Edge{1, 2});
  for (std::size_t j = 0; j < bd.neumann.size(); ++j) {
    CHECK(topo.edges[bd.ind_n[j]] == bd.neumann[j]);
    CHECK(std::abs(bd.sign_n[j]) == 1);
  }
  for (std::size_t j = 0; j < bd.dirichlet.size(); ++j) {
    CHECK(topo.edges[bd.ind_d[j]] == bd.dirichlet[j]);
    CHECK(topo.is_boundary(bd.ind_d[j]));
  }
  // Both Neumann edges lie on y = 1.
  for (const Edge& e : bd.neumann) {
    CHECK(mesh.nodes[e.start].y == 1.0);
    CHECK(mesh.nodes[e.end].y == 1.0);
  }
}

TEST_CASE("all-zero markers give empty boundary sets") {
  Mesh mesh = builtin_paper_mesh();
  for (auto& m : mesh.markers) m = {Marker::Interior, Marker::Interior, Marker::Interior};
  const BoundaryEdges bd = classify_boundary(mesh, build_edge_topology(mesh));
  CHECK(bd.dirichlet.empty());
  CHECK(bd.neumann.empty());
  CHECK(has_rule(validate_mesh(mesh), MeshRule::UnmarkedBoundaryEdge));
}

TEST_CASE("marker on an interior edge is rejected") {
  Mesh mesh = builtin_paper_mesh();
  mesh.markers[2][0] = Marker::Dirichlet;  // element 3, edge (6,7), interior
  CHECK_THROWS_AS(classify_boundary(mesh, build_edge_topology(mesh)), MeshError);
  CHECK(has_rule(validate_mesh(mesh), MeshRule::MarkerOnInteriorEdge));
}

TEST_CASE("validation") {
  SUBCASE("example mesh is valid") { CHECK(validate_mesh(builtin_paper_mesh()).empty()); }

  SUBCASE("clockwise element") {
    Mesh mesh = builtin_paper_mesh();
    std::swap(mesh.elements[4][1], mesh.elements[4][2]);
    std::swap(mesh.markers[4][1], mesh.markers[4][2]);
    const auto v = validate_mesh(mesh);
    REQUIRE(has_rule(v, MeshRule::NonPositiveArea));
    const auto it = std::find_if(v.begin(), v.end(), [](auto& x) { return x.rule == MeshRule::NonPositiveArea; });
    CHECK(it->message == "non-positive area at element 5");
    CHECK(it->element == 4);
    CHECK_THROWS_AS(require_valid(mesh), MeshError);
  }

  SUBCASE("vertex index out of range") {
    Mesh mesh = builtin_paper_mesh();
    mesh.elements[0][0] = -1;
    CHECK(has_rule(validate_mesh(mesh), MeshRule::IndexOutOfRange));
    mesh.elements[0][0] = 13;
    CHECK(has_rule(validate_mesh(mesh), MeshRule::IndexOutOfRange));
  }

  SUBCASE("unreferenced vertex") {
    Mesh mesh = builtin_paper_mesh();
    mesh.nodes.push_back({5, 5});
    const auto v = validate_mesh(mesh);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == MeshRule::UnreferencedVertex);
    CHECK(v[0].vertex == 13);
  }

  SUBCASE("marker array size") {
    Mesh mesh = builtin_paper_mesh();
    mesh.markers.pop_back();
    CHECK(has_rule(validate_mesh(mesh), MeshRule::MarkerArraySize));
  }

  SUBCASE("invalid marker value") {
    Mesh mesh = builtin_paper_mesh();
    mesh.markers[0][0] = static_cast<Marker>(7);
    CHECK(has_rule(validate_mesh(mesh), MeshRule::InvalidMarker));
  }

  SUBCASE("edge shared by three elements") {
    Mesh mesh = builtin_paper_mesh();
    mesh.nodes.push_back({-0.25, 1.5});
    mesh.elements.push_back({0, 1, 13});
    mesh.markers.push_back({Marker::Dirichlet, Marker::Dirichlet, Marker::Interior});
    mesh.elements.push_back({0, 1, 3});
    mesh.markers.push_back({Marker::Interior, Marker::Interior, Marker::Interior});
    CHECK(has_rule(validate_mesh(mesh), MeshRule::NonManifoldEdge));
    CHECK_THROWS_AS(build_edge_topology(mesh), MeshError);
  }
}

TEST_CASE("uniform refinement") {
  const Mesh mesh = builtin_paper_mesh();
  const Mesh once = uniform_refine(mesh);
  CHECK(once.num_elements() == 64);
  CHECK(once.num_nodes() == 41);
  CHECK(validate_mesh(once).empty());
  CHECK(once.total_area() == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(once.max_edge_length() == doctest::Approx(0.5).epsilon(1e-15));

  const BoundaryEdges bd = classify_boundary(once, build_edge_topology(once));
  CHECK(bd.dirichlet.size() == 12);
  CHECK(bd.neumann.size() == 4);

  Mesh m = mesh;
  for (int k = 0; k < 6; ++k) m = uniform_refine(m);
  CHECK(m.num_elements() == 65536);
}

TEST_CASE("refining a triangle preserves area and orientation") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Mesh tri = reference::single_triangle(reference::random_triangle(rng));
    const Mesh four = uniform_refine(tri);
    REQUIRE(four.num_elements() == 4);
    double sum = 0;
    for (int t = 0; t < 4; ++t) {
      CHECK(four.signed_area(t) > 0);
      CHECK(four.signed_area(t) == doctest::Approx(tri.signed_area(0) / 4).epsilon(1e-13));
      sum += four.signed_area(t);
    }
    CHECK(sum == doctest::Approx(tri.signed_area(0)).epsilon(1e-14));
    CHECK(validate_mesh(four).empty());
  }
  const Mesh ref = uniform_refine(reference::reference_triangle());
  CHECK(ref.total_area() == 0.5);
}

TEST_CASE("all-Dirichlet override") {
  const Mesh mesh = with_all_dirichlet(builtin_paper_mesh());
  const BoundaryEdges bd = classify_boundary(mesh, build_edge_topology(mesh));
  CHECK(bd.dirichlet.size() == 8);
  CHECK(bd.neumann.empty());
}
