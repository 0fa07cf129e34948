#include <doctest.h>

#include <cmath>
#include <random>

#include "bdmfem/basis.hpp"
#include "bdmfem/errors.hpp"
#include "bdmfem/mesh_io.hpp"
#include "bdmfem/quadrature.hpp"
#include "reference_data.hpp"

using namespace bdmfem;

namespace {

constexpr std::array<ElementFamily, 2> kFamilies{ElementFamily::BDM1, ElementFamily::RT0};

const MeshData& example() {
  static const MeshData md = prepare_mesh(builtin_paper_mesh());
  return md;
}

const MeshData& refined_example() {
  static const MeshData md = prepare_mesh(uniform_refine(builtin_paper_mesh()));
  return md;
}

}  // namespace

TEST_CASE("orientation resolution") {
  const MeshData& md = example();
  const auto o = resolve_orientation(md.topo, md.coeffs, 0, 0);
  CHECK(o.i1 == 2);
  CHECK(o.i2 == 1);
  CHECK(o.a_i1 == md.coeffs.a[0][2]);
  CHECK(o.b_i2 == md.coeffs.b[0][1]);

  REQUIRE(md.topo.sign_edge[2][2] == 1);
  const auto same = resolve_orientation(md.topo, md.coeffs, 2, 2);
  CHECK(same.i1 == 0);
  CHECK(same.i2 == 1);

  for (int i = 0; i < 3; ++i) {
    const auto batch = resolve_orientation(md.topo, md.coeffs, i);
    for (int t = 0; t < md.num_elements(); ++t) {
      CHECK(md.mesh.elements[t][batch[t].i1] < md.mesh.elements[t][batch[t].i2]);
      CHECK(batch[t].i1 == resolve_orientation(md.topo, md.coeffs, t, i).i1);
    }
  }
}

TEST_CASE("basis values on the reference triangle") {
  const MeshData md = prepare_mesh(reference::reference_triangle());
  // Local edge 0 joins vertices 2 and 3 (1-based), globally oriented 2 -> 3.
  const auto mid = eval_basis(md, 0, 0, RefPoint{0.5, 0.5}, ElementFamily::BDM1);
  REQUIRE(mid.count == 2);
  CHECK(mid.values[0] == Point{0.5, 0});
  CHECK(mid.values[1] == Point{0, 0.5});

  // phi_1 vanishes where lambda_s = 0.
  const auto at_t = eval_basis(md, 0, 0, RefPoint{0.0, 1.0}, ElementFamily::BDM1);
  CHECK(at_t.values[0] == Point{0, 0});

  CHECK_THROWS_AS(eval_basis(md, 0, 0, RefPoint{0.7, 0.7}, ElementFamily::BDM1), ParameterError);
  CHECK_THROWS_AS(eval_basis(md, 0, 0, RefPoint{-0.1, 0.2}, ElementFamily::BDM1), ParameterError);
}

TEST_CASE("RT0 function is sign * (x - z_r) / (2|K|)") {
  const MeshData& md = refined_example();
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < md.num_elements(); ++t)
    for (int i = 0; i < 3; ++i) {
      double w1 = u(rng), w2 = u(rng);
      if (w1 + w2 > 1) w1 = 1 - w1, w2 = 1 - w2;
      const auto lambda = to_barycentric({w1, w2});
      const Point x = physical_point(md.mesh, t, lambda);
      const Point zr = md.mesh.nodes[md.mesh.elements[t][i]];
      const double s = md.topo.sign_edge[t][i];
      const Point expected = (s / (2 * md.coeffs.area[t])) * (x - zr);
      const Point got = eval_basis(md, t, i, lambda, ElementFamily::RT0).values[0];
      CHECK(got.x == doctest::Approx(expected.x).scale(1.0).epsilon(1e-12));
      CHECK(got.y == doctest::Approx(expected.y).scale(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hierarchical pair starts with the RT0 function") {
  const MeshData& md = example();
  const std::array<double, 3> lambda{0.2, 0.3, 0.5};
  for (int t = 0; t < md.num_elements(); ++t)
    for (int i = 0; i < 3; ++i) {
      const auto sym = eval_basis(md, t, i, lambda, ElementFamily::BDM1);
      const auto hier = eval_basis(md, t, i, lambda, ElementFamily::BDM1, BdmFlavor::Hierarchical);
      const auto rt = eval_basis(md, t, i, lambda, ElementFamily::RT0);
      REQUIRE(rt.count == 1);
      CHECK(hier.values[0] == rt.values[0]);
      CHECK(hier.values[0] == sym.values[0] + sym.values[1]);
      CHECK(hier.values[1] == sym.values[0] - sym.values[1]);
    }
}

TEST_CASE("normal traces are dual to the edge degrees of freedom") {
  const MeshData& md = refined_example();
  for (int t = 0; t < md.num_elements(); ++t)
    for (int i = 0; i < 3; ++i) {
      const double inv_len = 1.0 / md.edges.length[md.topo.elem_to_edge[t][i]];
      for (double tau : {0.0, 0.3, 1.0}) {
        // On its own edge: lambda_s / |E| and lambda_t / |E|.
        CHECK(normal_trace(md, t, i, 0, i, tau, ElementFamily::BDM1) ==
              doctest::Approx((1 - tau) * inv_len).epsilon(1e-13).scale(inv_len));
        CHECK(normal_trace(md, t, i, 1, i, tau, ElementFamily::BDM1) ==
              doctest::Approx(tau * inv_len).epsilon(1e-13).scale(inv_len));
        CHECK(normal_trace(md, t, i, 0, i, tau, ElementFamily::RT0) == doctest::Approx(inv_len).epsilon(1e-13));
        for (int j = 0; j < 3; ++j) {
          if (j == i) continue;
          for (int which = 0; which < 2; ++which)
            CHECK(std::abs(normal_trace(md, t, i, which, j, tau, ElementFamily::BDM1)) < 1e-13 * inv_len);
          CHECK(std::abs(normal_trace(md, t, i, 0, j, tau, ElementFamily::RT0)) < 1e-13 * inv_len);
        }
      }
    }
  const int e = 5;
  CHECK(normal_trace(md, e, 0, 0.0, ElementFamily::BDM1) == doctest::Approx(1.0 / md.edges.length[e]));
  CHECK(normal_trace(md, e, 1, 0.0, ElementFamily::BDM1) == doctest::Approx(0.0));
  CHECK_THROWS_AS(normal_trace(md, 0, 0, 0, 0, 1.5, ElementFamily::BDM1), ParameterError);
}

TEST_CASE("normal traces agree from both sides of interior edges") {
  const MeshData& md = refined_example();
  for (auto family : kFamilies)
    for (int e = 0; e < md.num_edges(); ++e) {
      if (md.topo.is_boundary(e)) continue;
      const auto& nb = md.neighbors[e];
      for (int which = 0; which < dofs_per_edge(family); ++which)
        for (double tau : {0.0, 0.25, 0.5, 0.9}) {
          const double a = normal_trace(md, nb.element[0], nb.local_edge[0], which, nb.local_edge[0], tau, family);
          const double b = normal_trace(md, nb.element[1], nb.local_edge[1], which, nb.local_edge[1], tau, family);
          CHECK(a == doctest::Approx(b).epsilon(1e-12).scale(1.0));
        }
    }
}

TEST_CASE("divergence") {
  const MeshData& md = example();
  REQUIRE(md.coeffs.area[2] == 0.25);
  REQUIRE(md.topo.sign_edge[2][0] == 1);
  CHECK(divergence(md.topo, md.coeffs, 2, 0, ElementFamily::BDM1) == 2.0);
  CHECK(divergence(md.topo, md.coeffs, 2, 0, ElementFamily::RT0) == 4.0);

  for (int t = 0; t < md.num_elements(); ++t)
    for (int i = 0; i < 3; ++i) {
      const double area = md.coeffs.area[t];
      CHECK(std::abs(divergence(md.topo, md.coeffs, t, i, ElementFamily::BDM1) * area) == doctest::Approx(0.5));
      CHECK(std::abs(divergence(md.topo, md.coeffs, t, i, ElementFamily::RT0) * area) == doctest::Approx(1.0));
    }

  for (int e = 0; e < md.num_edges(); ++e) {
    if (md.topo.is_boundary(e)) continue;
    const auto& nb = md.neighbors[e];
    CHECK(divergence(md.topo, md.coeffs, nb.element[0], nb.local_edge[0], ElementFamily::BDM1) *
              divergence(md.topo, md.coeffs, nb.element[1], nb.local_edge[1], ElementFamily::BDM1) <
          0);
  }
}

TEST_CASE("divergence matches finite differences of the basis") {
  const MeshData& md = example();
  const double h = 1e-4;
  for (auto family : kFamilies)
    for (int t = 0; t < md.num_elements(); ++t)
      for (int i = 0; i < 3; ++i) {
        const Point c = centroid(md.mesh, t);
        auto phi = [&](Point p) { return eval_basis(md, t, i, barycentric_at(md.mesh, t, p), family); };
        const auto px1 = phi(c + Point{h, 0}), px0 = phi(c - Point{h, 0});
        const auto py1 = phi(c + Point{0, h}), py0 = phi(c - Point{0, h});
        for (int k = 0; k < px1.count; ++k) {
          const double div = (px1.values[k].x - px0.values[k].x + py1.values[k].y - py0.values[k].y) / (2 * h);
          CHECK(div == doctest::Approx(divergence(md.topo, md.coeffs, t, i, family)).epsilon(1e-8));
        }
      }
}

TEST_CASE("divergence theorem on each element") {
  // int_K div phi = sum over local edges of int_E phi . n_out.
  const MeshData& md = refined_example();
  for (auto family : kFamilies)
    for (int t = 0; t < md.num_elements(); ++t)
      for (int i = 0; i < 3; ++i)
        for (int which = 0; which < dofs_per_edge(family); ++which) {
          double boundary = 0;
          for (int j = 0; j < 3; ++j) {
            const int e = md.topo.elem_to_edge[t][j];
            double edge = 0;
            for (int q = 0; q < 2; ++q)
              edge += EdgeGauss2::weight[q] * normal_trace(md, t, i, which, j, EdgeGauss2::tau[q], family);
            boundary += md.topo.sign_edge[t][j] * md.edges.length[e] * edge;
          }
          const double volume = divergence(md.topo, md.coeffs, t, i, family) * md.coeffs.area[t];
          CHECK(boundary == doctest::Approx(volume).epsilon(1e-12));
        }
}
