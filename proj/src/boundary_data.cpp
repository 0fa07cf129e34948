#include "bdmfem/boundary_data.hpp"

#include <cmath>

#include "bdmfem/quadrature.hpp"

namespace bdmfem {

namespace {

constexpr double kInvSqrt3 = EdgeGauss2::kInvSqrt3;

// p1 sits closer to the start vertex: lambda_s(p1) = lambda_t(p2) = 1/2 + 1/(2 sqrt 3).
std::array<Point, 2> gauss_points(Point n1, Point n2) {
  const Point mid = 0.5 * (n1 + n2);
  const Point half = (0.5 * kInvSqrt3) * (n2 - n1);
  return {mid - half, mid + half};
}

}  // namespace

Vector source_term(const MeshData& md, const ScalarField& f) {
  const int nt = md.num_elements();
  Vector b2(nt);
  for (int t = 0; t < nt; ++t) b2[t] = -f(centroid(md.mesh, t)) * md.coeffs.area[t];
  return b2;
}

Vector dirichlet_term(const MeshData& md, const BoundaryEdges& bd, const ScalarField& g_dirichlet,
                      ElementFamily family) {
  const int ne = md.num_edges();
  Vector b1 = Vector::Zero(dofs_per_edge(family) * ne);
  const double w_near = 0.25 + 0.25 * kInvSqrt3;
  const double w_far = 0.25 - 0.25 * kInvSqrt3;
  for (std::size_t j = 0; j < bd.dirichlet.size(); ++j) {
    const auto [p1, p2] = gauss_points(md.mesh.nodes[bd.dirichlet[j].start], md.mesh.nodes[bd.dirichlet[j].end]);
    const double g1 = g_dirichlet(p1);
    const double g2 = g_dirichlet(p2);
    const double s = bd.sign_d[j];
    const int e = bd.ind_d[j];
    if (family == ElementFamily::BDM1) {
      b1[e] += -s * (g1 * w_near + g2 * w_far);
      b1[ne + e] += -s * (g1 * w_far + g2 * w_near);
    } else {
      b1[e] += -s * 0.5 * (g1 + g2);
    }
  }
  return b1;
}

EdgeMoments neumann_moments(Point start, Point end, const ScalarField& g_neumann) {
  const auto [p1, p2] = gauss_points(start, end);
  const Point d = end - start;
  const double len = std::hypot(d.x, d.y);
  const double g1 = g_neumann(p1);
  const double g2 = g_neumann(p2);
  return {len * (g1 * (1 + kInvSqrt3) + g2 * (1 - kInvSqrt3)) / 4,
          len * (g2 * (1 + kInvSqrt3) + g1 * (1 - kInvSqrt3)) / 4};
}

LiftedState neumann_lift(const MeshData& md, const BoundaryEdges& bd, const ScalarField& g_neumann,
                         const SaddleSystem& sys, const Vector& b1, const Vector& b2) {
  const int ne = md.num_edges();
  const int nf = sys.flux_dofs();
  const bool bdm = sys.family == ElementFamily::BDM1;

  LiftedState st;
  st.sol = Vector::Zero(sys.size());
  std::vector<char> fixed(sys.size(), 0);
  for (std::size_t j = 0; j < bd.neumann.size(); ++j) {
    const auto m = neumann_moments(md.mesh.nodes[bd.neumann[j].start], md.mesh.nodes[bd.neumann[j].end], g_neumann);
    const double s = bd.sign_n[j];
    const int e = bd.ind_n[j];
    if (bdm) {
      st.sol[e] = s * (4 * m.lambda_s - 2 * m.lambda_t);
      st.sol[ne + e] = s * (4 * m.lambda_t - 2 * m.lambda_s);
      fixed[e] = fixed[ne + e] = 1;
    } else {
      st.sol[e] = s * (m.lambda_s + m.lambda_t);
      fixed[e] = 1;
    }
  }

  st.rhs.resize(sys.size());
  st.rhs.head(nf) = b1;
  st.rhs.tail(sys.num_elements) = b2;
  st.rhs -= sys.A * st.sol;

  for (int k = 0; k < sys.size(); ++k)
    if (!fixed[k]) st.free_dofs.push_back(k);
  return st;
}

Matrix2 edge_mass_matrix(double length) {
  return {{{length / 3.0, length / 6.0}, {length / 6.0, length / 3.0}}};
}

Matrix2 edge_mass_matrix_inverse(double length) {
  return {{{4.0 / length, -2.0 / length}, {-2.0 / length, 4.0 / length}}};
}

}  // namespace bdmfem
