#pragma once

#include <array>
#include <vector>

#include "bdmfem/assembly.hpp"
#include "bdmfem/problem.hpp"

namespace bdmfem {

/// Full-length coefficient vector holding only the Neumann lift, the
/// lift-corrected right-hand side and the unknowns left to solve for.
struct LiftedState {
  Vector sol;
  Vector rhs;
  std::vector<int> free_dofs;
};

/// b2_l = -f(centroid_l) |K_l|.
Vector source_term(const MeshData& md, const ScalarField& f);

/// b1 = -(tau . n, g_D) on Gamma_D with the two-point Gauss rule; length is
/// the flux block size of the family.
Vector dirichlet_term(const MeshData& md, const BoundaryEdges& bd, const ScalarField& g_dirichlet,
                      ElementFamily family = ElementFamily::BDM1);

/// Gauss approximations of (g_N, lambda_s)_E and (g_N, lambda_t)_E on the
/// edge (start, end).
struct EdgeMoments {
  double lambda_s = 0;
  double lambda_t = 0;
};
EdgeMoments neumann_moments(Point start, Point end, const ScalarField& g_neumann);

/// Builds the Neumann lift sigma_N, rhs = [b1; b2] - A sol and the free set.
/// For BDM1 the lift coefficients on Neumann edge j are
///   x_j = s (4 I_s - 2 I_t),  x_{NE+j} = s (4 I_t - 2 I_s),
/// i.e. the L2 projection of g_N onto linears on the edge; for RT0 it is
/// x_j = s (I_s + I_t), the projection onto constants.
LiftedState neumann_lift(const MeshData& md, const BoundaryEdges& bd, const ScalarField& g_neumann,
                         const SaddleSystem& sys, const Vector& b1, const Vector& b2);

/// Edge mass matrix (lambda_i, lambda_j)_E = |E| (1 + delta_ij) / 6 and its inverse.
using Matrix2 = std::array<std::array<double, 2>, 2>;
Matrix2 edge_mass_matrix(double length);
Matrix2 edge_mass_matrix_inverse(double length);

}  // namespace bdmfem
