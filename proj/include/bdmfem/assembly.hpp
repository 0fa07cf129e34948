#pragma once

#include <array>
#include <span>

#include "bdmfem/basis.hpp"
#include "bdmfem/geometry.hpp"
#include "bdmfem/sparse.hpp"

namespace bdmfem {

/// Block saddle-point system
///
///   A = [ B  C^T ]
///       [ C   0  ]
///
/// Unknown layout for BDM1: column j is phi_{j,1}, column NE + j is
/// phi_{j,2}, column 2NE + l is the constant on element l. For RT0 the flux
/// block has NE columns and the scalars start at NE.
struct SaddleSystem {
  ElementFamily family = ElementFamily::BDM1;
  int num_edges = 0;
  int num_elements = 0;
  SparseMatrix B;
  SparseMatrix C;
  SparseMatrix A;

  int flux_dofs() const { return dofs_per_edge(family) * num_edges; }
  int size() const { return flux_dofs() + num_elements; }
};

/// Local BDM1 mass matrix of element t with entries (alpha^{-1} phi_m, phi_n)_K
/// in the order (phi_{1,1}, phi_{2,1}, phi_{3,1}, phi_{1,2}, phi_{2,2}, phi_{3,2})
/// over local edges 1..3.
using LocalMass6 = std::array<std::array<double, 6>, 6>;
using LocalMass3 = std::array<std::array<double, 3>, 3>;

LocalMass6 local_mass_bdm1(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t,
                           double inv_alpha);
LocalMass3 local_mass_rt0(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t, double inv_alpha);

/// Flux mass block B. Throws ParameterError if some inv_alpha is not positive.
SparseMatrix assemble_mass(const EdgeTopology& topo, const BarycentricCoefficients& coeffs,
                           std::span<const double> inv_alpha, ElementFamily family = ElementFamily::BDM1);

/// Divergence block C: row l holds -(div phi, 1)_{K_l}, i.e. -sign_edge/2 per
/// BDM1 function and -sign_edge per RT0 function.
SparseMatrix assemble_divergence(const EdgeTopology& topo, ElementFamily family = ElementFamily::BDM1);

/// [B C^T; C 0]. Throws ParameterError on mismatched block dimensions.
SparseMatrix assemble_system(const SparseMatrix& B, const SparseMatrix& C);

SaddleSystem assemble_saddle_system(const MeshData& md, std::span<const double> inv_alpha,
                                    ElementFamily family = ElementFamily::BDM1);

}  // namespace bdmfem
