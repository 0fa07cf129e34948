#pragma once

#include <string>
#include <vector>

#include "bdmfem/assembly.hpp"
#include "bdmfem/boundary_data.hpp"

namespace bdmfem {

enum class SolverMethod { Direct, Minres };

struct SolverOptions {
  SolverMethod method = SolverMethod::Direct;
  /// Required relative residual ||A_ff x - b_f|| / ||b_f|| (absolute when b_f = 0).
  double tol = 1e-10;
  /// MINRES iteration cap; 0 picks 10 * (system size).
  int max_iterations = 0;
};

struct SolveDiagnostics {
  double relative_residual = 0;
  double seconds = 0;
  int iterations = 0;
  std::string method;
};

struct MixedSolution {
  ElementFamily family = ElementFamily::BDM1;
  int num_edges = 0;
  /// Flux coefficients (2 NE for BDM1, NE for RT0).
  Vector sigma;
  /// Elementwise constants.
  Vector u;
  SolveDiagnostics diagnostics;

  Vector full() const;
};

/// A(rows, rows) as an explicit matrix.
SparseMatrix extract_submatrix(const SparseMatrix& a, const std::vector<int>& rows);

/// Number of diagonal positions that are absent or exactly zero.
int count_zero_diagonals(const SparseMatrix& a);

/// Solves the system restricted to the free unknowns and merges the result
/// with the lift values. Throws SolverError on factorization breakdown,
/// non-convergence or a residual above tolerance.
MixedSolution solve_reduced(const SaddleSystem& sys, const LiftedState& lifted, const SolverOptions& options = {});

}  // namespace bdmfem
