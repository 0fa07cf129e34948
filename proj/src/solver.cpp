#include "bdmfem/solver.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include <Eigen/SparseLU>
#include <unsupported/Eigen/IterativeSolvers>
#include <fmt/format.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

namespace {

/// diag(B)^{-1} on the flux block and the identity on the scalar block,
/// in the shape Eigen's iterative solvers expect of a preconditioner.
class BlockDiagonalPreconditioner {
public:
  using StorageIndex = int;
  enum { ColsAtCompileTime = Eigen::Dynamic, MaxColsAtCompileTime = Eigen::Dynamic };

  BlockDiagonalPreconditioner() = default;

  Eigen::Index rows() const { return inv_diag_.size(); }
  Eigen::Index cols() const { return inv_diag_.size(); }

  template <class Mat>
  BlockDiagonalPreconditioner& analyzePattern(const Mat&) {
    return *this;
  }

  template <class Mat>
  BlockDiagonalPreconditioner& factorize(const Mat& mat) {
    inv_diag_ = Vector::Ones(mat.cols());
    for (Eigen::Index j = 0; j < mat.outerSize(); ++j)
      for (typename Mat::InnerIterator it(mat, j); it; ++it)
        if (it.row() == it.col() && it.value() > 0.0) inv_diag_[j] = 1.0 / it.value();
    return *this;
  }

  template <class Mat>
  BlockDiagonalPreconditioner& compute(const Mat& mat) {
    return factorize(mat);
  }

  template <class Rhs>
  Vector solve(const Rhs& b) const {
    return inv_diag_.array() * b.array();
  }

  Eigen::ComputationInfo info() const { return Eigen::Success; }

private:
  Vector inv_diag_;
};

double relative_residual(const SparseMatrix& a, const Vector& x, const Vector& b) {
  const double rn = (a * x - b).norm();
  const double bn = b.norm();
  return bn > 0.0 ? rn / bn : rn;
}

Vector solve_direct(const SparseMatrix& a, const Vector& b, double tol, SolveDiagnostics& diag) {
  Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>> lu;
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() != Eigen::Success)
    throw SolverError(fmt::format("sparse LU factorization failed: {}", lu.lastErrorMessage()),
                      std::numeric_limits<double>::quiet_NaN());
  Vector x = lu.solve(b);
  diag.relative_residual = relative_residual(a, x, b);
  // A few steps of iterative refinement with the existing factors.
  for (int step = 0; step < 3 && !(diag.relative_residual <= tol); ++step) {
    const Vector r = b - a * x;
    x += lu.solve(r);
    diag.relative_residual = relative_residual(a, x, b);
    ++diag.iterations;
  }
  if (!std::isfinite(diag.relative_residual))
    throw SolverError("direct solve produced a non-finite solution (singular system?)", diag.relative_residual);
  if (diag.relative_residual > tol)
    throw SolverError(fmt::format("direct solve reached relative residual {:.3e} > tolerance {:.3e}; the system "
                                  "is singular or severely ill-conditioned",
                                  diag.relative_residual, tol),
                      diag.relative_residual);
  return x;
}

Vector solve_minres(const SparseMatrix& a, const Vector& b, double tol, int max_iterations,
                    SolveDiagnostics& diag) {
  Eigen::MINRES<SparseMatrix, Eigen::Lower | Eigen::Upper, BlockDiagonalPreconditioner> minres;
  minres.setMaxIterations(max_iterations > 0 ? max_iterations : 10 * static_cast<int>(a.rows()));
  // The estimate MINRES monitors can undershoot the true residual.
  minres.setTolerance(0.1 * tol);
  minres.compute(a);
  Vector x = minres.solve(b);
  diag.iterations = static_cast<int>(minres.iterations());
  diag.relative_residual = relative_residual(a, x, b);
  if (!(diag.relative_residual <= tol))
    throw SolverError(fmt::format("MINRES did not converge in {} iterations: relative residual {:.3e} > {:.3e}",
                                  diag.iterations, diag.relative_residual, tol),
                      diag.relative_residual);
  return x;
}

}  // namespace

Vector MixedSolution::full() const {
  Vector x(sigma.size() + u.size());
  x << sigma, u;
  return x;
}

SparseMatrix extract_submatrix(const SparseMatrix& a, const std::vector<int>& rows) {
  std::vector<int> map(a.rows(), -1);
  for (std::size_t k = 0; k < rows.size(); ++k) map[rows[k]] = static_cast<int>(k);

  const int n = static_cast<int>(rows.size());
  SparseMatrix sub(n, n);
  std::vector<int> nnz(n, 0);
  for (int k = 0; k < n; ++k)
    for (SparseMatrix::InnerIterator it(a, rows[k]); it; ++it)
      if (map[it.row()] >= 0) ++nnz[k];
  sub.reserve(nnz);
  for (int k = 0; k < n; ++k)
    for (SparseMatrix::InnerIterator it(a, rows[k]); it; ++it)
      if (map[it.row()] >= 0) sub.insert(map[it.row()], k) = it.value();
  sub.makeCompressed();
  return sub;
}

int count_zero_diagonals(const SparseMatrix& a) {
  int zeros = 0;
  for (int j = 0; j < a.outerSize(); ++j) {
    bool nonzero = false;
    for (SparseMatrix::InnerIterator it(a, j); it; ++it)
      if (it.row() == j && it.value() != 0.0) nonzero = true;
    if (!nonzero) ++zeros;
  }
  return zeros;
}

MixedSolution solve_reduced(const SaddleSystem& sys, const LiftedState& lifted, const SolverOptions& options) {
  if (!(options.tol > 0.0 && options.tol < 1.0))
    throw ParameterError(fmt::format("solver tolerance {} outside (0, 1)", options.tol));

  const auto start = std::chrono::steady_clock::now();
  const SparseMatrix a = extract_submatrix(sys.A, lifted.free_dofs);
  const int zero_diag = count_zero_diagonals(a);
  if (zero_diag != sys.num_elements)
    throw SolverError(fmt::format("reduced system has {} zero diagonal entries, expected {} (one per element)",
                                  zero_diag, sys.num_elements),
                      std::numeric_limits<double>::quiet_NaN());

  Vector b(lifted.free_dofs.size());
  for (std::size_t k = 0; k < lifted.free_dofs.size(); ++k) b[k] = lifted.rhs[lifted.free_dofs[k]];

  MixedSolution out;
  out.family = sys.family;
  out.num_edges = sys.num_edges;
  Vector x;
  if (options.method == SolverMethod::Direct) {
    out.diagnostics.method = "direct-sparse-lu";
    x = solve_direct(a, b, options.tol, out.diagnostics);
  } else {
    out.diagnostics.method = "minres-block-diagonal";
    x = solve_minres(a, b, options.tol, options.max_iterations, out.diagnostics);
  }

  Vector full = lifted.sol;
  for (std::size_t k = 0; k < lifted.free_dofs.size(); ++k) full[lifted.free_dofs[k]] = x[k];
  out.sigma = full.head(sys.flux_dofs());
  out.u = full.tail(sys.num_elements);
  out.diagnostics.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace bdmfem
