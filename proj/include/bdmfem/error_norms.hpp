#pragma once

#include <optional>
#include <span>
#include <vector>

#include "bdmfem/problem.hpp"
#include "bdmfem/quadrature.hpp"
#include "bdmfem/solver.hpp"

namespace bdmfem {

struct PipelineOptions;

/// Value of the discrete flux at a reference point of element t.
Point eval_sigma_h(const MeshData& md, const MixedSolution& solution, int t, RefPoint w);
Point eval_sigma_h(const MeshData& md, const MixedSolution& solution, int t, const std::array<double, 3>& lambda);

enum class ErrorPath {
  /// Decomposition when exact norms apply to the mesh domain, else direct.
  Auto,
  /// ||a - b||^2 = (a, a) - 2 (a, b) + (b, b) with exact (a, a).
  Decomposition,
  /// Quadrature of the squared pointwise error on every element.
  Direct,
};

struct ErrorRow {
  double h = 0;
  double err_sigma = 0;
  double err_u = 0;
  std::optional<double> ratio_sigma;
  std::optional<double> ratio_u;
  int num_elements = 0;
  int num_edges = 0;
  ErrorPath path = ErrorPath::Direct;
  double relative_residual = 0;
  double seconds = 0;  // assembly + solve
};

struct ErrorReport {
  std::vector<ErrorRow> rows;
};

/// ||alpha^{-1/2}(sigma - sigma_h)||_0 and ||u - u_h||_0 for one solution.
/// inv_alpha holds the elementwise alpha^{-1} used in assembly. Throws
/// ConfigError when the problem has no exact solution, or when Decomposition
/// is forced but no exact norms apply.
ErrorRow compute_errors(const MeshData& md, const MixedSolution& solution, const ProblemDefinition& problem,
                        std::span<const double> inv_alpha, const TriangleQuadrature& quad = six_point_rule(),
                        ErrorPath path = ErrorPath::Auto);

/// (alpha^{-1} sigma_h, sigma_h) by quadrature.
double discrete_flux_energy(const MeshData& md, const MixedSolution& solution, std::span<const double> inv_alpha,
                            const TriangleQuadrature& quad = six_point_rule());

/// Whether the problem's exact norms are valid on this mesh (its bounding box
/// and area match the rectangle the norms were computed for).
bool exact_norms_apply(const MeshData& md, const ProblemDefinition& problem);

/// Solves on the base mesh and on `levels - 1` successive uniform
/// refinements. h starts at the longest base edge and halves per level.
/// A ratio is left empty when the finer error is exactly zero.
ErrorReport convergence_study(const ProblemDefinition& problem, const Mesh& base, int levels,
                              const PipelineOptions& options, ErrorPath path = ErrorPath::Auto);

const char* to_string(ErrorPath path);

}  // namespace bdmfem
