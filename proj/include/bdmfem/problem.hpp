#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bdmfem/mesh.hpp"

namespace bdmfem {

using ScalarField = std::function<double(Point)>;
using VectorField = std::function<Point(Point)>;

/// Exact values of (alpha^{-1} sigma, sigma) and (u, u) over a rectangular
/// domain. They are only used when the mesh covers exactly that rectangle.
struct ExactNorms {
  double flux_sq = 0;
  double scalar_sq = 0;
  Point domain_min;
  Point domain_max;
};

/// -div(alpha grad u) = f with u = g_D on Gamma_D and sigma . n = g_N on
/// Gamma_N, sigma = -alpha grad u.
struct ProblemDefinition {
  std::string name;
  std::string description;
  ScalarField alpha;
  ScalarField f;
  ScalarField g_dirichlet;
  ScalarField g_neumann;
  ScalarField exact_u;        // optional
  VectorField exact_sigma;    // optional
  std::optional<ExactNorms> exact_norms;
  /// Treat every boundary marker as Dirichlet regardless of the mesh.
  bool all_dirichlet = false;

  bool has_exact_solution() const { return static_cast<bool>(exact_u) && static_cast<bool>(exact_sigma); }
};

/// Compiled-in problems: "paper-example", "patch-linear", "smooth-dirichlet".
/// Throws ConfigError for unknown names.
ProblemDefinition make_problem(const std::string& name);
std::vector<std::string> problem_names();

/// Problem with every datum identically zero (alpha = 1).
ProblemDefinition zero_problem();

}  // namespace bdmfem
