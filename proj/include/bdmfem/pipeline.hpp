#pragma once

#include <vector>

#include "bdmfem/boundary_data.hpp"
#include "bdmfem/problem.hpp"
#include "bdmfem/solver.hpp"

namespace bdmfem {

struct PipelineOptions {
  ElementFamily family = ElementFamily::BDM1;
  SolverOptions solver;
};

/// Everything produced while solving one problem on one mesh.
struct PipelineResult {
  MeshData md;
  BoundaryEdges boundary;
  std::vector<double> inv_alpha;
  SaddleSystem system;
  Vector b1;
  Vector b2;
  LiftedState lifted;
  MixedSolution solution;
  double assembly_seconds = 0;
};

/// alpha^{-1} evaluated once per element at its centroid. Throws
/// ParameterError when alpha is not positive somewhere.
std::vector<double> element_inverse_alpha(const MeshData& md, const ScalarField& alpha);

/// Mesh preparation, assembly, boundary data, lift and reduced solve.
PipelineResult run_pipeline(Mesh mesh, const ProblemDefinition& problem, const PipelineOptions& options = {});

}  // namespace bdmfem
