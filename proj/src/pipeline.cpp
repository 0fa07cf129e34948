#include "bdmfem/pipeline.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

std::vector<double> element_inverse_alpha(const MeshData& md, const ScalarField& alpha) {
  std::vector<double> inv(md.num_elements());
  for (int t = 0; t < md.num_elements(); ++t) {
    const double a = alpha(centroid(md.mesh, t));
    if (!(a > 0.0) || !std::isfinite(a))
      throw ParameterError(fmt::format("coefficient alpha = {} is not positive at the centroid of element {}", a, t + 1));
    inv[t] = 1.0 / a;
  }
  return inv;
}

PipelineResult run_pipeline(Mesh mesh, const ProblemDefinition& problem, const PipelineOptions& options) {
  if (problem.all_dirichlet) mesh = with_all_dirichlet(std::move(mesh));

  const auto start = std::chrono::steady_clock::now();
  PipelineResult r;
  r.md = prepare_mesh(std::move(mesh));
  r.boundary = classify_boundary(r.md.mesh, r.md.topo);
  if (r.boundary.dirichlet.empty())
    throw SolverError("no Dirichlet edges: the scalar unknown is only determined up to a constant",
                      std::numeric_limits<double>::quiet_NaN());

  r.inv_alpha = element_inverse_alpha(r.md, problem.alpha);
  r.system = assemble_saddle_system(r.md, r.inv_alpha, options.family);
  r.b1 = dirichlet_term(r.md, r.boundary, problem.g_dirichlet, options.family);
  r.b2 = source_term(r.md, problem.f);
  r.lifted = neumann_lift(r.md, r.boundary, problem.g_neumann, r.system, r.b1, r.b2);
  r.assembly_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  r.solution = solve_reduced(r.system, r.lifted, options.solver);
  return r;
}

}  // namespace bdmfem
