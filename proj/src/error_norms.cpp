#include "bdmfem/error_norms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <fmt/format.h>

#include "bdmfem/errors.hpp"
#include "bdmfem/pipeline.hpp"

namespace bdmfem {

Point eval_sigma_h(const MeshData& md, const MixedSolution& solution, int t, const std::array<double, 3>& lambda) {
  const int ne = md.num_edges();
  Point v{0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    const int e = md.topo.elem_to_edge[t][i];
    const BasisValues phi = eval_basis(md, t, i, lambda, solution.family);
    v = v + solution.sigma[e] * phi.values[0];
    if (phi.count == 2) v = v + solution.sigma[ne + e] * phi.values[1];
  }
  return v;
}

Point eval_sigma_h(const MeshData& md, const MixedSolution& solution, int t, RefPoint w) {
  return eval_sigma_h(md, solution, t, to_barycentric(w));
}

bool exact_norms_apply(const MeshData& md, const ProblemDefinition& problem) {
  if (!problem.exact_norms) return false;
  const ExactNorms& n = *problem.exact_norms;
  Point lo = md.mesh.nodes.front();
  Point hi = lo;
  for (const Point& p : md.mesh.nodes) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double scale = std::max({std::abs(n.domain_min.x), std::abs(n.domain_min.y), std::abs(n.domain_max.x),
                                 std::abs(n.domain_max.y), 1.0});
  const double tol = 1e-12 * scale;
  if (std::abs(lo.x - n.domain_min.x) > tol || std::abs(lo.y - n.domain_min.y) > tol ||
      std::abs(hi.x - n.domain_max.x) > tol || std::abs(hi.y - n.domain_max.y) > tol)
    return false;
  const double box = (n.domain_max.x - n.domain_min.x) * (n.domain_max.y - n.domain_min.y);
  return std::abs(md.mesh.total_area() - box) <= 1e-12 * box;
}

double discrete_flux_energy(const MeshData& md, const MixedSolution& solution, std::span<const double> inv_alpha,
                            const TriangleQuadrature& quad) {
  double sum = 0.0;
  for (int t = 0; t < md.num_elements(); ++t) {
    double local = 0.0;
    for (const auto& q : quad.nodes) {
      const Point s = eval_sigma_h(md, solution, t, to_barycentric(q.point));
      local += q.weight * dot(s, s);
    }
    sum += inv_alpha[t] * md.coeffs.area[t] * local;
  }
  return sum;
}

ErrorRow compute_errors(const MeshData& md, const MixedSolution& solution, const ProblemDefinition& problem,
                        std::span<const double> inv_alpha, const TriangleQuadrature& quad, ErrorPath path) {
  if (!problem.has_exact_solution())
    throw ConfigError(fmt::format("problem '{}' has no exact solution to measure errors against", problem.name));
  if (static_cast<int>(inv_alpha.size()) != md.num_elements())
    throw ParameterError(fmt::format("inv_alpha has {} entries for {} elements", inv_alpha.size(), md.num_elements()));

  const bool norms_ok = exact_norms_apply(md, problem);
  if (path == ErrorPath::Decomposition && !norms_ok)
    throw ConfigError(fmt::format("problem '{}' has no exact norms for this mesh domain", problem.name));
  if (path == ErrorPath::Auto) path = norms_ok ? ErrorPath::Decomposition : ErrorPath::Direct;

  // Accumulated element by element in index order, so results are reproducible.
  double flux_cross = 0.0, flux_self = 0.0, scalar_cross = 0.0, scalar_self = 0.0;
  double flux_direct = 0.0, scalar_direct = 0.0;
  for (int t = 0; t < md.num_elements(); ++t) {
    const double area = md.coeffs.area[t];
    const double uh = solution.u[t];
    double fc = 0.0, fs = 0.0, sc = 0.0, fd = 0.0, sd = 0.0;
    for (const auto& q : quad.nodes) {
      const auto lambda = to_barycentric(q.point);
      const Point p = physical_point(md.mesh, t, lambda);
      const Point sh = eval_sigma_h(md, solution, t, lambda);
      const Point s = problem.exact_sigma(p);
      const double u = problem.exact_u(p);
      if (path == ErrorPath::Decomposition) {
        fc += q.weight * dot(s, sh);
        fs += q.weight * dot(sh, sh);
        sc += q.weight * u;
      } else {
        const Point d = s - sh;
        fd += q.weight * dot(d, d);
        sd += q.weight * (u - uh) * (u - uh);
      }
    }
    flux_cross += inv_alpha[t] * area * fc;
    flux_self += inv_alpha[t] * area * fs;
    scalar_cross += uh * area * sc;
    scalar_self += uh * uh * area;
    flux_direct += inv_alpha[t] * area * fd;
    scalar_direct += area * sd;
  }

  ErrorRow row;
  row.num_elements = md.num_elements();
  row.num_edges = md.num_edges();
  row.path = path;
  row.relative_residual = solution.diagnostics.relative_residual;
  if (path == ErrorPath::Decomposition) {
    const ExactNorms& n = *problem.exact_norms;
    // Round-off can push a tiny square slightly negative.
    row.err_sigma = std::sqrt(std::abs(n.flux_sq - 2.0 * flux_cross + flux_self));
    row.err_u = std::sqrt(std::abs(n.scalar_sq - 2.0 * scalar_cross + scalar_self));
  } else {
    row.err_sigma = std::sqrt(flux_direct);
    row.err_u = std::sqrt(scalar_direct);
  }
  return row;
}

ErrorReport convergence_study(const ProblemDefinition& problem, const Mesh& base, int levels,
                              const PipelineOptions& options, ErrorPath path) {
  if (levels < 1) throw ParameterError(fmt::format("number of levels must be at least 1, got {}", levels));
  if (!problem.has_exact_solution())
    throw ConfigError(fmt::format("problem '{}' has no exact solution to measure errors against", problem.name));

  ErrorReport report;
  Mesh mesh = base;
  const double h0 = base.max_edge_length();
  for (int level = 0; level < levels; ++level) {
    if (level > 0) mesh = uniform_refine(mesh);
    const PipelineResult r = run_pipeline(mesh, problem, options);
    ErrorRow row = compute_errors(r.md, r.solution, problem, r.inv_alpha, six_point_rule(), path);
    row.h = std::ldexp(h0, -level);
    row.seconds = r.assembly_seconds + r.solution.diagnostics.seconds;
    if (!report.rows.empty()) {
      const ErrorRow& prev = report.rows.back();
      if (row.err_sigma > 0.0) row.ratio_sigma = prev.err_sigma / row.err_sigma;
      if (row.err_u > 0.0) row.ratio_u = prev.err_u / row.err_u;
    }
    report.rows.push_back(row);
  }
  return report;
}

const char* to_string(ErrorPath path) {
  switch (path) {
    case ErrorPath::Auto: return "auto";
    case ErrorPath::Decomposition: return "decomposition";
    case ErrorPath::Direct: return "direct";
  }
  return "?";
}

}  // namespace bdmfem
