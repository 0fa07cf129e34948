#include "bdmfem/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "bdmfem/errors.hpp"
#include "bdmfem/mesh_io.hpp"

namespace bdmfem {

namespace {

using OutputFiles = std::vector<std::pair<std::string, std::string>>;

// All or nothing: a failure removes whatever was already written.
void write_outputs(const OutputFiles& files) {
  std::vector<std::string> written;
  for (const auto& [path, content] : files) {
    std::ofstream f(path, std::ios::binary);
    if (f) f << content;
    if (!f) {
      for (const auto& w : written) std::remove(w.c_str());
      std::remove(path.c_str());
      throw IoError(fmt::format("cannot write '{}'", path));
    }
    written.push_back(path);
  }
}

std::string sci(double v) { return fmt::format("{:.6e}", v); }

const char* family_name(ElementFamily f) { return f == ElementFamily::BDM1 ? "bdm1" : "rt0"; }

template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    fmt::print(err, "error: parse: {}\n", e.what());
    return kExitIo;
  } catch (const IoError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitIo;
  } catch (const MeshError& e) {
    fmt::print(err, "error: invalid mesh: {}\n", e.what());
    return kExitIo;
  } catch (const SolverError& e) {
    fmt::print(err, "error: solver: {}\n", e.what());
    return kExitSolver;
  } catch (const ConfigError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const ParameterError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    fmt::print(err, "error: internal: {}\n", e.what());
    return kExitInternal;
  }
}

void check_levels(int levels, int min) {
  if (levels < min) throw ConfigError(fmt::format("--levels must be at least {}, got {}", min, levels));
}

Mesh refined(Mesh mesh, int levels) {
  for (int k = 0; k < levels; ++k) mesh = uniform_refine(mesh);
  return mesh;
}

std::string solution_csv(const MixedSolution& s) {
  std::string out = "kind,index,value\n";
  const bool bdm = s.family == ElementFamily::BDM1;
  for (int e = 0; e < s.num_edges; ++e) out += fmt::format("{},{},{:.17g}\n", bdm ? "sigma1" : "sigma", e + 1, s.sigma[e]);
  if (bdm)
    for (int e = 0; e < s.num_edges; ++e) out += fmt::format("sigma2,{},{:.17g}\n", e + 1, s.sigma[s.num_edges + e]);
  for (Eigen::Index t = 0; t < s.u.size(); ++t) out += fmt::format("u,{},{:.17g}\n", t + 1, s.u[t]);
  return out;
}

}  // namespace

std::string format_convergence_csv(const ErrorReport& report) {
  std::string out = "h,err_sigma,ratio_sigma,err_u,ratio_u\n";
  for (const auto& r : report.rows)
    out += fmt::format("{},{},{},{},{}\n", sci(r.h), sci(r.err_sigma), r.ratio_sigma ? sci(*r.ratio_sigma) : "",
                       sci(r.err_u), r.ratio_u ? sci(*r.ratio_u) : "");
  return out;
}

std::string format_convergence_table(const ErrorReport& report) {
  std::string out = fmt::format("{:>12} {:>10} {:>12} {:>8} {:>12} {:>8} {:>9}\n", "h", "NT", "err_sigma", "ratio",
                                "err_u", "ratio", "time[s]");
  for (const auto& r : report.rows)
    out += fmt::format("{:>12.6g} {:>10} {:>12.4e} {:>8} {:>12.4e} {:>8} {:>9.3f}\n", r.h, r.num_elements,
                       r.err_sigma, r.ratio_sigma ? fmt::format("{:.4f}", *r.ratio_sigma) : "-", r.err_u,
                       r.ratio_u ? fmt::format("{:.4f}", *r.ratio_u) : "-", r.seconds);
  return out;
}

std::string format_edges_csv(const EdgeTopology& topo) {
  std::string out;
  for (const Edge& e : topo.edges) out += fmt::format("{},{}\n", e.start + 1, e.end + 1);
  return out;
}

std::string format_elem_to_edge_csv(const EdgeTopology& topo) {
  std::string out;
  for (const auto& r : topo.elem_to_edge) out += fmt::format("{},{},{}\n", r[0] + 1, r[1] + 1, r[2] + 1);
  return out;
}

std::string format_sign_edge_csv(const EdgeTopology& topo) {
  std::string out;
  for (const auto& r : topo.sign_edge) out += fmt::format("{},{},{}\n", r[0], r[1], r[2]);
  return out;
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_levels(config.levels, 0);
    const ProblemDefinition problem = make_problem(config.problem);
    const Mesh base = load_mesh(config.mesh);
    const double h = std::ldexp(base.max_edge_length(), -config.levels);
    const PipelineResult r = run_pipeline(refined(base, config.levels), problem,
                                          PipelineOptions{config.family, config.solver});

    std::optional<ErrorRow> errors;
    if (problem.has_exact_solution()) errors = compute_errors(r.md, r.solution, problem, r.inv_alpha);

    fmt::print(out, "problem        {}\n", problem.name);
    fmt::print(out, "family         {}\n", family_name(config.family));
    fmt::print(out, "mesh           N={} NT={} NE={} h={:.6g}\n", r.md.mesh.num_nodes(), r.md.num_elements(),
               r.md.num_edges(), h);
    fmt::print(out, "boundary       {} Dirichlet, {} Neumann edges\n", r.boundary.dirichlet.size(),
               r.boundary.neumann.size());
    fmt::print(out, "unknowns       {} ({} free)\n", r.system.size(), r.lifted.free_dofs.size());
    fmt::print(out, "solver         {} residual={:.3e}", r.solution.diagnostics.method,
               r.solution.diagnostics.relative_residual);
    if (config.solver.method == SolverMethod::Minres) fmt::print(out, " iterations={}", r.solution.diagnostics.iterations);
    fmt::print(out, "\ntime           assembly {:.3f}s, solve {:.3f}s\n", r.assembly_seconds,
               r.solution.diagnostics.seconds);
    if (errors)
      fmt::print(out, "errors         err_sigma={:.6e} err_u={:.6e} ({})\n", errors->err_sigma, errors->err_u,
                 to_string(errors->path));
    else
      fmt::print(out, "errors         n/a (no exact solution)\n");

    OutputFiles files;
    if (!config.out.empty()) {
      std::string csv =
          "problem,family,solver,levels,h,num_nodes,num_elements,num_edges,num_unknowns,num_free,relative_residual,"
          "err_sigma,err_u\n";
      csv += fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{}\n", problem.name, family_name(config.family),
                         r.solution.diagnostics.method, config.levels, sci(h), r.md.mesh.num_nodes(),
                         r.md.num_elements(), r.md.num_edges(), r.system.size(), r.lifted.free_dofs.size(),
                         sci(r.solution.diagnostics.relative_residual), errors ? sci(errors->err_sigma) : "",
                         errors ? sci(errors->err_u) : "");
      files.emplace_back(config.out, std::move(csv));
    }
    if (!config.dump_solution.empty()) files.emplace_back(config.dump_solution, solution_csv(r.solution));
    if (!config.dump_matrix.empty()) {
      std::ostringstream mm;
      write_matrix_market_symmetric(mm, r.system.A);
      files.emplace_back(config.dump_matrix, mm.str());
    }
    write_outputs(files);
    return kExitOk;
  });
}

int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_levels(config.levels, 1);
    const ProblemDefinition problem = make_problem(config.problem);
    const Mesh base = load_mesh(config.mesh);
    const ErrorReport report =
        convergence_study(problem, base, config.levels, PipelineOptions{config.family, config.solver});

    fmt::print(out, "{} ({}), {} levels, errors by {}\n", problem.name, family_name(config.family), config.levels,
               to_string(report.rows.front().path));
    out << format_convergence_table(report);
    if (!config.out.empty()) write_outputs({{config.out, format_convergence_csv(report)}});
    return kExitOk;
  });
}

int cmd_inspect(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_levels(config.levels, 0);
    Mesh mesh = load_mesh(config.mesh);
    const auto violations = validate_mesh(mesh);
    if (!violations.empty()) {
      fmt::print(out, "validation     FAILED ({} problems)\n", violations.size());
      for (const auto& v : violations) fmt::print(out, "  {}\n", v.message);
      require_valid(mesh);
    }
    mesh = refined(std::move(mesh), config.levels);
    const EdgeTopology topo = build_edge_topology(mesh);
    const BoundaryEdges bd = classify_boundary(mesh, topo);
    int boundary = 0;
    for (int e = 0; e < topo.num_edges(); ++e) boundary += topo.is_boundary(e) ? 1 : 0;

    fmt::print(out, "N              {}\n", mesh.num_nodes());
    fmt::print(out, "NT             {}\n", mesh.num_elements());
    fmt::print(out, "NE             {}\n", topo.num_edges());
    fmt::print(out, "boundary edges {} ({} Dirichlet, {} Neumann)\n", boundary, bd.dirichlet.size(),
               bd.neumann.size());
    fmt::print(out, "area           {:.12g}\n", mesh.total_area());
    fmt::print(out, "validation     ok\n");

    if (!config.dump_topology.empty()) {
      namespace fs = std::filesystem;
      const fs::path dir(config.dump_topology);
      std::error_code ec;
      fs::create_directories(dir, ec);
      if (ec) throw IoError(fmt::format("cannot create directory '{}': {}", dir.string(), ec.message()));
      write_outputs({{(dir / "edge.csv").string(), format_edges_csv(topo)},
                     {(dir / "elem2edge.csv").string(), format_elem_to_edge_csv(topo)},
                     {(dir / "signedge.csv").string(), format_sign_edge_csv(topo)}});
    }
    return kExitOk;
  });
}

}  // namespace bdmfem
