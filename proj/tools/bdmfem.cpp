// bdmfem: mixed finite element solver for -div(alpha grad u) = f on triangle meshes.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bdmfem/commands.hpp"

namespace {

void add_common(CLI::App* cmd, bdmfem::RunConfig& cfg) {
  cmd->add_option("--mesh", cfg.mesh, "Mesh file or builtin:paper")->capture_default_str();
  cmd->add_option("--levels", cfg.levels, "Uniform refinements (converge: number of levels)");
}

void add_solver(CLI::App* cmd, bdmfem::RunConfig& cfg) {
  const std::map<std::string, bdmfem::ElementFamily> families{{"bdm1", bdmfem::ElementFamily::BDM1},
                                                             {"rt0", bdmfem::ElementFamily::RT0}};
  const std::map<std::string, bdmfem::SolverMethod> methods{{"direct", bdmfem::SolverMethod::Direct},
                                                           {"minres", bdmfem::SolverMethod::Minres}};
  cmd->add_option("--problem", cfg.problem, "Problem name")
      ->check(CLI::IsMember(bdmfem::problem_names()))
      ->capture_default_str();
  cmd->add_option("--family", cfg.family, "Element family: bdm1 or rt0")
      ->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
  cmd->add_option("--solver", cfg.solver.method, "Linear solver: direct or minres")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
  cmd->add_option("--tol", cfg.solver.tol, "Relative residual tolerance, in (0, 1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--out", cfg.out, "CSV output path");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"BDM1-P0 mixed finite element solver for 2-D diffusion problems"};
  app.require_subcommand(1);

  bdmfem::RunConfig solve_cfg;
  auto* solve = app.add_subcommand("solve", "Solve one problem and report DOFs, residual and errors");
  add_common(solve, solve_cfg);
  add_solver(solve, solve_cfg);
  solve->add_option("--dump-solution", solve_cfg.dump_solution, "Write coefficients as CSV");
  solve->add_option("--dump-matrix", solve_cfg.dump_matrix, "Write the full system matrix (Matrix Market)");

  bdmfem::RunConfig converge_cfg;
  converge_cfg.levels = 4;
  auto* converge = app.add_subcommand("converge", "Convergence study over uniformly refined meshes");
  add_common(converge, converge_cfg);
  add_solver(converge, converge_cfg);

  bdmfem::RunConfig inspect_cfg;
  auto* inspect = app.add_subcommand("inspect", "Validate a mesh and print its topology summary");
  add_common(inspect, inspect_cfg);
  inspect->add_option("--dump-topology", inspect_cfg.dump_topology,
                      "Directory for edge.csv, elem2edge.csv and signedge.csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? bdmfem::kExitOk : bdmfem::kExitUsage;
  }

  if (solve->parsed()) return bdmfem::cmd_solve(solve_cfg, std::cout, std::cerr);
  if (converge->parsed()) return bdmfem::cmd_converge(converge_cfg, std::cout, std::cerr);
  return bdmfem::cmd_inspect(inspect_cfg, std::cout, std::cerr);
}
