#pragma once

#include <iosfwd>
#include <string>

#include "bdmfem/error_norms.hpp"
#include "bdmfem/pipeline.hpp"

namespace bdmfem {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitUsage = 2,
  kExitIo = 3,
  kExitSolver = 4,
};

struct RunConfig {
  std::string mesh = "builtin:paper";
  std::string problem = "paper-example";
  /// solve/inspect: refinements applied to the mesh. converge: number of rows.
  int levels = 0;
  ElementFamily family = ElementFamily::BDM1;
  SolverOptions solver;
  std::string out;
  std::string dump_solution;
  std::string dump_matrix;
  /// inspect only: directory receiving edge.csv, elem2edge.csv, signedge.csv.
  std::string dump_topology;
};

/// Each command reports failures on `err` and returns the matching exit code.
/// Output files are only written once everything has succeeded.
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_converge(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_inspect(const RunConfig& config, std::ostream& out, std::ostream& err);

/// `h,err_sigma,ratio_sigma,err_u,ratio_u` with blank ratios on the first row.
std::string format_convergence_csv(const ErrorReport& report);
std::string format_convergence_table(const ErrorReport& report);

/// Topology as 1-based CSV rows, one matrix row per line, no header.
std::string format_edges_csv(const EdgeTopology& topo);
std::string format_elem_to_edge_csv(const EdgeTopology& topo);
std::string format_sign_edge_csv(const EdgeTopology& topo);

}  // namespace bdmfem
