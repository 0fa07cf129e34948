#pragma once

#include <stdexcept>
#include <string>

namespace bdmfem {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Broken mesh connectivity or geometry (non-manifold edge, degenerate
/// element, marker on an interior edge, ...).
class MeshError : public Error {
public:
  using Error::Error;
};

/// Malformed mesh or data file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_;
};

/// File could not be opened, read or written.
class IoError : public Error {
public:
  using Error::Error;
};

/// Invalid numeric parameter (non-positive coefficient, point outside the
/// reference simplex, bad tolerance).
class ParameterError : public Error {
public:
  using Error::Error;
};

/// Unknown problem/mesh name or missing exact-solution data.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Factorization breakdown or iterative non-convergence.
class SolverError : public Error {
public:
  SolverError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}

  /// Best relative residual reached, or NaN when no iterate exists.
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

}  // namespace bdmfem
