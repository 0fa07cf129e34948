#include "bdmfem/problem.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

namespace {

// alpha = 10 for x < 0 and 1 for x > 0; u is continuous across x = 0 but
// grad u is not, only the normal flux is.
ProblemDefinition paper_example() {
  ProblemDefinition p;
  p.name = "paper-example";
  p.description = "piecewise alpha in {10, 1} split at x = 0, Neumann data on y = 1";
  p.alpha = [](Point q) { return q.x < 0 ? 10.0 : 1.0; };
  p.f = [](Point q) { return -2.0 * (q.x * q.x + q.y * q.y); };
  p.exact_u = [](Point q) {
    const double x = q.x, y = q.y;
    return x < 0 ? 0.1 * x * x * y * y + 0.1 * x + y : x * x * y * y + x + y;
  };
  p.g_dirichlet = p.exact_u;
  p.g_neumann = [](Point q) { return q.x < 0 ? -2.0 * q.x * q.x - 10.0 : -2.0 * q.x * q.x - 1.0; };
  p.exact_sigma = [](Point q) {
    const double x = q.x, y = q.y;
    return Point{-2.0 * x * y * y - 1.0, x < 0 ? -2.0 * x * x * y - 10.0 : -2.0 * x * x * y - 1.0};
  };
  p.exact_norms = ExactNorms{1993.0 / 75.0, 18131.0 / 7500.0, {-1, -1}, {1, 1}};
  return p;
}

// sigma = (x, y) is linear, so BDM1 reproduces it exactly.
ProblemDefinition patch_linear() {
  ProblemDefinition p;
  p.name = "patch-linear";
  p.description = "alpha = 1, u = -(x^2 + y^2)/2, sigma = (x, y), pure Dirichlet";
  p.alpha = [](Point) { return 1.0; };
  p.f = [](Point) { return 2.0; };
  p.exact_u = [](Point q) { return -0.5 * (q.x * q.x + q.y * q.y); };
  p.g_dirichlet = p.exact_u;
  p.g_neumann = [](Point) { return 0.0; };
  p.exact_sigma = [](Point q) { return q; };
  p.all_dirichlet = true;
  return p;
}

ProblemDefinition smooth_dirichlet() {
  using std::numbers::pi;
  ProblemDefinition p;
  p.name = "smooth-dirichlet";
  p.description = "alpha = 1, u = sin(pi x) sin(pi y), pure Dirichlet";
  p.alpha = [](Point) { return 1.0; };
  p.f = [](Point q) { return 2.0 * pi * pi * std::sin(pi * q.x) * std::sin(pi * q.y); };
  p.exact_u = [](Point q) { return std::sin(pi * q.x) * std::sin(pi * q.y); };
  p.g_dirichlet = p.exact_u;
  p.g_neumann = [](Point) { return 0.0; };
  p.exact_sigma = [](Point q) {
    return Point{-pi * std::cos(pi * q.x) * std::sin(pi * q.y), -pi * std::sin(pi * q.x) * std::cos(pi * q.y)};
  };
  p.all_dirichlet = true;
  return p;
}

}  // namespace

ProblemDefinition make_problem(const std::string& name) {
  if (name == "paper-example") return paper_example();
  if (name == "patch-linear") return patch_linear();
  if (name == "smooth-dirichlet") return smooth_dirichlet();
  throw ConfigError(fmt::format("unknown problem '{}' (known: paper-example, patch-linear, smooth-dirichlet)", name));
}

std::vector<std::string> problem_names() { return {"paper-example", "patch-linear", "smooth-dirichlet"}; }

ProblemDefinition zero_problem() {
  ProblemDefinition p;
  p.name = "zero";
  p.description = "all data zero";
  p.alpha = [](Point) { return 1.0; };
  p.f = [](Point) { return 0.0; };
  p.g_dirichlet = [](Point) { return 0.0; };
  p.g_neumann = [](Point) { return 0.0; };
  p.exact_u = [](Point) { return 0.0; };
  p.exact_sigma = [](Point) { return Point{}; };
  return p;
}

}  // namespace bdmfem
