#pragma once

#include <array>
#include <vector>

#include "bdmfem/basis.hpp"

namespace bdmfem {

/// Quadrature on the reference triangle with weights normalized to sum to
/// one:  int_K g ~ |K| * sum_q weight_q g(p_q).
struct TriangleQuadrature {
  struct Node {
    RefPoint point;
    double weight;
  };
  std::vector<Node> nodes;
  int degree = 0;
};

/// Symmetric 6-point rule, exact for polynomials of total degree <= 4.
const TriangleQuadrature& six_point_rule();

/// Centroid rule, exact for degree <= 1.
const TriangleQuadrature& centroid_rule();

/// Two-point Gauss-Legendre rule on an edge, parameterized by tau in [0, 1]
/// from the start vertex; weights sum to one (multiply by |E|). Exact for
/// degree <= 3.
struct EdgeGauss2 {
  static constexpr double kInvSqrt3 = 0.57735026918962576451;
  static constexpr std::array<double, 2> tau{0.5 - 0.5 * kInvSqrt3, 0.5 + 0.5 * kInvSqrt3};
  static constexpr std::array<double, 2> weight{0.5, 0.5};
};

}  // namespace bdmfem
