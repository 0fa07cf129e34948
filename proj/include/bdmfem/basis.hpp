#pragma once

// Edge-based H(div) basis functions written in barycentric coordinates.
//
// For a global edge E = {z_s, z_t}, s < t, the two BDM1 functions are
//
//   phi_1 =  lambda_s grad-perp lambda_t,     phi_2 = -lambda_t grad-perp lambda_s,
//
// and the RT0 function is their sum, lambda_s grad-perp lambda_t - lambda_t grad-perp lambda_s.
// Inside an element the global start/terminal vertices of a local edge are
// found from sign_edge (resolve_orientation); that is the only place where
// the local counterclockwise order and the global edge order meet.

#include <array>
#include <vector>

#include "bdmfem/geometry.hpp"
#include "bdmfem/mesh.hpp"

namespace bdmfem {

enum class ElementFamily { BDM1, RT0 };

/// Flux unknowns attached to one edge.
constexpr int dofs_per_edge(ElementFamily f) { return f == ElementFamily::BDM1 ? 2 : 1; }

/// BDM1 basis pair. Symmetric is the pair above and the one used by
/// assembly; Hierarchical is {phi_1 + phi_2, phi_1 - phi_2}, whose first
/// member is the RT0 function.
enum class BdmFlavor { Symmetric, Hierarchical };

/// Local edge i of element t with its endpoints in global order: i1 is the
/// local vertex holding the smaller global index.
struct OrientedLocalEdge {
  int element = 0;
  int local_edge = 0;
  int i1 = 0;
  int i2 = 0;
  double a_i1 = 0, b_i1 = 0;
  double a_i2 = 0, b_i2 = 0;
};

OrientedLocalEdge resolve_orientation(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t,
                                      int i);

/// Batched over all elements for local edge i.
std::vector<OrientedLocalEdge> resolve_orientation(const EdgeTopology& topo, const BarycentricCoefficients& coeffs,
                                                   int i);

/// Point in the reference triangle: barycentric coordinates
/// (1 - w1 - w2, w1, w2), i.e. p = z1 (1 - w1 - w2) + z2 w1 + z3 w2.
struct RefPoint {
  double w1 = 0;
  double w2 = 0;
};

/// Barycentric triple of a reference point. Throws ParameterError when the
/// point lies outside the closed simplex by more than 1e-12.
std::array<double, 3> to_barycentric(RefPoint w);

/// Values of the basis functions of one element slot; only the first `count`
/// entries are meaningful (2 for BDM1, 1 for RT0).
struct BasisValues {
  std::array<Point, 2> values{};
  int count = 0;
};

BasisValues eval_basis(const MeshData& md, int t, int i, RefPoint w, ElementFamily family,
                       BdmFlavor flavor = BdmFlavor::Symmetric);

/// Same as eval_basis but from an already validated barycentric triple.
BasisValues eval_basis(const MeshData& md, int t, int i, const std::array<double, 3>& lambda,
                       ElementFamily family, BdmFlavor flavor = BdmFlavor::Symmetric);

/// Normal trace phi . n_{E_j} of function `which` (0 or 1; 0 for RT0) of
/// slot (t, i), evaluated on local edge j of the same element at parameter
/// tau in [0, 1] along the global direction of edge j (tau = 0 at its start
/// vertex). n is the global edge normal.
double normal_trace(const MeshData& md, int t, int i, int which, int j, double tau, ElementFamily family);

/// Normal trace of global edge e's own function on e, seen from its first
/// adjacent element. Equals lambda_s/|E| (which = 0) or lambda_t/|E|
/// (which = 1) for BDM1 and 1/|E| for RT0.
double normal_trace(const MeshData& md, int e, int which, double tau, ElementFamily family);

/// Constant divergence of the slot's basis function(s) on its element:
/// sign_edge/(2|K|) for each BDM1 function and sign_edge/|K| for RT0.
double divergence(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t, int i,
                  ElementFamily family);

}  // namespace bdmfem
