#include "bdmfem/basis.hpp"

#include <fmt/format.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

OrientedLocalEdge resolve_orientation(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t,
                                      int i) {
  const int ii1 = kLocalEdges[i][0];
  const int ii2 = kLocalEdges[i][1];
  const bool same = topo.sign_edge[t][i] > 0;
  OrientedLocalEdge o;
  o.element = t;
  o.local_edge = i;
  o.i1 = same ? ii1 : ii2;
  o.i2 = same ? ii2 : ii1;
  o.a_i1 = coeffs.a[t][o.i1];
  o.b_i1 = coeffs.b[t][o.i1];
  o.a_i2 = coeffs.a[t][o.i2];
  o.b_i2 = coeffs.b[t][o.i2];
  return o;
}

std::vector<OrientedLocalEdge> resolve_orientation(const EdgeTopology& topo, const BarycentricCoefficients& coeffs,
                                                   int i) {
  std::vector<OrientedLocalEdge> out(topo.num_elements());
  for (int t = 0; t < topo.num_elements(); ++t) out[t] = resolve_orientation(topo, coeffs, t, i);
  return out;
}

std::array<double, 3> to_barycentric(RefPoint w) {
  constexpr double tol = 1e-12;
  if (w.w1 < -tol || w.w2 < -tol || w.w1 + w.w2 > 1.0 + tol)
    throw ParameterError(fmt::format("point ({}, {}) lies outside the reference triangle", w.w1, w.w2));
  return {1.0 - w.w1 - w.w2, w.w1, w.w2};
}

BasisValues eval_basis(const MeshData& md, int t, int i, RefPoint w, ElementFamily family, BdmFlavor flavor) {
  return eval_basis(md, t, i, to_barycentric(w), family, flavor);
}

BasisValues eval_basis(const MeshData& md, int t, int i, const std::array<double, 3>& lambda, ElementFamily family,
                       BdmFlavor flavor) {
  const auto o = resolve_orientation(md.topo, md.coeffs, t, i);
  const Point perp_s = md.coeffs.grad_perp(t, o.i1);
  const Point perp_t = md.coeffs.grad_perp(t, o.i2);
  const Point phi1 = lambda[o.i1] * perp_t;
  const Point phi2 = -lambda[o.i2] * perp_s;

  BasisValues out;
  if (family == ElementFamily::RT0) {
    out.values[0] = phi1 + phi2;
    out.count = 1;
  } else if (flavor == BdmFlavor::Symmetric) {
    out.values = {phi1, phi2};
    out.count = 2;
  } else {
    out.values = {phi1 + phi2, phi1 - phi2};
    out.count = 2;
  }
  return out;
}

double normal_trace(const MeshData& md, int t, int i, int which, int j, double tau, ElementFamily family) {
  if (tau < -1e-12 || tau > 1.0 + 1e-12) throw ParameterError(fmt::format("edge parameter {} outside [0, 1]", tau));
  const int p = kLocalEdges[j][0];
  const int q = kLocalEdges[j][1];
  const bool same = md.topo.sign_edge[t][j] > 0;
  std::array<double, 3> lambda{0.0, 0.0, 0.0};
  lambda[same ? p : q] = 1.0 - tau;
  lambda[same ? q : p] = tau;
  const auto v = eval_basis(md, t, i, lambda, family);
  return dot(v.values[which], md.edges.normal[md.topo.elem_to_edge[t][j]]);
}

double normal_trace(const MeshData& md, int e, int which, double tau, ElementFamily family) {
  const auto& nb = md.neighbors[e];
  return normal_trace(md, nb.element[0], nb.local_edge[0], which, nb.local_edge[0], tau, family);
}

double divergence(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t, int i,
                  ElementFamily family) {
  const double per_function = topo.sign_edge[t][i] / (2.0 * coeffs.area[t]);
  return family == ElementFamily::BDM1 ? per_function : 2.0 * per_function;
}

}  // namespace bdmfem
