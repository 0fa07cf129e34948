#include "bdmfem/assembly.hpp"

#include <fmt/format.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

LocalMass6 local_mass_bdm1(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t,
                           double inv_alpha) {
  std::array<OrientedLocalEdge, 3> o;
  for (int i = 0; i < 3; ++i) o[i] = resolve_orientation(topo, coeffs, t, i);
  const double scale = inv_alpha / (48.0 * coeffs.area[t]);

  LocalMass6 m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const auto& p = o[i];
      const auto& q = o[j];
      const double e = scale * (1 + (p.i1 == q.i1)) * (p.a_i2 * q.a_i2 + p.b_i2 * q.b_i2);
      const double h = -scale * (1 + (p.i1 == q.i2)) * (p.a_i2 * q.a_i1 + p.b_i2 * q.b_i1);
      const double g = scale * (1 + (p.i2 == q.i2)) * (p.a_i1 * q.a_i1 + p.b_i1 * q.b_i1);
      m[i][j] = e;
      m[i][3 + j] = h;
      m[3 + j][i] = h;
      m[3 + i][3 + j] = g;
    }
  return m;
}

LocalMass3 local_mass_rt0(const EdgeTopology& topo, const BarycentricCoefficients& coeffs, int t, double inv_alpha) {
  // phi_rt = phi_1 + phi_2, so each entry sums the four BDM1 couplings.
  const auto m = local_mass_bdm1(topo, coeffs, t, inv_alpha);
  LocalMass3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = (m[i][j] + m[3 + i][3 + j]) + (m[i][3 + j] + m[3 + i][j]);
  return r;
}

SparseMatrix assemble_mass(const EdgeTopology& topo, const BarycentricCoefficients& coeffs,
                           std::span<const double> inv_alpha, ElementFamily family) {
  const int nt = topo.num_elements();
  const int ne = topo.num_edges();
  if (static_cast<int>(inv_alpha.size()) != nt)
    throw ParameterError(fmt::format("{} coefficient values for {} elements", inv_alpha.size(), nt));
  for (int t = 0; t < nt; ++t)
    if (!(inv_alpha[t] > 0.0))
      throw ParameterError(fmt::format("inverse diffusion coefficient {} on element {} is not positive",
                                       inv_alpha[t], t + 1));

  const int n = dofs_per_edge(family) * ne;
  TripletAccumulator acc(n, n);
  if (family == ElementFamily::BDM1) {
    acc.reserve(36 * static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) {
      const auto m = local_mass_bdm1(topo, coeffs, t, inv_alpha[t]);
      std::array<int, 6> dof;
      for (int i = 0; i < 3; ++i) {
        dof[i] = topo.elem_to_edge[t][i];
        dof[3 + i] = ne + topo.elem_to_edge[t][i];
      }
      for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) acc.add(dof[r], dof[c], m[r][c]);
    }
  } else {
    acc.reserve(9 * static_cast<std::size_t>(nt));
    for (int t = 0; t < nt; ++t) {
      const auto m = local_mass_rt0(topo, coeffs, t, inv_alpha[t]);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) acc.add(topo.elem_to_edge[t][r], topo.elem_to_edge[t][c], m[r][c]);
    }
  }
  return acc.finalize();
}

SparseMatrix assemble_divergence(const EdgeTopology& topo, ElementFamily family) {
  const int nt = topo.num_elements();
  const int ne = topo.num_edges();
  TripletAccumulator acc(nt, dofs_per_edge(family) * ne);
  acc.reserve(6 * static_cast<std::size_t>(nt));
  for (int t = 0; t < nt; ++t)
    for (int i = 0; i < 3; ++i) {
      const int e = topo.elem_to_edge[t][i];
      const double s = topo.sign_edge[t][i];
      if (family == ElementFamily::BDM1) {
        acc.add(t, e, -s / 2.0);
        acc.add(t, ne + e, -s / 2.0);
      } else {
        acc.add(t, e, -s);
      }
    }
  return acc.finalize();
}

SparseMatrix assemble_system(const SparseMatrix& B, const SparseMatrix& C) {
  if (B.rows() != B.cols() || C.cols() != B.cols())
    throw ParameterError(fmt::format("block size mismatch: B is {}x{}, C is {}x{}", B.rows(), B.cols(), C.rows(),
                                     C.cols()));
  const int nf = static_cast<int>(B.rows());
  const int n = nf + static_cast<int>(C.rows());
  TripletAccumulator acc(n, n);
  acc.reserve(B.nonZeros() + 2 * C.nonZeros());
  for (int c = 0; c < B.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(B, c); it; ++it) acc.add(it.row(), it.col(), it.value());
  for (int c = 0; c < C.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(C, c); it; ++it) {
      acc.add(nf + it.row(), it.col(), it.value());
      acc.add(it.col(), nf + it.row(), it.value());
    }
  return acc.finalize();
}

SaddleSystem assemble_saddle_system(const MeshData& md, std::span<const double> inv_alpha, ElementFamily family) {
  SaddleSystem sys;
  sys.family = family;
  sys.num_edges = md.num_edges();
  sys.num_elements = md.num_elements();
  sys.B = assemble_mass(md.topo, md.coeffs, inv_alpha, family);
  sys.C = assemble_divergence(md.topo, family);
  sys.A = assemble_system(sys.B, sys.C);
  return sys;
}

}  // namespace bdmfem
