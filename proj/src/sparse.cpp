#include "bdmfem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "bdmfem/errors.hpp"

namespace bdmfem {

SparseMatrix TripletAccumulator::finalize() const {
  std::vector<Entry> sorted = entries_;
  std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
    if (a.col != b.col) return a.col < b.col;
    if (a.row != b.row) return a.row < b.row;
    return a.value < b.value;
  });

  SparseMatrix m(rows_, cols_);
  std::vector<int> nnz_per_col(cols_, 0);
  for (std::size_t k = 0; k < sorted.size(); ++k)
    if (k == 0 || sorted[k].col != sorted[k - 1].col || sorted[k].row != sorted[k - 1].row)
      ++nnz_per_col[sorted[k].col];
  m.reserve(nnz_per_col);

  for (std::size_t k = 0; k < sorted.size();) {
    const int col = sorted[k].col;
    const int row = sorted[k].row;
    double sum = 0.0;
    for (; k < sorted.size() && sorted[k].col == col && sorted[k].row == row; ++k) sum += sorted[k].value;
    m.insert(row, col) = sum;
  }
  m.makeCompressed();
  return m;
}

void write_matrix_market_symmetric(std::ostream& out, const SparseMatrix& a) {
  std::size_t nnz = 0;
  for (int c = 0; c < a.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(a, c); it; ++it)
      if (it.row() >= it.col()) ++nnz;
  fmt::print(out, "%%MatrixMarket matrix coordinate real symmetric\n");
  fmt::print(out, "{} {} {}\n", a.rows(), a.cols(), nnz);
  for (int c = 0; c < a.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(a, c); it; ++it)
      if (it.row() >= it.col()) fmt::print(out, "{} {} {:.17g}\n", it.row() + 1, it.col() + 1, it.value());
}

void write_matrix_market_symmetric(const std::string& path, const SparseMatrix& a) {
  std::ofstream out(path);
  if (!out) throw IoError(fmt::format("cannot write matrix file '{}'", path));
  write_matrix_market_symmetric(out, a);
}

double max_asymmetry(const SparseMatrix& a) {
  const SparseMatrix at = a.transpose();
  const SparseMatrix diff = a - at;
  double worst = 0.0;
  for (int c = 0; c < diff.outerSize(); ++c)
    for (SparseMatrix::InnerIterator it(diff, c); it; ++it) worst = std::max(worst, std::abs(it.value()));
  return worst;
}

}  // namespace bdmfem
