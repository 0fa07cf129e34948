#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/SparseCore>

namespace bdmfem {

/// Compressed sparse storage used throughout (compressed columns; all
/// assembled operators here are symmetric or used through their transpose).
using SparseMatrix = Eigen::SparseMatrix<double, Eigen::ColMajor, int>;
using Vector = Eigen::VectorXd;

/// Coordinate-list accumulator. Duplicate (row, col) pairs are summed when
/// finalized; the contributions of each entry are added in ascending order of
/// value, so the result does not depend on insertion order.
class TripletAccumulator {
public:
  TripletAccumulator(int rows, int cols) : rows_(rows), cols_(cols) {}

  void reserve(std::size_t n) { entries_.reserve(n); }
  void add(int row, int col, double value) { entries_.push_back({col, row, value}); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::size_t size() const { return entries_.size(); }

  /// Builds the compressed matrix; explicit zeros produced by cancellation
  /// are kept so the sparsity pattern depends only on connectivity.
  SparseMatrix finalize() const;

private:
  struct Entry {
    int col;
    int row;
    double value;
  };
  int rows_;
  int cols_;
  std::vector<Entry> entries_;
};

/// Writes the lower triangle of a symmetric matrix in Matrix Market
/// coordinate format (1-based indices).
void write_matrix_market_symmetric(std::ostream& out, const SparseMatrix& a);
void write_matrix_market_symmetric(const std::string& path, const SparseMatrix& a);

/// Largest |A(i,j) - A(j,i)|.
double max_asymmetry(const SparseMatrix& a);

}  // namespace bdmfem
