#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cardiodg::sparse {

struct Triplet {
  std::int32_t row;
  std::int32_t col;
  double value;
};

/// Compressed-row sparse matrix. Column indices are strictly increasing
/// within each row; duplicate triplets are summed on construction.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::int32_t n_rows, std::int32_t n_cols)
      : n_rows_(n_rows), n_cols_(n_cols), row_offsets_(n_rows + 1, 0) {}

  std::int32_t n_rows() const { return n_rows_; }
  std::int32_t n_cols() const { return n_cols_; }
  std::size_t n_nonzeros() const { return values_.size(); }

  const std::vector<std::int32_t>& row_offsets() const { return row_offsets_; }
  const std::vector<std::int32_t>& cols() const { return cols_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  /// Value index of entry (row, col), or -1 if not in the pattern.
  std::int32_t find(std::int32_t row, std::int32_t col) const;

  double coeff(std::int32_t row, std::int32_t col) const;

  SparseMatrix transpose() const;

  friend SparseMatrix from_triplets(std::int32_t n_rows, std::int32_t n_cols,
                                    std::vector<Triplet> entries);

 private:
  std::int32_t n_rows_ = 0;
  std::int32_t n_cols_ = 0;
  std::vector<std::int32_t> row_offsets_;
  std::vector<std::int32_t> cols_;
  std::vector<double> values_;
};

/// Assembly semantics: repeated (row, col) contributions are summed.
/// Throws std::out_of_range on an index outside the matrix.
SparseMatrix from_triplets(std::int32_t n_rows, std::int32_t n_cols,
                           std::vector<Triplet> entries);

/// y = A x. Throws std::invalid_argument on dimension mismatch.
void spmv(const SparseMatrix& a, std::span<const double> x,
          std::span<double> y);

struct SolverReport {
  int iterations = 0;
  double rel_residual = 0.0;
  bool converged = false;
};

struct GmresOptions {
  double rel_tol = 1e-10;
  int max_iter = 2000;
  int restart = 30;
  /// Optional kernel vector (need not be normalized): projected out of the
  /// initial guess, every residual, and the returned solution. Used for
  /// singular consistent systems.
  const std::vector<double>* deflate = nullptr;
};

/// Restarted GMRES, right-preconditioned by the matrix diagonal (zero
/// diagonal entries are replaced by 1). `x` holds the initial guess on entry
/// and the solution on return. The report carries the true relative residual
/// ||b - Ax|| / ||b||. Throws std::runtime_error if NaN/Inf contaminates the
/// iteration.
SolverReport gmres_solve(const SparseMatrix& a, std::span<const double> b,
                         std::vector<double>& x, const GmresOptions& opts = {});

} // namespace cardiodg::sparse
