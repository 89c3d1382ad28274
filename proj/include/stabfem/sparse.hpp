#pragma once

#include <memory>
#include <string>
#include <vector>

namespace stabfem {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Compressed-row storage; column indices sorted within each row, no duplicates.
class SparseMatrix {
 public:
  SparseMatrix() = default;

  // Duplicate (row, col) entries are summed in input order.
  static SparseMatrix from_triplets(int n_rows, int n_cols,
                                    const std::vector<Triplet>& triplets);

  int n_rows() const { return n_rows_; }
  int n_cols() const { return n_cols_; }
  int nnz() const { return static_cast<int>(values_.size()); }
  const std::vector<int>& row_offsets() const { return row_offsets_; }
  const std::vector<int>& col_indices() const { return col_indices_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  std::vector<double> multiply(const std::vector<double>& x) const;
  double coeff(int row, int col) const;  // 0 when the entry is not stored
  double max_abs() const;
  double frobenius_norm() const;

 private:
  int n_rows_ = 0;
  int n_cols_ = 0;
  std::vector<int> row_offsets_{0};
  std::vector<int> col_indices_;
  std::vector<double> values_;
};

struct SolveReport {
  double relative_residual = 0.0;
  std::string method;
  int iterations = 0;  // 0 for the direct solver
};

// Direct sparse solve. Postcondition: relative residual <= 1e-10, else a
// convergence_failure error carrying the achieved residual; a factorization
// that hits a vanishing pivot reports singular_system.
std::vector<double> solve(const SparseMatrix& A, const std::vector<double>& b,
                          SolveReport* report = nullptr);

struct DirichletValue {
  int dof = 0;
  double value = 0.0;
};

// Row replacement + column lift: each constrained row becomes the identity row
// with rhs = value; unconstrained rows move their coupling to constrained dofs
// onto the rhs. Exact duplicate constraints are allowed, conflicting ones are
// an invalid_argument error.
void impose_dirichlet(SparseMatrix& A, std::vector<double>& b,
                      const std::vector<DirichletValue>& constraints);

// Gathered submatrix A[rows, cols] (index lists need not be contiguous).
SparseMatrix extract_submatrix(const SparseMatrix& A, const std::vector<int>& rows,
                               const std::vector<int>& cols);

// Factor once, solve many.
class Factorization {
 public:
  explicit Factorization(const SparseMatrix& A);
  std::vector<double> solve(const std::vector<double>& b,
                            SolveReport* report = nullptr) const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

// Holds a Dirichlet-constrained operator whose constraint *values* change per
// solve (transient stepping): the matrix is constrained and factored once, the
// column-lift entries are retained and applied to each rhs.
class ConstrainedOperator {
 public:
  ConstrainedOperator(const SparseMatrix& A, const std::vector<int>& dofs);

  // values runs parallel to the constrained dof list.
  std::vector<double> solve(std::vector<double> rhs,
                            const std::vector<double>& values) const;
  const SparseMatrix& matrix() const { return constrained_; }

 private:
  std::vector<int> dofs_;
  std::vector<Triplet> lift_;  // (free row, constrained slot, coefficient)
  SparseMatrix constrained_;
  std::shared_ptr<Factorization> factorization_;
};

}  // namespace stabfem
