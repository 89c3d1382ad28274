#include "stabfem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <unordered_map>

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include "stabfem/error.hpp"

namespace stabfem {

SparseMatrix SparseMatrix::from_triplets(int n_rows, int n_cols,
                                         const std::vector<Triplet>& triplets) {
  for (const auto& t : triplets) {
    if (t.row < 0 || t.row >= n_rows || t.col < 0 || t.col >= n_cols) {
      fail(Status::invalid_argument,
           "from_triplets: index (" + std::to_string(t.row) + ", " +
               std::to_string(t.col) + ") out of range");
    }
  }
  // stable sort by (row, col) keeps duplicate summation in input order
  std::vector<int> order(triplets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (triplets[a].row != triplets[b].row) return triplets[a].row < triplets[b].row;
    return triplets[a].col < triplets[b].col;
  });

  SparseMatrix m;
  m.n_rows_ = n_rows;
  m.n_cols_ = n_cols;
  m.row_offsets_.assign(n_rows + 1, 0);
  m.col_indices_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  size_t i = 0;
  for (int row = 0; row < n_rows; ++row) {
    while (i < order.size() && triplets[order[i]].row == row) {
      const int col = triplets[order[i]].col;
      double sum = 0.0;
      while (i < order.size() && triplets[order[i]].row == row &&
             triplets[order[i]].col == col) {
        sum += triplets[order[i]].value;
        ++i;
      }
      m.col_indices_.push_back(col);
      m.values_.push_back(sum);
    }
    m.row_offsets_[row + 1] = static_cast<int>(m.col_indices_.size());
  }
  return m;
}

std::vector<double> SparseMatrix::multiply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != n_cols_) {
    fail(Status::invalid_argument, "multiply: dimension mismatch");
  }
  std::vector<double> y(n_rows_, 0.0);
  for (int row = 0; row < n_rows_; ++row) {
    double acc = 0.0;
    for (int k = row_offsets_[row]; k < row_offsets_[row + 1]; ++k) {
      acc += values_[k] * x[col_indices_[k]];
    }
    y[row] = acc;
  }
  return y;
}

double SparseMatrix::coeff(int row, int col) const {
  if (row < 0 || row >= n_rows_ || col < 0 || col >= n_cols_) {
    fail(Status::invalid_argument, "coeff: index out of range");
  }
  const auto begin = col_indices_.begin() + row_offsets_[row];
  const auto end = col_indices_.begin() + row_offsets_[row + 1];
  const auto it = std::lower_bound(begin, end, col);
  if (it == end || *it != col) return 0.0;
  return values_[it - col_indices_.begin()];
}

double SparseMatrix::max_abs() const {
  double m = 0.0;
  for (double v : values_) m = std::max(m, std::abs(v));
  return m;
}

double SparseMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : values_) s += v * v;
  return std::sqrt(s);
}

namespace {

using EigenSparse = Eigen::SparseMatrix<double>;

EigenSparse to_eigen(const SparseMatrix& A) {
  std::vector<Eigen::Triplet<double>> ts;
  ts.reserve(A.nnz());
  for (int row = 0; row < A.n_rows(); ++row) {
    for (int k = A.row_offsets()[row]; k < A.row_offsets()[row + 1]; ++k) {
      ts.emplace_back(row, A.col_indices()[k], A.values()[k]);
    }
  }
  EigenSparse m(A.n_rows(), A.n_cols());
  m.setFromTriplets(ts.begin(), ts.end());
  m.makeCompressed();
  return m;
}

double vec_norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

}  // namespace

struct Factorization::Impl {
  EigenSparse matrix;
  Eigen::SparseLU<EigenSparse> lu;
  SparseMatrix kept;  // owned copy for residual checks
};

Factorization::Factorization(const SparseMatrix& A) {
  if (A.n_rows() != A.n_cols()) {
    fail(Status::invalid_argument, "factorize: matrix must be square");
  }
  auto impl = std::make_shared<Impl>();
  impl->kept = A;
  impl->matrix = to_eigen(A);
  impl->lu.analyzePattern(impl->matrix);
  impl->lu.factorize(impl->matrix);
  if (impl->lu.info() != Eigen::Success) {
    fail(Status::singular_system,
         "factorize: " + std::string(impl->lu.lastErrorMessage().empty()
                                         ? "numerically singular system"
                                         : impl->lu.lastErrorMessage()));
  }
  impl_ = std::move(impl);
}

std::vector<double> Factorization::solve(const std::vector<double>& b,
                                         SolveReport* report) const {
  if (static_cast<int>(b.size()) != impl_->matrix.rows()) {
    fail(Status::invalid_argument, "solve: rhs length mismatch");
  }
  Eigen::Map<const Eigen::VectorXd> bv(b.data(), b.size());
  Eigen::VectorXd xv = impl_->lu.solve(bv);
  if (impl_->lu.info() != Eigen::Success) {
    fail(Status::singular_system, "solve: back substitution failed");
  }
  std::vector<double> x(xv.data(), xv.data() + xv.size());

  const std::vector<double> r = impl_->kept.multiply(x);
  double rn = 0.0;
  for (size_t i = 0; i < b.size(); ++i) {
    const double d = r[i] - b[i];
    rn += d * d;
  }
  rn = std::sqrt(rn);
  const double bn = vec_norm(b);
  const double rel = bn > 0.0 ? rn / bn : rn;
  if (report) {
    report->relative_residual = rel;
    report->method = "sparse-lu";
    report->iterations = 0;
  }
  if (!(rel <= 1e-10)) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3e", rel);
    fail(Status::convergence_failure,
         "solve: relative residual " + std::string(buf) + " exceeds 1e-10");
  }
  return x;
}

std::vector<double> solve(const SparseMatrix& A, const std::vector<double>& b,
                          SolveReport* report) {
  Factorization f(A);
  return f.solve(b, report);
}

void impose_dirichlet(SparseMatrix& A, std::vector<double>& b,
                      const std::vector<DirichletValue>& constraints) {
  if (A.n_rows() != A.n_cols() || static_cast<int>(b.size()) != A.n_rows()) {
    fail(Status::invalid_argument, "impose_dirichlet: shape mismatch");
  }
  std::unordered_map<int, double> fixed;
  for (const auto& c : constraints) {
    if (c.dof < 0 || c.dof >= A.n_rows()) {
      fail(Status::invalid_argument, "impose_dirichlet: dof out of range");
    }
    auto [it, inserted] = fixed.emplace(c.dof, c.value);
    if (!inserted && it->second != c.value) {
      fail(Status::invalid_argument,
           "impose_dirichlet: conflicting values for dof " + std::to_string(c.dof));
    }
  }
  if (fixed.empty()) return;

  std::vector<Triplet> ts;
  ts.reserve(A.nnz() + fixed.size());
  for (int row = 0; row < A.n_rows(); ++row) {
    if (fixed.count(row)) continue;
    for (int k = A.row_offsets()[row]; k < A.row_offsets()[row + 1]; ++k) {
      const int col = A.col_indices()[k];
      const auto it = fixed.find(col);
      if (it != fixed.end()) {
        b[row] -= A.values()[k] * it->second;  // column lift
      } else {
        ts.push_back({row, col, A.values()[k]});
      }
    }
  }
  for (const auto& [dof, value] : fixed) {
    ts.push_back({dof, dof, 1.0});
    b[dof] = value;
  }
  A = SparseMatrix::from_triplets(A.n_rows(), A.n_cols(), ts);
}

SparseMatrix extract_submatrix(const SparseMatrix& A, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
  std::vector<int> col_map(A.n_cols(), -1);
  for (size_t j = 0; j < cols.size(); ++j) {
    col_map[cols[j]] = static_cast<int>(j);
  }
  std::vector<Triplet> ts;
  for (size_t i = 0; i < rows.size(); ++i) {
    const int row = rows[i];
    for (int k = A.row_offsets()[row]; k < A.row_offsets()[row + 1]; ++k) {
      const int j = col_map[A.col_indices()[k]];
      if (j >= 0) ts.push_back({static_cast<int>(i), j, A.values()[k]});
    }
  }
  return SparseMatrix::from_triplets(static_cast<int>(rows.size()),
                                     static_cast<int>(cols.size()), ts);
}

ConstrainedOperator::ConstrainedOperator(const SparseMatrix& A,
                                         const std::vector<int>& dofs)
    : dofs_(dofs) {
  std::vector<int> slot(A.n_rows(), -1);
  for (size_t i = 0; i < dofs_.size(); ++i) {
    if (dofs_[i] < 0 || dofs_[i] >= A.n_rows()) {
      fail(Status::invalid_argument, "ConstrainedOperator: dof out of range");
    }
    slot[dofs_[i]] = static_cast<int>(i);
  }
  std::vector<Triplet> ts;
  ts.reserve(A.nnz() + dofs_.size());
  for (int row = 0; row < A.n_rows(); ++row) {
    if (slot[row] >= 0) continue;
    for (int k = A.row_offsets()[row]; k < A.row_offsets()[row + 1]; ++k) {
      const int col = A.col_indices()[k];
      if (slot[col] >= 0) {
        lift_.push_back({row, slot[col], A.values()[k]});
      } else {
        ts.push_back({row, col, A.values()[k]});
      }
    }
  }
  for (int dof : dofs_) ts.push_back({dof, dof, 1.0});
  constrained_ = SparseMatrix::from_triplets(A.n_rows(), A.n_cols(), ts);
  factorization_ = std::make_shared<Factorization>(constrained_);
}

std::vector<double> ConstrainedOperator::solve(
    std::vector<double> rhs, const std::vector<double>& values) const {
  if (values.size() != dofs_.size()) {
    fail(Status::invalid_argument, "ConstrainedOperator: value count mismatch");
  }
  for (const auto& t : lift_) {
    rhs[t.row] -= t.value * values[t.col];
  }
  for (size_t i = 0; i < dofs_.size(); ++i) {
    rhs[dofs_[i]] = values[i];
  }
  return factorization_->solve(rhs);
}

}  // namespace stabfem
