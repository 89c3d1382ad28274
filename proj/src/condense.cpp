#include "stabfem/condense.hpp"

#include <Eigen/Dense>

#include "stabfem/error.hpp"

namespace stabfem {

namespace {

struct Blocks {
  std::vector<int> phi_dofs;
  std::vector<int> g_dofs;
  SparseMatrix A_pp, A_pg, A_gp, A_gg;
};

Blocks split_blocks(const SparseMatrix& A, const DofLayout& layout) {
  Blocks b;
  for (int n = 0; n < layout.n_nodes; ++n) {
    b.phi_dofs.push_back(layout.dof(n, 0));
    for (int c = 1; c < layout.fields_per_node; ++c) {
      b.g_dofs.push_back(layout.dof(n, c));
    }
  }
  b.A_pp = extract_submatrix(A, b.phi_dofs, b.phi_dofs);
  b.A_pg = extract_submatrix(A, b.phi_dofs, b.g_dofs);
  b.A_gp = extract_submatrix(A, b.g_dofs, b.phi_dofs);
  b.A_gg = extract_submatrix(A, b.g_dofs, b.g_dofs);
  return b;
}

Eigen::MatrixXd to_dense(const SparseMatrix& A) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(A.n_rows(), A.n_cols());
  for (int row = 0; row < A.n_rows(); ++row) {
    for (int k = A.row_offsets()[row]; k < A.row_offsets()[row + 1]; ++k) {
      m(row, A.col_indices()[k]) = A.values()[k];
    }
  }
  return m;
}

// Sparse * dense, exploiting the sparsity of the left factor.
Eigen::MatrixXd sparse_times_dense(const SparseMatrix& A,
                                   const Eigen::MatrixXd& X) {
  Eigen::MatrixXd y = Eigen::MatrixXd::Zero(A.n_rows(), X.cols());
  for (int row = 0; row < A.n_rows(); ++row) {
    for (int k = A.row_offsets()[row]; k < A.row_offsets()[row + 1]; ++k) {
      y.row(row) += A.values()[k] * X.row(A.col_indices()[k]);
    }
  }
  return y;
}

}  // namespace

CondensedSystem condense_mzad(const Mesh& mesh, const SchemeConfig& scheme,
                              const ProblemSpec& problem) {
  if (scheme.kind != SchemeKind::mzad) {
    fail(Status::invalid_argument, "condense_mzad: scheme must be MZAD");
  }
  const DofLayout coupled = make_layout(mesh, scheme);
  const SparseMatrix A = assemble_steady_matrix(mesh, scheme, problem);
  const std::vector<double> b = assemble_load(mesh, scheme, problem, 0.0);
  const Blocks blk = split_blocks(A, coupled);
  const int np = static_cast<int>(blk.phi_dofs.size());
  const int ng = static_cast<int>(blk.g_dofs.size());

  // X = A_gg^{-1} A_gp, column by column through the factored gradient mass.
  const Factorization f_gg(blk.A_gg);
  Eigen::MatrixXd X(ng, np);
  const Eigen::MatrixXd gp = to_dense(blk.A_gp);
  for (int j = 0; j < np; ++j) {
    std::vector<double> col(ng);
    for (int i = 0; i < ng; ++i) col[i] = gp(i, j);
    const std::vector<double> x = f_gg.solve(col);
    for (int i = 0; i < ng; ++i) X(i, j) = x[i];
  }

  const Eigen::MatrixXd S = to_dense(blk.A_pp) - sparse_times_dense(blk.A_pg, X);

  CondensedSystem out;
  out.layout = make_dof_layout(mesh.n_nodes(), mesh.dim, false);
  out.matrix.resize(static_cast<size_t>(np) * np);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      out.matrix[static_cast<size_t>(i) * np + j] = S(i, j);
    }
  }
  out.load.resize(np);
  for (int i = 0; i < np; ++i) {
    out.load[i] = b[blk.phi_dofs[i]];  // the gradient equations carry no load
  }
  out.constraints = dirichlet_constraints(mesh, out.layout, problem, 0.0);
  return out;
}

SolutionField solve_condensed_mzad(const Mesh& mesh, const SchemeConfig& scheme,
                                   const ProblemSpec& problem) {
  const CondensedSystem sys = condense_mzad(mesh, scheme, problem);
  const int np = sys.layout.n_dofs();

  Eigen::MatrixXd A(np, np);
  for (int i = 0; i < np; ++i) {
    for (int j = 0; j < np; ++j) {
      A(i, j) = sys.matrix[static_cast<size_t>(i) * np + j];
    }
  }
  Eigen::VectorXd b(np);
  for (int i = 0; i < np; ++i) b(i) = sys.load[i];

  for (const auto& c : sys.constraints) {
    for (int i = 0; i < np; ++i) {
      if (i == c.dof) continue;
      b(i) -= A(i, c.dof) * c.value;
      A(i, c.dof) = 0.0;
    }
    A.row(c.dof).setZero();
    A(c.dof, c.dof) = 1.0;
    b(c.dof) = c.value;
  }

  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const Eigen::VectorXd phi = lu.solve(b);

  // Recover the eliminated gradient from its algebraic equations.
  const SchemeConfig full = scheme;
  const DofLayout coupled = make_layout(mesh, full);
  const SparseMatrix A_full = assemble_steady_matrix(mesh, full, problem);
  const Blocks blk = split_blocks(A_full, coupled);
  std::vector<double> phi_v(np);
  for (int i = 0; i < np; ++i) phi_v[i] = phi(i);
  std::vector<double> rhs_g = blk.A_gp.multiply(phi_v);
  for (auto& v : rhs_g) v = -v;
  const std::vector<double> g = solve(blk.A_gg, rhs_g);

  SolutionField out;
  out.layout = coupled;
  out.time = 0.0;
  out.phi = phi_v;
  out.g.assign(coupled.n_nodes, {0.0, 0.0});
  for (int n = 0; n < coupled.n_nodes; ++n) {
    for (int c = 1; c < coupled.fields_per_node; ++c) {
      out.g[n][c - 1] = g[static_cast<size_t>(n) * (coupled.fields_per_node - 1) +
                          (c - 1)];
    }
  }
  return out;
}

}  // namespace stabfem
