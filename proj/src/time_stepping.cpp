#include "stabfem/time_stepping.hpp"

#include <algorithm>
#include <cmath>

#include "stabfem/error.hpp"

namespace stabfem {

namespace {

// M * m_row(row) + A * a_row(row), rows scaled independently.
template <class FnM, class FnA>
SparseMatrix combine_rows(const SparseMatrix& M, FnM m_row, const SparseMatrix& A,
                          FnA a_row) {
  std::vector<Triplet> ts;
  ts.reserve(static_cast<size_t>(M.nnz()) + A.nnz());
  for (int row = 0; row < M.n_rows(); ++row) {
    const double f = m_row(row);
    for (int k = M.row_offsets()[row]; k < M.row_offsets()[row + 1]; ++k) {
      ts.push_back({row, M.col_indices()[k], f * M.values()[k]});
    }
  }
  for (int row = 0; row < A.n_rows(); ++row) {
    const double f = a_row(row);
    if (f == 0.0) continue;
    for (int k = A.row_offsets()[row]; k < A.row_offsets()[row + 1]; ++k) {
      ts.push_back({row, A.col_indices()[k], f * A.values()[k]});
    }
  }
  return SparseMatrix::from_triplets(M.n_rows(), M.n_cols(), ts);
}

}  // namespace

CrankNicolsonStepper::CrankNicolsonStepper(const Mesh& mesh,
                                           const SchemeConfig& scheme,
                                           const ProblemSpec& problem, double dt)
    : mesh_(mesh), scheme_(scheme), problem_(problem), dt_(dt) {
  if (dt <= 0.0) {
    fail(Status::invalid_argument, "CrankNicolsonStepper: dt must be positive");
  }
  if (!problem_.initial) {
    fail(Status::invalid_argument,
         "CrankNicolsonStepper: initial condition is not set");
  }
  layout_ = make_layout(mesh_, scheme_);
  const SparseMatrix A = assemble_steady_matrix(mesh_, scheme_, problem_);
  const SparseMatrix M = assemble_mass_matrix(mesh_, scheme_, problem_);

  const int fpn = layout_.fields_per_node;
  auto is_phi = [fpn](int row) { return row % fpn == 0; };
  const SparseMatrix lhs = combine_rows(
      M, [this](int) { return 1.0 / dt_; }, A,
      [&](int row) { return is_phi(row) ? 0.5 : 1.0; });
  rhs_mat_ = combine_rows(
      M, [this](int) { return 1.0 / dt_; }, A,
      [&](int row) { return is_phi(row) ? -0.5 : 0.0; });

  for (const auto& c : dirichlet_constraints(mesh_, layout_, problem_, 0.0)) {
    constrained_dofs_.push_back(c.dof);
  }
  op_ = std::make_unique<ConstrainedOperator>(lhs, constrained_dofs_);

  // Initial transported field from the initial condition, boundary values
  // from the Dirichlet data at t = 0.
  x_.assign(layout_.n_dofs(), 0.0);
  for (int n = 0; n < layout_.n_nodes; ++n) {
    x_[layout_.dof(n, 0)] =
        problem_.initial({mesh_.nodes[n][0], mesh_.nodes[n][1]});
  }
  for (const auto& c : dirichlet_constraints(mesh_, layout_, problem_, 0.0)) {
    x_[c.dof] = c.value;
  }

  if (layout_.coupled()) {
    // Consistent start for the algebraic gradient: its rows of A must hold at
    // t = 0, so solve A_gg g0 = -(A [phi0; 0])_g.
    std::vector<int> g_dofs;
    for (int n = 0; n < layout_.n_nodes; ++n) {
      for (int c = 1; c < fpn; ++c) g_dofs.push_back(layout_.dof(n, c));
    }
    const std::vector<double> r = A.multiply(x_);
    std::vector<double> rhs(g_dofs.size());
    for (size_t i = 0; i < g_dofs.size(); ++i) rhs[i] = -r[g_dofs[i]];
    const SparseMatrix A_gg = extract_submatrix(A, g_dofs, g_dofs);
    const std::vector<double> g0 = solve(A_gg, rhs);
    for (size_t i = 0; i < g_dofs.size(); ++i) x_[g_dofs[i]] = g0[i];
  }

  b_current_ = assemble_load(mesh_, scheme_, problem_, 0.0);
}

void CrankNicolsonStepper::step() {
  const double t_next = dt_ * (step_ + 1);
  std::vector<double> b_next = assemble_load(mesh_, scheme_, problem_, t_next);

  std::vector<double> r = rhs_mat_.multiply(x_);
  for (size_t i = 0; i < r.size(); ++i) {
    r[i] += 0.5 * (b_current_[i] + b_next[i]);
  }

  const auto constraints =
      dirichlet_constraints(mesh_, layout_, problem_, t_next);
  std::vector<double> values(constraints.size());
  for (size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].dof != constrained_dofs_[i]) {
      fail(Status::internal_error, "step: constraint ordering changed");
    }
    values[i] = constraints[i].value;
  }

  x_ = op_->solve(std::move(r), values);
  b_current_ = std::move(b_next);
  ++step_;
  time_ = t_next;
}

SolutionField CrankNicolsonStepper::state() const {
  return unpack_state(layout_, x_, time_);
}

double CrankNicolsonStepper::max_phi() const {
  double m = x_[layout_.dof(0, 0)];
  for (int n = 1; n < layout_.n_nodes; ++n) {
    m = std::max(m, x_[layout_.dof(n, 0)]);
  }
  return m;
}

}  // namespace stabfem
