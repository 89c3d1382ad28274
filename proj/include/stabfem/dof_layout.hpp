#pragma once

namespace stabfem {

// Node-interleaved dof numbering: the dofs of node i are contiguous,
// ordered [phi, g_1, ..., g_PD] for coupled two-field schemes.
struct DofLayout {
  int n_nodes = 0;
  int fields_per_node = 1;  // 1, or 1 + dim for the coupled schemes

  int n_dofs() const { return n_nodes * fields_per_node; }
  int dof(int node, int comp = 0) const { return node * fields_per_node + comp; }
  bool coupled() const { return fields_per_node > 1; }
};

inline DofLayout make_dof_layout(int n_nodes, int dim, bool coupled) {
  return DofLayout{n_nodes, coupled ? 1 + dim : 1};
}

}  // namespace stabfem
