#pragma once

#include <cstddef>

namespace qnc {

// Caps for operations whose cost grows with the qubit count or the size of a
// generated subgroup. Defaults are sized for desk-scale runs; raise them
// explicitly when an experiment needs more.
struct Limits {
  std::size_t max_closure_size = 40320;  // 8!
  int max_state_graph_qubits = 10;       // 2^n nodes
  int max_operator_graph_qubits = 6;     // 4^n nodes
  int max_dense_generator_qubits = 5;    // 4^n x 4^n exponentials
};

}  // namespace qnc
