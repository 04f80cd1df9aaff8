#pragma once

#include "cavitybec/matrix.hpp"

namespace cavitybec {

struct EigenDecomposition {
  Vector eigenvalues;  // ascending
  Matrix eigenvectors; // column k pairs with eigenvalues[k]
};

// Full eigendecomposition of a dense symmetric matrix by cyclic Jacobi
// rotations. Guarantees (checked in tests):
//   ‖VᵀV − I‖_max < 1e-10
//   ‖A v_k − λ_k v_k‖₂ ≤ 1e-10 · max(1, ‖A‖_max · dim)
//   eigenvalues nondecreasing; exact ties keep sweep order
//   each column's first largest-magnitude component is nonnegative
// Throws ErrorKind::NoConvergence if the sweep budget is exhausted.
EigenDecomposition eigh(const SymmetricMatrix& a);

}  // namespace cavitybec
