#pragma once

#include <vector>

#include "evenspec/sym_matrix.hpp"

namespace evenspec {

struct EigenDecomposition {
  std::vector<double> values;                // nondecreasing
  std::vector<std::vector<double>> vectors;  // vectors[k] is the unit eigenvector for values[k]
};

/// Cyclic Jacobi rotations until the off-diagonal Frobenius norm is below
/// 1e-13 * ||A||_F. Throws MatrixError on non-finite entries.
EigenDecomposition eigen_decompose(const SymMatrix& a);

std::vector<double> eigenvalues(const SymMatrix& a);

}  // namespace evenspec
