// Eigen-decomposition of real symmetric tridiagonal matrices by implicit QL
// iterations with Wilkinson shifts (the classic tql2 scheme). Small-N only:
// eigenvectors are accumulated densely.

#pragma once

#include <span>
#include <vector>

namespace exciton {

struct TridiagonalEigen {
    std::vector<double> values;                // ascending
    std::vector<std::vector<double>> vectors;  // vectors[j] pairs with values[j]
};

/// `off_diagonal` has size diagonal.size() - 1 (or 0 when the matrix is 1x1).
/// Eigenvectors are unit-norm; the first component above 1e-10 of the largest
/// one is positive.
/// Throws DomainError on size mismatch or when QL fails to converge.
TridiagonalEigen solve_symmetric_tridiagonal(std::span<const double> diagonal,
                                             std::span<const double> off_diagonal);

}  // namespace exciton
