#pragma once

#include <utility>
#include <vector>

#include "qsim/types.hpp"

namespace qsim {

cmat transpose(const cmat& A);
cmat adjoint(const cmat& A);
cplx trace(const cmat& A);

/// Frobenius norm; the Euclidean norm on kets.
double norm(const cmat& A);

cmat kron(const cmat& A, const cmat& B);

/// Kronecker product of the matrices in order, left to right.
cmat kron(const std::vector<cmat>& As);

/// A ⊗ A ⊗ ... with `n` factors. Throws OUT_OF_RANGE for n == 0.
cmat kron_pow(const cmat& A, idx n);

/// Eigenvalues of a Hermitian matrix, ascending.
///
/// The input must be Hermitian within `eps` (largest entry of |H - H†|);
/// it is symmetrized to (H + H†)/2 before the decomposition. Throws
/// ZERO_SIZE, MATRIX_NOT_SQUARE or DIMS_INVALID (not Hermitian).
std::vector<double> hevals(const cmat& H);

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors as the
/// columns of the returned matrix. Same contract as hevals.
std::pair<std::vector<double>, cmat> hevects(const cmat& H);

/// Largest entry modulus of |A - A†|. A must be square.
double hermiticity_defect(const cmat& A);

}  // namespace qsim
