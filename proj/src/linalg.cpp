#include "qsim/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/constants.hpp"
#include "qsim/exception.hpp"

namespace qsim {

cmat transpose(const cmat& A) {
  if (A.size() == 0)
    throw Exception("qsim::transpose()", ErrorKind::ZERO_SIZE);
  return A.transpose();
}

cmat adjoint(const cmat& A) {
  if (A.size() == 0) throw Exception("qsim::adjoint()", ErrorKind::ZERO_SIZE);
  return A.adjoint();
}

cplx trace(const cmat& A) {
  if (A.size() == 0) throw Exception("qsim::trace()", ErrorKind::ZERO_SIZE);
  if (A.rows() != A.cols())
    throw Exception("qsim::trace()", ErrorKind::MATRIX_NOT_SQUARE);
  return A.trace();
}

double norm(const cmat& A) {
  if (A.size() == 0) throw Exception("qsim::norm()", ErrorKind::ZERO_SIZE);
  return A.norm();
}

cmat kron(const cmat& A, const cmat& B) {
  if (A.size() == 0 || B.size() == 0)
    throw Exception("qsim::kron()", ErrorKind::ZERO_SIZE);
  const Eigen::Index rb = B.rows();
  const Eigen::Index cb = B.cols();
  cmat result(A.rows() * rb, A.cols() * cb);
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i)
      result.block(i * rb, j * cb, rb, cb) = A(i, j) * B;
  return result;
}

cmat kron(const std::vector<cmat>& As) {
  if (As.empty()) throw Exception("qsim::kron()", ErrorKind::ZERO_SIZE);
  cmat result = As.front();
  for (std::size_t k = 1; k < As.size(); ++k) result = kron(result, As[k]);
  if (result.size() == 0) throw Exception("qsim::kron()", ErrorKind::ZERO_SIZE);
  return result;
}

cmat kron_pow(const cmat& A, idx n) {
  if (A.size() == 0) throw Exception("qsim::kron_pow()", ErrorKind::ZERO_SIZE);
  if (n == 0) throw Exception("qsim::kron_pow()", ErrorKind::OUT_OF_RANGE);
  cmat result = A;
  for (idx k = 1; k < n; ++k) result = kron(result, A);
  return result;
}

double hermiticity_defect(const cmat& A) {
  if (A.rows() == 0) return 0.;
  return (A - A.adjoint()).cwiseAbs().maxCoeff();
}

namespace {

Eigen::SelfAdjointEigenSolver<cmat> decompose(const cmat& H, const char* where,
                                              bool vectors) {
  if (H.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (H.rows() != H.cols()) throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  if (hermiticity_defect(H) > eps)
    throw Exception(where, ErrorKind::DIMS_INVALID, "matrix is not Hermitian");
  const cmat sym = (H + H.adjoint()) / 2.;
  Eigen::SelfAdjointEigenSolver<cmat> solver(
      sym, vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Exception(where, ErrorKind::DIMS_INVALID, "eigensolver failed");
  return solver;
}

}  // namespace

std::vector<double> hevals(const cmat& H) {
  const auto solver = decompose(H, "qsim::hevals()", false);
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

std::pair<std::vector<double>, cmat> hevects(const cmat& H) {
  const auto solver = decompose(H, "qsim::hevects()", true);
  const auto& values = solver.eigenvalues();
  return {std::vector<double>(values.data(), values.data() + values.size()),
          solver.eigenvectors()};
}

}  // namespace qsim
