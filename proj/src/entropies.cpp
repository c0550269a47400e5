#include "qsim/entropies.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/constants.hpp"
#include "qsim/exception.hpp"
#include "qsim/linalg.hpp"
#include "qsim/operations.hpp"
#include "subsys.hpp"

namespace qsim {

namespace {

double shannon_unchecked(const std::vector<double>& probs) {
  double h = 0.;
  for (double p : probs)
    if (p > eps) h -= p * std::log2(p);
  return h;
}

}  // namespace

double shannon(const std::vector<double>& probs) {
  if (probs.empty()) throw Exception("qsim::shannon()", ErrorKind::ZERO_SIZE);
  double sum = 0.;
  for (double p : probs) {
    if (p < -eps)
      throw Exception("qsim::shannon()", ErrorKind::OUT_OF_RANGE,
                      "negative probability");
    sum += p;
  }
  if (std::abs(sum - 1.) > 1e-6)
    throw Exception("qsim::shannon()", ErrorKind::OUT_OF_RANGE,
                    "probabilities do not sum to 1");
  return shannon_unchecked(probs);
}

double entropy(const cmat& rho) {
  constexpr const char* where = "qsim::entropy()";
  if (rho.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (rho.rows() != rho.cols())
    throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  if (hermiticity_defect(rho) > eps)
    throw Exception(where, ErrorKind::DIMS_INVALID, "matrix is not Hermitian");
  if (std::abs(rho.trace() - 1.) > 1e-6)
    throw Exception(where, ErrorKind::DIMS_INVALID, "trace is not 1");
  auto values = hevals(rho);
  if (values.front() < -1e-10)
    throw Exception(where, ErrorKind::DIMS_INVALID,
                    "matrix is not positive semidefinite");
  for (double& v : values) v = std::max(v, 0.);
  return shannon_unchecked(values);
}

double qmutualinfo(const cmat& rho, const std::vector<idx>& A,
                   const std::vector<idx>& B, const Dims& dims) {
  constexpr const char* where = "qsim::qmutualinfo()";
  detail::check_subsys(A, dims.size(), where);
  detail::check_subsys(B, dims.size(), where);
  detail::check_disjoint(A, B, where);
  if (rho.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (rho.rows() != rho.cols())
    throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  if (static_cast<idx>(rho.rows()) != dims.total())
    throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX);

  std::vector<idx> AB = A;
  AB.insert(AB.end(), B.begin(), B.end());
  const auto n = dims.size();
  const cmat rhoA = ptrace(rho, detail::complement(A, n), dims);
  const cmat rhoB = ptrace(rho, detail::complement(B, n), dims);
  const cmat rhoAB = ptrace(rho, detail::complement(AB, n), dims);
  return entropy(rhoA) + entropy(rhoB) - entropy(rhoAB);
}

}  // namespace qsim
