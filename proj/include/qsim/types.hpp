#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

namespace qsim {

using idx = std::size_t;
using cplx = std::complex<double>;

/// Dense complex matrix; the carrier for gates, density matrices and
/// channel representations.
using cmat = Eigen::MatrixXcd;
using dmat = Eigen::MatrixXd;
/// Column vector (pure state).
using ket = Eigen::VectorXcd;
/// Row vector (dual of a pure state).
using bra = Eigen::RowVectorXcd;

}  // namespace qsim
