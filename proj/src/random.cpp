#include "qsim/random.hpp"

#include <cmath>
#include <numeric>
#include <vector>

#include "qsim/exception.hpp"

namespace qsim {

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  // Rejection keeps the result unbiased for bounds that do not divide 2^64.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do {
    u = 2. * uniform() - 1.;
    v = 2. * uniform() - 1.;
    s = u * u + v * v;
  } while (s >= 1. || s == 0.);
  const double factor = std::sqrt(-2. * std::log(s) / s);
  spare_ = v * factor;
  has_spare_ = true;
  return u * factor;
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

Rng& thread_local_rng() {
  thread_local Rng rng{[] {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }()};
  return rng;
}

cmat rand_ginibre(idx rows, idx cols, Rng& rng) {
  if (rows == 0 || cols == 0)
    throw Exception("qsim::rand_ginibre()", ErrorKind::OUT_OF_RANGE);
  cmat G(rows, cols);
  // Fill row by row so the draw order matches the row-major reading order.
  for (Eigen::Index i = 0; i < G.rows(); ++i)
    for (Eigen::Index j = 0; j < G.cols(); ++j) G(i, j) = rng.complex_normal();
  return G;
}

cmat rand_unitary(idx D, Rng& rng) {
  if (D == 0) throw Exception("qsim::rand_unitary()", ErrorKind::OUT_OF_RANGE);
  const cmat G = rand_ginibre(D, D, rng);
  Eigen::HouseholderQR<cmat> qr(G);
  cmat Q = qr.householderQ();
  const cmat& R = qr.matrixQR();
  for (Eigen::Index k = 0; k < Q.cols(); ++k) {
    const cplx r = R(k, k);
    const double mag = std::abs(r);
    if (mag > 0.) Q.col(k) *= r / mag;
  }
  return Q;
}

ket rand_ket(idx D, Rng& rng) {
  if (D == 0) throw Exception("qsim::rand_ket()", ErrorKind::OUT_OF_RANGE);
  ket psi = rand_ginibre(D, 1, rng);
  return psi / psi.norm();
}

cmat rand_rho(idx D, Rng& rng) {
  if (D == 0) throw Exception("qsim::rand_rho()", ErrorKind::OUT_OF_RANGE);
  const cmat G = rand_ginibre(D, D, rng);
  cmat rho = G * G.adjoint();
  rho = ((rho + rho.adjoint()) / 2.).eval();
  return rho / rho.trace().real();
}

Permutation rand_perm(idx n, Rng& rng) {
  if (n == 0) throw Exception("qsim::rand_perm()", ErrorKind::OUT_OF_RANGE);
  std::vector<idx> perm(n);
  std::iota(perm.begin(), perm.end(), idx{0});
  for (idx i = n - 1; i > 0; --i) {
    const auto j = static_cast<idx>(rng.uniform_below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  return Permutation(std::move(perm));
}

}  // namespace qsim
