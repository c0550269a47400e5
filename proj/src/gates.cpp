#include "qsim/gates.hpp"

#include <cmath>

#include "qsim/constants.hpp"
#include "qsim/exception.hpp"
#include "qsim/operations.hpp"

namespace qsim {

namespace {

cmat permutation_matrix(const std::vector<idx>& image) {
  const auto D = static_cast<Eigen::Index>(image.size());
  cmat P = cmat::Zero(D, D);
  for (Eigen::Index j = 0; j < D; ++j)
    P(static_cast<Eigen::Index>(image[j]), j) = 1.;
  return P;
}

Gates make_gates() {
  using namespace literals;
  const double s = 1. / std::sqrt(2.);
  Gates gt;
  gt.Id2 = cmat::Identity(2, 2);
  gt.X = (cmat(2, 2) << 0., 1., 1., 0.).finished();
  gt.Y = (cmat(2, 2) << 0., -1_i, 1_i, 0.).finished();
  gt.Z = (cmat(2, 2) << 1., 0., 0., -1.).finished();
  gt.H = (cmat(2, 2) << s, s, s, -s).finished();
  gt.S = (cmat(2, 2) << 1., 0., 0., 1_i).finished();
  gt.T = (cmat(2, 2) << 1., 0., 0., std::polar(1., pi / 4.)).finished();
  gt.CNOT = permutation_matrix({0, 1, 3, 2});
  gt.CZ = cmat::Identity(4, 4);
  gt.CZ(3, 3) = -1.;
  gt.SWAP = permutation_matrix({0, 2, 1, 3});
  gt.TOF = permutation_matrix({0, 1, 2, 3, 4, 5, 7, 6});
  gt.FRED = permutation_matrix({0, 1, 2, 3, 4, 6, 5, 7});
  return gt;
}

void check_qudit_dim(idx D, const char* where) {
  if (D < 2) throw Exception(where, ErrorKind::DIMS_INVALID);
}

}  // namespace

cmat Gates::Id(idx D) {
  const auto n = static_cast<Eigen::Index>(D);
  return cmat::Identity(n, n);
}

const Gates& gates() {
  static const Gates registry = make_gates();
  return registry;
}

const cmat& cnot() { return gates().CNOT; }

cmat Xd(idx D) {
  check_qudit_dim(D, "qsim::Xd()");
  std::vector<idx> image(D);
  for (idx j = 0; j < D; ++j) image[j] = (j + 1) % D;
  return permutation_matrix(image);
}

cmat Zd(idx D) {
  check_qudit_dim(D, "qsim::Zd()");
  const auto n = static_cast<Eigen::Index>(D);
  cmat Z = cmat::Zero(n, n);
  for (idx j = 0; j < D; ++j)
    Z(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(j)) =
        std::polar(1., 2. * pi * static_cast<double>(j) / static_cast<double>(D));
  return Z;
}

cmat Fd(idx D) {
  check_qudit_dim(D, "qsim::Fd()");
  const auto n = static_cast<Eigen::Index>(D);
  const double scale = 1. / std::sqrt(static_cast<double>(D));
  cmat F(n, n);
  for (idx j = 0; j < D; ++j)
    for (idx k = 0; k < D; ++k)
      F(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(k)) =
          scale * std::polar(1., 2. * pi * static_cast<double>((j * k) % D) /
                                     static_cast<double>(D));
  return F;
}

cmat ctrl_gate(const cmat& U, const std::vector<idx>& ctrl,
               const std::vector<idx>& target, idx n, idx d) {
  constexpr const char* where = "qsim::ctrl_gate()";
  if (U.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (U.rows() != U.cols()) throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  if (d < 2 || n == 0) throw Exception(where, ErrorKind::DIMS_INVALID);
  const Dims dims = Dims::uniform(n, d);
  for (idx k : ctrl)
    if (k >= n) throw Exception(where, ErrorKind::SUBSYS_MISMATCH_DIMS);
  for (idx k : target)
    if (k >= n) throw Exception(where, ErrorKind::SUBSYS_MISMATCH_DIMS);
  idx side = 1;
  for (idx k = 0; k < target.size(); ++k) side *= d;
  if (static_cast<idx>(U.rows()) != side)
    throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX);
  // Column c of the gate is its action on the basis ket |c>.
  const auto D = static_cast<Eigen::Index>(dims.total());
  cmat G(D, D);
  try {
    for (Eigen::Index c = 0; c < D; ++c)
      G.col(c) = apply_ctrl(ket::Unit(D, c), U, ctrl, target, dims);
  } catch (const Exception& e) {
    throw Exception(where, e.type());
  }
  return G;
}

}  // namespace qsim
