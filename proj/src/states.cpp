#include "qsim/states.hpp"

#include <cmath>

#include "qsim/exception.hpp"
#include "qsim/linalg.hpp"

namespace qsim {

namespace {

ket basis2(idx k) {
  ket v = ket::Zero(2);
  v(static_cast<Eigen::Index>(k)) = 1.;
  return v;
}

ket two_qubit(cplx a00, cplx a01, cplx a10, cplx a11) {
  ket v(4);
  v << a00, a01, a10, a11;
  return v;
}

States make_states() {
  const double s = 1. / std::sqrt(2.);
  States st;
  st.z0 = basis2(0);
  st.z1 = basis2(1);
  st.x0 = (ket(2) << s, s).finished();
  st.x1 = (ket(2) << s, -s).finished();
  st.b00 = two_qubit(s, 0., 0., s);
  st.b01 = two_qubit(0., s, s, 0.);
  st.b10 = two_qubit(s, 0., 0., -s);
  st.b11 = two_qubit(0., s, -s, 0.);
  return st;
}

}  // namespace

const States& states() {
  static const States registry = make_states();
  return registry;
}

ket mket(const std::vector<idx>& digits, const Dims& dims) {
  if (digits.size() != dims.size())
    throw Exception("qsim::mket()", ErrorKind::SUBSYS_MISMATCH_DIMS);
  for (idx k = 0; k < digits.size(); ++k)
    if (digits[k] >= dims[k])
      throw Exception("qsim::mket()", ErrorKind::OUT_OF_RANGE);
  ket result = ket::Zero(static_cast<Eigen::Index>(dims.total()));
  result(static_cast<Eigen::Index>(multiidx_to_n(digits, dims))) = 1.;
  return result;
}

ket mket(const std::vector<idx>& digits) {
  if (digits.empty()) throw Exception("qsim::mket()", ErrorKind::ZERO_SIZE);
  return mket(digits, Dims::uniform(digits.size(), 2));
}

ket bell00() { return states().b00; }

ket shor_codeword(idx logical) {
  if (logical > 1)
    throw Exception("qsim::shor_codeword()", ErrorKind::OUT_OF_RANGE);
  const double s = 1. / std::sqrt(2.);
  ket block = ket::Zero(8);
  block(0) = s;
  block(7) = logical == 0 ? s : -s;
  return kron_pow(block, 3);
}

}  // namespace qsim
