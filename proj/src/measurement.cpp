#include "qsim/measurement.hpp"

#include <algorithm>
#include <cmath>

#include "qsim/constants.hpp"
#include "qsim/exception.hpp"
#include "subsys.hpp"

namespace qsim {

idx sample_index(const std::vector<double>& probs, const std::vector<bool>& skip,
                 Rng& rng) {
  double total = 0.;
  idx last = probs.size();
  for (idx i = 0; i < probs.size(); ++i)
    if (!skip[i]) {
      total += probs[i];
      last = i;
    }
  if (last == probs.size())
    throw Exception("qsim::sample_index()", ErrorKind::OUT_OF_RANGE,
                    "no outcome with nonzero probability");
  const double u = rng.uniform() * total;
  double cumulative = 0.;
  for (idx i = 0; i < probs.size(); ++i) {
    if (skip[i]) continue;
    cumulative += probs[i];
    if (u < cumulative) return i;
  }
  return last;
}

MeasurementOutcome measure(const cmat& state, const cmat& basis,
                           const std::vector<idx>& subsys, const Dims& dims,
                           Rng& rng) {
  constexpr const char* where = "qsim::measure()";
  const auto shape = detail::classify(state, dims, where);
  if (basis.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (basis.rows() != basis.cols())
    throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  detail::check_subsys(subsys, dims.size(), where);
  if (static_cast<idx>(basis.rows()) != detail::subsys_dim(subsys, dims))
    throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX);
  const auto nb = basis.cols();
  if ((basis.adjoint() * basis - cmat::Identity(nb, nb)).cwiseAbs().maxCoeff() >
      eps)
    throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX,
                    "basis columns are not orthonormal");

  const auto sub = detail::offsets(subsys, dims);
  const auto rest_subsys = detail::complement(subsys, dims.size());
  const auto rest = detail::offsets(rest_subsys, dims);
  const auto nrest = static_cast<Eigen::Index>(rest.size());
  const auto nsub = static_cast<Eigen::Index>(sub.size());
  const bool full = rest_subsys.empty();

  MeasurementOutcome out;
  out.probs.resize(static_cast<idx>(nb));
  out.states.resize(static_cast<idx>(nb));
  std::vector<bool> skip(static_cast<idx>(nb), false);

  // Reshape the state so the measured subsystems index the columns:
  // psi(r, s) or rho((r, s), (r', s')).
  for (Eigen::Index i = 0; i < nb; ++i) {
    const auto b = basis.col(i);
    cmat post;
    double p = 0.;
    if (shape == detail::Shape::ket) {
      ket phi = ket::Zero(nrest);
      for (Eigen::Index r = 0; r < nrest; ++r)
        for (Eigen::Index s = 0; s < nsub; ++s)
          phi(r) += std::conj(b(s)) *
                    state(static_cast<Eigen::Index>(rest[r] + sub[s]), 0);
      p = phi.squaredNorm();
      if (p > eps) post = phi / std::sqrt(p);
    } else {
      cmat m = cmat::Zero(nrest, nrest);
      for (Eigen::Index r = 0; r < nrest; ++r)
        for (Eigen::Index rp = 0; rp < nrest; ++rp) {
          cplx sum = 0.;
          for (Eigen::Index s = 0; s < nsub; ++s)
            for (Eigen::Index sp = 0; sp < nsub; ++sp)
              sum += std::conj(b(s)) *
                     state(static_cast<Eigen::Index>(rest[r] + sub[s]),
                           static_cast<Eigen::Index>(rest[rp] + sub[sp])) *
                     b(sp);
          m(r, rp) = sum;
        }
      p = m.trace().real();
      if (p > eps) post = m / p;
    }
    if (p <= eps) {
      p = std::max(p, 0.);
      skip[static_cast<idx>(i)] = true;
      post = cmat();
    } else if (full) {
      post = cmat::Ones(1, 1);
    }
    out.probs[static_cast<idx>(i)] = p;
    out.states[static_cast<idx>(i)] = std::move(post);
  }
  out.result = sample_index(out.probs, skip, rng);
  return out;
}

}  // namespace qsim
