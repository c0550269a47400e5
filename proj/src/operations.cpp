#include "qsim/operations.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "qsim/constants.hpp"
#include "qsim/exception.hpp"
#include "qsim/linalg.hpp"
#include "subsys.hpp"

namespace qsim {

using detail::Shape;

// ---------------------------------------------------------------------------
// Channel / Permutation

Channel::Channel(std::vector<cmat> kraus) : kraus_(std::move(kraus)) {
  if (kraus_.empty())
    throw Exception("qsim::Channel()", ErrorKind::ZERO_SIZE,
                    "no Kraus operators");
  const Eigen::Index D = kraus_.front().rows();
  for (const auto& K : kraus_) {
    if (K.size() == 0) throw Exception("qsim::Channel()", ErrorKind::ZERO_SIZE);
    if (K.rows() != K.cols())
      throw Exception("qsim::Channel()", ErrorKind::MATRIX_NOT_SQUARE);
    if (K.rows() != D)
      throw Exception("qsim::Channel()", ErrorKind::DIMS_MISMATCH_MATRIX,
                      "Kraus operators differ in shape");
  }
}

Channel::Channel(std::initializer_list<cmat> kraus)
    : Channel(std::vector<cmat>(kraus)) {}

bool Channel::is_cptp(double tol) const {
  const auto D = static_cast<Eigen::Index>(dim());
  cmat sum = cmat::Zero(D, D);
  for (const auto& K : kraus_) sum += K.adjoint() * K;
  return (sum - cmat::Identity(D, D)).cwiseAbs().maxCoeff() <= tol;
}

Permutation::Permutation(std::vector<idx> perm) : perm_(std::move(perm)) {
  std::vector<bool> seen(perm_.size(), false);
  for (idx p : perm_) {
    if (p >= perm_.size() || seen[p])
      throw Exception("qsim::Permutation()", ErrorKind::PERM_INVALID);
    seen[p] = true;
  }
}

Permutation::Permutation(std::initializer_list<idx> perm)
    : Permutation(std::vector<idx>(perm)) {}

Permutation Permutation::identity(idx n) {
  std::vector<idx> p(n);
  std::iota(p.begin(), p.end(), idx{0});
  return Permutation(std::move(p));
}

Permutation invperm(const Permutation& perm) {
  std::vector<idx> inv(perm.size());
  for (idx k = 0; k < perm.size(); ++k) inv[perm[k]] = k;
  return Permutation(std::move(inv));
}

Permutation compose(const Permutation& second, const Permutation& first) {
  if (second.size() != first.size())
    throw Exception("qsim::compose()", ErrorKind::PERM_INVALID);
  std::vector<idx> result(first.size());
  for (idx k = 0; k < first.size(); ++k) result[k] = second[first[k]];
  return Permutation(std::move(result));
}

ket vec(const cmat& A) {
  ket v(A.size());
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < A.rows(); ++i) v(i + j * A.rows()) = A(i, j);
  return v;
}

cmat unvec(const ket& v, idx rows, idx cols) {
  if (rows * cols != static_cast<idx>(v.size()))
    throw Exception("qsim::unvec()", ErrorKind::DIMS_MISMATCH_MATRIX);
  const auto r = static_cast<Eigen::Index>(rows);
  cmat A(r, static_cast<Eigen::Index>(cols));
  for (Eigen::Index j = 0; j < A.cols(); ++j)
    for (Eigen::Index i = 0; i < r; ++i) A(i, j) = v(i + j * r);
  return A;
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

using Offsets = std::vector<idx>;

/// out(rest + sub[s], c) = Σ_t U(s, t) in(rest + sub[t], c) for every
/// column c and every rest offset. `out` must not alias `in` and must be
/// pre-filled where the kernel does not write.
void left_multiply(cmat& out, const cmat& in, const cmat& U, const Offsets& sub,
                   const Offsets& rest) {
  const auto dsub = static_cast<Eigen::Index>(sub.size());
  const auto nrest = static_cast<long long>(rest.size());
  const auto ncols = static_cast<long long>(in.cols());
  const long long total = ncols * nrest;
  QSIM_PRAGMA_OMP(omp parallel if (total * dsub * dsub > QSIM_OMP_THRESHOLD))
  {
    ket v(dsub), w(dsub);
    QSIM_PRAGMA_OMP(omp for schedule(static))
    for (long long t = 0; t < total; ++t) {
      const auto c = static_cast<Eigen::Index>(t / nrest);
      const idx base = rest[static_cast<idx>(t % nrest)];
      for (Eigen::Index s = 0; s < dsub; ++s)
        v(s) = in(static_cast<Eigen::Index>(base + sub[s]), c);
      w.noalias() = U * v;
      for (Eigen::Index s = 0; s < dsub; ++s)
        out(static_cast<Eigen::Index>(base + sub[s]), c) = w(s);
    }
  }
}

cmat conjugate_by(const cmat& rho, const cmat& U, const Offsets& sub,
                  const Offsets& rest) {
  cmat tmp(rho.rows(), rho.cols());
  left_multiply(tmp, rho, U, sub, rest);
  // (U (U ρ)†)† = U ρ U†
  const cmat tmp_adj = tmp.adjoint();
  cmat out(rho.rows(), rho.cols());
  left_multiply(out, tmp_adj, U, sub, rest);
  return out.adjoint();
}

void check_operator(const cmat& U, idx side, const char* where) {
  if (U.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (U.rows() != U.cols()) throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  if (static_cast<idx>(U.rows()) != side)
    throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX);
}

cmat promote(const cmat& state, Shape shape) {
  if (shape == Shape::ket) return state * state.adjoint();
  return state;
}

}  // namespace

// ---------------------------------------------------------------------------
// apply / apply_ctrl / apply_channel

cmat apply(const cmat& state, const cmat& U, const std::vector<idx>& subsys,
           const Dims& dims) {
  constexpr const char* where = "qsim::apply()";
  const Shape shape = detail::classify(state, dims, where);
  detail::check_subsys(subsys, dims.size(), where);
  check_operator(U, detail::subsys_dim(subsys, dims), where);

  const Offsets sub = detail::offsets(subsys, dims);
  const Offsets rest =
      detail::offsets(detail::complement(subsys, dims.size()), dims);
  if (shape == Shape::ket) {
    cmat out(state.rows(), 1);
    left_multiply(out, state, U, sub, rest);
    return out;
  }
  return conjugate_by(state, U, sub, rest);
}

namespace {

// Applies U^j on the target block of every basis state whose controls all
// hold j. Columns of `in` are treated as independent kets.
cmat ctrl_left_multiply(const cmat& in, const std::vector<cmat>& powers,
                        const Offsets& ctrl_diag, const Offsets& target,
                        const Offsets& rest) {
  cmat out = in;
  for (idx j = 1; j < powers.size(); ++j) {
    Offsets shifted(rest.size());
    for (idx r = 0; r < rest.size(); ++r) shifted[r] = rest[r] + ctrl_diag[j];
    left_multiply(out, in, powers[j], target, shifted);
  }
  return out;
}

}  // namespace

cmat apply_ctrl(const cmat& state, const cmat& U, const std::vector<idx>& ctrl,
                const std::vector<idx>& target, const Dims& dims) {
  constexpr const char* where = "qsim::apply_ctrl()";
  const Shape shape = detail::classify(state, dims, where);
  detail::check_subsys(ctrl, dims.size(), where);
  detail::check_subsys(target, dims.size(), where);
  detail::check_disjoint(ctrl, target, where);
  check_operator(U, detail::subsys_dim(target, dims), where);
  if (ctrl.empty()) return apply(state, U, target, dims);

  const idx d = dims[ctrl.front()];
  for (idx c : ctrl)
    if (dims[c] != d)
      throw Exception(where, ErrorKind::SUBSYS_MISMATCH_DIMS,
                      "control subsystems differ in dimension");

  std::vector<cmat> powers{cmat::Identity(U.rows(), U.cols())};
  for (idx j = 1; j < d; ++j) powers.push_back(powers.back() * U);

  // Offset of the control multi-index (j, j, ..., j) for every j.
  const auto stride = detail::strides(dims);
  Offsets ctrl_diag(d, 0);
  for (idx j = 0; j < d; ++j)
    for (idx c : ctrl) ctrl_diag[j] += j * stride[c];

  std::vector<idx> ctrl_target = ctrl;
  ctrl_target.insert(ctrl_target.end(), target.begin(), target.end());
  const Offsets tgt = detail::offsets(target, dims);
  const Offsets rest =
      detail::offsets(detail::complement(ctrl_target, dims.size()), dims);

  if (shape == Shape::ket)
    return ctrl_left_multiply(state, powers, ctrl_diag, tgt, rest);
  const cmat tmp = ctrl_left_multiply(state, powers, ctrl_diag, tgt, rest);
  return ctrl_left_multiply(tmp.adjoint(), powers, ctrl_diag, tgt, rest)
      .adjoint();
}

cmat apply_channel(const cmat& rho, const Channel& ks,
                   const std::vector<idx>& subsys, const Dims& dims) {
  constexpr const char* where = "qsim::apply_channel()";
  if (rho.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (rho.rows() != rho.cols())
    throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  detail::classify(rho, dims, where);
  detail::check_subsys(subsys, dims.size(), where);
  if (ks.dim() != detail::subsys_dim(subsys, dims))
    throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX);

  const Offsets sub = detail::offsets(subsys, dims);
  const Offsets rest =
      detail::offsets(detail::complement(subsys, dims.size()), dims);
  cmat out = cmat::Zero(rho.rows(), rho.cols());
  for (const auto& K : ks) out += conjugate_by(rho, K, sub, rest);
  return out;
}

// ---------------------------------------------------------------------------
// Channel representations

cmat kraus2super(const Channel& ks) {
  const auto D2 = static_cast<Eigen::Index>(ks.dim() * ks.dim());
  cmat S = cmat::Zero(D2, D2);
  for (const auto& K : ks) S += kron(K.conjugate(), K);
  return S;
}

cmat kraus2choi(const Channel& ks) {
  const auto D2 = static_cast<Eigen::Index>(ks.dim() * ks.dim());
  cmat J = cmat::Zero(D2, D2);
  for (const auto& K : ks) {
    const ket v = vec(K);
    J += v * v.adjoint();
  }
  return J;
}

Channel choi2kraus(const cmat& J) {
  constexpr const char* where = "qsim::choi2kraus()";
  if (J.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  if (J.rows() != J.cols()) throw Exception(where, ErrorKind::MATRIX_NOT_SQUARE);
  const auto D2 = static_cast<idx>(J.rows());
  const auto D = static_cast<idx>(std::llround(std::sqrt(static_cast<double>(D2))));
  if (D * D != D2)
    throw Exception(where, ErrorKind::DIMS_INVALID, "side is not a square");
  if (hermiticity_defect(J) > eps)
    throw Exception(where, ErrorKind::DIMS_INVALID, "matrix is not Hermitian");

  const auto [values, vectors] = hevects(J);
  if (values.front() < -eps)
    throw Exception(where, ErrorKind::DIMS_INVALID,
                    "matrix is not positive semidefinite");
  std::vector<cmat> kraus;
  // Largest weight first.
  for (idx k = values.size(); k-- > 0;) {
    if (values[k] <= eps) break;
    kraus.push_back(std::sqrt(values[k]) *
                    unvec(vectors.col(static_cast<Eigen::Index>(k)), D, D));
  }
  if (kraus.empty())
    throw Exception(where, ErrorKind::DIMS_INVALID, "zero Choi matrix");
  return Channel(std::move(kraus));
}

// ---------------------------------------------------------------------------
// Partial trace / transpose

cmat ptrace(const cmat& state, const std::vector<idx>& subsys,
            const Dims& dims) {
  constexpr const char* where = "qsim::ptrace()";
  const Shape shape = detail::classify(state, dims, where);
  detail::check_subsys(subsys, dims.size(), where);
  if (subsys.empty()) return promote(state, shape);

  const Offsets tr = detail::offsets(subsys, dims);
  const Offsets keep =
      detail::offsets(detail::complement(subsys, dims.size()), dims);
  const auto nkeep = static_cast<Eigen::Index>(keep.size());
  const auto ntr = static_cast<Eigen::Index>(tr.size());

  if (shape == Shape::ket) {
    cmat psi(nkeep, ntr);
    for (Eigen::Index r = 0; r < nkeep; ++r)
      for (Eigen::Index t = 0; t < ntr; ++t)
        psi(r, t) = state(static_cast<Eigen::Index>(keep[r] + tr[t]), 0);
    return psi * psi.adjoint();
  }

  cmat out(nkeep, nkeep);
  const long long total = static_cast<long long>(nkeep) * nkeep;
  QSIM_PRAGMA_OMP(omp parallel for if (total * ntr > QSIM_OMP_THRESHOLD))
  for (long long t = 0; t < total; ++t) {
    const auto r = static_cast<Eigen::Index>(t % nkeep);
    const auto c = static_cast<Eigen::Index>(t / nkeep);
    cplx sum = 0.;
    for (Eigen::Index k = 0; k < ntr; ++k)
      sum += state(static_cast<Eigen::Index>(keep[r] + tr[k]),
                   static_cast<Eigen::Index>(keep[c] + tr[k]));
    out(r, c) = sum;
  }
  return out;
}

cmat ptranspose(const cmat& state, const std::vector<idx>& subsys,
                const Dims& dims) {
  constexpr const char* where = "qsim::ptranspose()";
  const Shape shape = detail::classify(state, dims, where);
  detail::check_subsys(subsys, dims.size(), where);
  const cmat rho = promote(state, shape);

  const Offsets sub = detail::offsets(subsys, dims);
  const Offsets rest =
      detail::offsets(detail::complement(subsys, dims.size()), dims);
  const auto nrest = static_cast<long long>(rest.size());
  const auto nsub = static_cast<idx>(sub.size());
  cmat out(rho.rows(), rho.cols());
  QSIM_PRAGMA_OMP(omp parallel for if (rho.size() > QSIM_OMP_THRESHOLD))
  for (long long t = 0; t < nrest * nrest; ++t) {
    const idx rr = rest[static_cast<idx>(t % nrest)];
    const idx rc = rest[static_cast<idx>(t / nrest)];
    for (idx cs = 0; cs < nsub; ++cs)
      for (idx rs = 0; rs < nsub; ++rs)
        out(static_cast<Eigen::Index>(rr + sub[cs]),
            static_cast<Eigen::Index>(rc + sub[rs])) =
            rho(static_cast<Eigen::Index>(rr + sub[rs]),
                static_cast<Eigen::Index>(rc + sub[cs]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subsystem permutation

Dims permute_dims(const Dims& dims, const Permutation& perm) {
  if (perm.size() != dims.size())
    throw Exception("qsim::permute_dims()", ErrorKind::SUBSYS_MISMATCH_DIMS);
  std::vector<idx> out(dims.size());
  for (idx k = 0; k < dims.size(); ++k) out[perm[k]] = dims[k];
  return Dims(std::move(out));
}

cmat syspermute(const cmat& state, const Permutation& perm, const Dims& dims) {
  constexpr const char* where = "qsim::syspermute()";
  const Shape shape = detail::classify(state, dims, where);
  if (perm.size() != dims.size())
    throw Exception(where, ErrorKind::SUBSYS_MISMATCH_DIMS);

  // target[i] is the output linear index of input basis index i.
  const auto out_stride = detail::strides(permute_dims(dims, perm));
  std::vector<idx> target{0};
  target.reserve(dims.total());
  for (idx k = 0; k < dims.size(); ++k) {
    std::vector<idx> next;
    next.reserve(target.size() * dims[k]);
    for (idx base : target)
      for (idx digit = 0; digit < dims[k]; ++digit)
        next.push_back(base + digit * out_stride[perm[k]]);
    target = std::move(next);
  }

  const auto D = static_cast<long long>(dims.total());
  cmat out(state.rows(), state.cols());
  if (shape == Shape::ket) {
    for (long long i = 0; i < D; ++i)
      out(static_cast<Eigen::Index>(target[i]), 0) = state(i, 0);
    return out;
  }
  QSIM_PRAGMA_OMP(omp parallel for if (D * D > QSIM_OMP_THRESHOLD))
  for (long long j = 0; j < D; ++j)
    for (long long i = 0; i < D; ++i)
      out(static_cast<Eigen::Index>(target[i]),
          static_cast<Eigen::Index>(target[j])) = state(i, j);
  return out;
}

}  // namespace qsim
