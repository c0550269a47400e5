#pragma once

#include <initializer_list>
#include <vector>

#include "qsim/core.hpp"
#include "qsim/types.hpp"

namespace qsim {

/// A quantum channel given by its Kraus operators. All operators are square
/// and share one side; construction throws ZERO_SIZE (no operators or an
/// empty operator), MATRIX_NOT_SQUARE or DIMS_MISMATCH_MATRIX otherwise.
class Channel {
 public:
  Channel(std::vector<cmat> kraus);  // NOLINT(google-explicit-constructor)
  Channel(std::initializer_list<cmat> kraus);

  const std::vector<cmat>& kraus() const noexcept { return kraus_; }
  idx size() const noexcept { return kraus_.size(); }
  /// Side of every Kraus operator.
  idx dim() const noexcept { return static_cast<idx>(kraus_.front().rows()); }

  /// True when the sum of K†K equals the identity within `tol` (largest
  /// entry deviation).
  bool is_cptp(double tol = 1e-10) const;

  auto begin() const noexcept { return kraus_.begin(); }
  auto end() const noexcept { return kraus_.end(); }

 private:
  std::vector<cmat> kraus_;
};

/// A bijection on {0, ..., n-1}. Throws PERM_INVALID otherwise.
class Permutation {
 public:
  Permutation(std::vector<idx> perm);  // NOLINT(google-explicit-constructor)
  Permutation(std::initializer_list<idx> perm);

  static Permutation identity(idx n);

  idx size() const noexcept { return perm_.size(); }
  idx operator[](idx k) const { return perm_[k]; }
  auto begin() const noexcept { return perm_.begin(); }
  auto end() const noexcept { return perm_.end(); }
  const std::vector<idx>& values() const noexcept { return perm_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<idx> perm_;
};

/// Applies U to the listed subsystems of a ket (U ψ) or density matrix
/// (U ρ U†). The order of `subsys` is the tensor-factor order of U.
cmat apply(const cmat& state, const cmat& U, const std::vector<idx>& subsys,
           const Dims& dims);

/// Generalized controlled-U: when every control subsystem holds the value j,
/// U^j acts on the targets; identity elsewhere. All controls must share one
/// dimension. An empty control list applies U unconditionally.
cmat apply_ctrl(const cmat& state, const cmat& U, const std::vector<idx>& ctrl,
                const std::vector<idx>& target, const Dims& dims);

/// Sum over i of K_i ρ K_i† with each K_i acting on `subsys`.
cmat apply_channel(const cmat& rho, const Channel& ks,
                   const std::vector<idx>& subsys, const Dims& dims);

/// Superoperator Σ conj(K) ⊗ K, so that vec(Λ(ρ)) = S vec(ρ) with column
/// stacking.
cmat kraus2super(const Channel& ks);

/// Unnormalized Choi matrix Σ vec(K) vec(K)† (column stacking); its trace is
/// the dimension for trace-preserving channels.
cmat kraus2choi(const Channel& ks);

/// Kraus decomposition of a Choi matrix: one operator sqrt(λ) unvec(v) per
/// eigenpair with λ > eps.
Channel choi2kraus(const cmat& J);

/// Traces out the listed subsystems; kets are promoted to projectors.
cmat ptrace(const cmat& state, const std::vector<idx>& subsys, const Dims& dims);

/// Transposes the row/column indices of the listed subsystems only; kets are
/// promoted to projectors.
cmat ptranspose(const cmat& state, const std::vector<idx>& subsys,
                const Dims& dims);

/// Moves subsystem k to position perm[k]. Works on kets and square matrices.
cmat syspermute(const cmat& state, const Permutation& perm, const Dims& dims);

/// Dimensions after syspermute: result[perm[k]] == dims[k].
Dims permute_dims(const Dims& dims, const Permutation& perm);

/// result[perm[k]] == k.
Permutation invperm(const Permutation& perm);

/// Composition: (second ∘ first)[k] == second[first[k]].
Permutation compose(const Permutation& second, const Permutation& first);

/// Column-stacking vectorization and its inverse.
ket vec(const cmat& A);
cmat unvec(const ket& v, idx rows, idx cols);

}  // namespace qsim
