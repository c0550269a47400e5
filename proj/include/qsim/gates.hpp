#pragma once

#include <vector>

#include "qsim/types.hpp"

namespace qsim {

/// Fixed qubit gates. CNOT uses the first qubit as control; TOF (Toffoli)
/// uses the first two as controls; FRED (Fredkin) uses the first as the
/// control of a swap of the other two.
struct Gates {
  cmat Id2;
  cmat X, Y, Z, H, S, T;
  cmat CNOT, CZ, SWAP;
  cmat TOF, FRED;

  /// D x D identity.
  static cmat Id(idx D);
};

/// The immutable registry, built on first access.
const Gates& gates();

const cmat& cnot();

/// Qudit shift |j> -> |j+1 mod D>. Throws DIMS_INVALID for D < 2.
cmat Xd(idx D);
/// Qudit clock diag(ω^j), ω = omega(D).
cmat Zd(idx D);
/// Fourier matrix F[j,k] = ω^{jk}/√D.
cmat Fd(idx D);

/// Full d^n x d^n controlled gate. When every control qudit holds the value
/// j, U^j acts on `target` (in list order); identity elsewhere.
cmat ctrl_gate(const cmat& U, const std::vector<idx>& ctrl,
               const std::vector<idx>& target, idx n, idx d);

}  // namespace qsim
