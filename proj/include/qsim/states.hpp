#pragma once

#include <vector>

#include "qsim/core.hpp"
#include "qsim/types.hpp"

namespace qsim {

/// Standard single- and two-qubit states.
///
/// Bell states: b00 = (|00> + |11>)/√2, b01 = (|01> + |10>)/√2,
/// b10 = (|00> - |11>)/√2, b11 = (|01> - |10>)/√2.
struct States {
  ket z0, z1;  // Z eigenvectors |0>, |1>
  ket x0, x1;  // X eigenvectors (|0> ± |1>)/√2
  ket b00, b01, b10, b11;
};

/// The immutable registry, built on first access.
const States& states();

/// Computational-basis ket |digits> over `dims`.
ket mket(const std::vector<idx>& digits, const Dims& dims);

/// Qubit overload: every subsystem has dimension 2.
ket mket(const std::vector<idx>& digits);

/// (|00> + |11>)/√2.
ket bell00();

/// Codewords of Shor's nine-qubit code. |0_L> = ((|000> + |111>)/√2)^⊗3,
/// |1_L> = ((|000> - |111>)/√2)^⊗3. Throws OUT_OF_RANGE for logical > 1.
ket shor_codeword(idx logical);

}  // namespace qsim
