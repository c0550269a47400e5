#pragma once

#include <vector>

#include "qsim/core.hpp"
#include "qsim/types.hpp"

namespace qsim {

// All entropies are in bits.

/// -Σ p log2 p over entries above eps. Entries must be >= -eps and sum to 1
/// within 1e-6 (OUT_OF_RANGE otherwise).
double shannon(const std::vector<double>& probs);

/// von Neumann entropy of a density matrix.
double entropy(const cmat& rho);

/// S(A) + S(B) - S(AB) of the reduced states on subsystem lists A and B.
double qmutualinfo(const cmat& rho, const std::vector<idx>& A,
                   const std::vector<idx>& B, const Dims& dims);

}  // namespace qsim
