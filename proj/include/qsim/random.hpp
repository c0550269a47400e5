#pragma once

#include <cstdint>
#include <random>

#include "qsim/operations.hpp"
#include "qsim/types.hpp"

namespace qsim {

/// Explicit pseudo-random generator state (64-bit Mersenne Twister).
///
/// Uniform and Gaussian variates are derived from the raw 64-bit stream by
/// fixed formulas, so an equal seed reproduces every draw bit for bit on
/// any conforming standard library.
class Rng {
 public:
  using engine_type = std::mt19937_64;

  explicit Rng(std::uint64_t seed = 0) : engine_(seed) {}

  void seed(std::uint64_t seed) {
    engine_.seed(seed);
    has_spare_ = false;
  }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform();

  /// Uniform integer in [0, bound). `bound` must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Standard normal variate (Marsaglia polar method).
  double normal();

  /// Complex Gaussian with independent standard normal parts.
  cplx complex_normal();

 private:
  engine_type engine_;
  double spare_ = 0.;
  bool has_spare_ = false;
};

/// Per-thread default generator, seeded from std::random_device on first use.
Rng& thread_local_rng();

/// rows x cols matrix of i.i.d. complex Gaussians.
cmat rand_ginibre(idx rows, idx cols, Rng& rng);

/// Haar-distributed D x D unitary (QR of a Ginibre matrix with the phase
/// of R's diagonal folded back into Q).
cmat rand_unitary(idx D, Rng& rng);

/// Haar-random unit ket of dimension D.
ket rand_ket(idx D, Rng& rng);

/// Random density matrix G G† / tr(G G†) with G Ginibre.
cmat rand_rho(idx D, Rng& rng);

/// Uniform random permutation of {0, ..., n-1} (Fisher-Yates).
Permutation rand_perm(idx n, Rng& rng);

}  // namespace qsim
