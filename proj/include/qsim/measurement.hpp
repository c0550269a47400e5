#pragma once

#include <vector>

#include "qsim/core.hpp"
#include "qsim/random.hpp"
#include "qsim/types.hpp"

namespace qsim {

/// Result of a destructive projective measurement.
struct MeasurementOutcome {
  /// Sampled outcome index.
  idx result = 0;
  /// Born probability of every outcome, one per basis column.
  std::vector<double> probs;
  /// Normalized post-measurement state of the unmeasured subsystems for
  /// every outcome (kets for ket input, density matrices otherwise). A
  /// 0 x 0 matrix marks an outcome of zero probability.
  std::vector<cmat> states;
};

/// Measures `subsys` in the orthonormal basis given by the columns of
/// `basis`. The measured subsystems are removed from the post-measurement
/// states; when every subsystem is measured each state is the 1 x 1 matrix
/// [1]. The outcome is drawn from `rng` by inverse CDF with one uniform.
MeasurementOutcome measure(const cmat& state, const cmat& basis,
                           const std::vector<idx>& subsys, const Dims& dims,
                           Rng& rng);

/// Inverse-CDF sample over `probs` with a single uniform draw. Entries
/// flagged in `skip` are never returned.
idx sample_index(const std::vector<double>& probs, const std::vector<bool>& skip,
                 Rng& rng);

}  // namespace qsim
