#pragma once

#include <limits>
#include <numbers>

#include "qsim/types.hpp"

namespace qsim {

/// Maximum number of subsystems in a composite system.
inline constexpr idx maxn = 64;

inline constexpr double pi = std::numbers::pi;
inline constexpr double ee = std::numbers::e;

/// Tolerance used when comparing floating point values to zero.
inline constexpr double eps = 1e-12;

/// Display threshold: components below it are printed as zero.
inline constexpr double chop = 1e-10;

inline constexpr double infty = std::numeric_limits<double>::max();

inline namespace literals {

constexpr cplx operator""_i(unsigned long long x) {
  return {0., static_cast<double>(x)};
}

constexpr cplx operator""_i(long double x) {
  return {0., static_cast<double>(x)};
}

}  // namespace literals

/// D-th root of unity exp(2 pi i / D). Throws OUT_OF_RANGE for D == 0.
cplx omega(idx D);

}  // namespace qsim
