#pragma once

// Index bookkeeping shared by the subsystem kernels.

#include <span>
#include <vector>

#include "qsim/core.hpp"

namespace qsim::detail {

/// Throws SUBSYS_MISMATCH_DIMS unless `subsys` holds distinct indices
/// smaller than `n`.
void check_subsys(std::span<const idx> subsys, idx n, const char* where);

/// Throws SUBSYS_MISMATCH_DIMS if the two subsystem lists share an index.
void check_disjoint(std::span<const idx> a, std::span<const idx> b,
                    const char* where);

/// Subsystems of {0, ..., n-1} not listed in `subsys`, ascending.
std::vector<idx> complement(std::span<const idx> subsys, idx n);

/// Row-major strides: stride[k] is the product of dims[j] for j > k.
std::vector<idx> strides(const Dims& dims);

/// Product of dims[k] over the listed subsystems.
idx subsys_dim(std::span<const idx> subsys, const Dims& dims);

/// For every multi-index over the listed subsystems (row-major in list
/// order), the linear offset it contributes in the full space.
std::vector<idx> offsets(std::span<const idx> subsys, const Dims& dims);

enum class Shape { ket, square };

/// Classifies a state as a ket of length dims.total() or a square matrix
/// of that side. Throws ZERO_SIZE, NOT_SQUARE_NOR_KET or
/// DIMS_MISMATCH_MATRIX.
Shape classify(const cmat& state, const Dims& dims, const char* where);

}  // namespace qsim::detail

#if defined(_OPENMP)
#define QSIM_PRAGMA_OMP(x) _Pragma(#x)
#else
#define QSIM_PRAGMA_OMP(x)
#endif

// Work size (in scalar multiply-adds) below which kernels stay serial.
#define QSIM_OMP_THRESHOLD 16384
