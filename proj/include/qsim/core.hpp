#pragma once

#include <initializer_list>
#include <vector>

#include "qsim/constants.hpp"
#include "qsim/exception.hpp"
#include "qsim/types.hpp"

namespace qsim {

/// Ordered subsystem dimensions of a composite Hilbert space.
///
/// Every dimension is at least 2, there is at least one subsystem and at
/// most `maxn`, and the total dimension fits in an `idx`. Construction
/// throws DIMS_INVALID otherwise.
class Dims {
 public:
  Dims(std::initializer_list<idx> dims);
  Dims(std::vector<idx> dims);  // NOLINT(google-explicit-constructor)

  /// `n` copies of dimension `d`.
  static Dims uniform(idx n, idx d);

  idx size() const noexcept { return dims_.size(); }
  idx operator[](idx k) const { return dims_[k]; }
  auto begin() const noexcept { return dims_.begin(); }
  auto end() const noexcept { return dims_.end(); }

  /// Product of all subsystem dimensions.
  idx total() const noexcept { return total_; }

  const std::vector<idx>& values() const noexcept { return dims_; }

  friend bool operator==(const Dims& a, const Dims& b) noexcept {
    return a.dims_ == b.dims_;
  }

 private:
  std::vector<idx> dims_;
  idx total_ = 1;
};

/// Row-major linear index of a multi-index: the leftmost subsystem is the
/// most significant digit.
idx multiidx_to_n(const std::vector<idx>& midx, const Dims& dims);

/// Inverse of multiidx_to_n.
std::vector<idx> n_to_multiidx(idx n, const Dims& dims);

/// Throws DIMS_MISMATCH_MATRIX unless the product of `dims` equals `total`.
void validate_dims(const Dims& dims, idx total);

}  // namespace qsim
