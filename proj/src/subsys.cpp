#include "subsys.hpp"

#include <algorithm>

namespace qsim::detail {

void check_subsys(std::span<const idx> subsys, idx n, const char* where) {
  std::vector<bool> seen(n, false);
  for (idx s : subsys) {
    if (s >= n || seen[s])
      throw Exception(where, ErrorKind::SUBSYS_MISMATCH_DIMS);
    seen[s] = true;
  }
}

void check_disjoint(std::span<const idx> a, std::span<const idx> b,
                    const char* where) {
  for (idx x : a)
    if (std::find(b.begin(), b.end(), x) != b.end())
      throw Exception(where, ErrorKind::SUBSYS_MISMATCH_DIMS,
                      "subsystem lists overlap");
}

std::vector<idx> complement(std::span<const idx> subsys, idx n) {
  std::vector<idx> rest;
  rest.reserve(n);
  for (idx k = 0; k < n; ++k)
    if (std::find(subsys.begin(), subsys.end(), k) == subsys.end())
      rest.push_back(k);
  return rest;
}

std::vector<idx> strides(const Dims& dims) {
  std::vector<idx> s(dims.size());
  idx acc = 1;
  for (idx k = dims.size(); k-- > 0;) {
    s[k] = acc;
    acc *= dims[k];
  }
  return s;
}

idx subsys_dim(std::span<const idx> subsys, const Dims& dims) {
  idx d = 1;
  for (idx s : subsys) d *= dims[s];
  return d;
}

std::vector<idx> offsets(std::span<const idx> subsys, const Dims& dims) {
  const auto stride = strides(dims);
  std::vector<idx> result{0};
  result.reserve(subsys_dim(subsys, dims));
  // Row-major: the first listed subsystem is the most significant digit, so
  // each new subsystem refines every existing entry.
  for (idx s : subsys) {
    std::vector<idx> next;
    next.reserve(result.size() * dims[s]);
    for (idx base : result)
      for (idx digit = 0; digit < dims[s]; ++digit)
        next.push_back(base + digit * stride[s]);
    result = std::move(next);
  }
  return result;
}

Shape classify(const cmat& state, const Dims& dims, const char* where) {
  if (state.size() == 0) throw Exception(where, ErrorKind::ZERO_SIZE);
  const auto D = static_cast<Eigen::Index>(dims.total());
  if (state.cols() == 1 && state.rows() != 1) {
    if (state.rows() != D) throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX);
    return Shape::ket;
  }
  if (state.rows() == state.cols()) {
    if (state.rows() != D) throw Exception(where, ErrorKind::DIMS_MISMATCH_MATRIX);
    return Shape::square;
  }
  throw Exception(where, ErrorKind::NOT_SQUARE_NOR_KET);
}

}  // namespace qsim::detail
