#include "qsim/core.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace qsim {

namespace {

std::string describe(ErrorKind kind, std::string_view where,
                     std::string_view detail) {
  std::string msg = "IN ";
  msg += where;
  msg += ": ";
  msg += kind_description(kind);
  msg += " (";
  msg += kind_name(kind);
  msg += ")";
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Exception::Exception(std::string where, Type type, std::string_view detail)
    : where_(std::move(where)),
      type_(type),
      msg_(describe(type, where_, detail)) {}

std::string_view kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZERO_SIZE: return "ZERO_SIZE";
    case ErrorKind::DIMS_INVALID: return "DIMS_INVALID";
    case ErrorKind::DIMS_MISMATCH_MATRIX: return "DIMS_MISMATCH_MATRIX";
    case ErrorKind::SUBSYS_MISMATCH_DIMS: return "SUBSYS_MISMATCH_DIMS";
    case ErrorKind::MATRIX_NOT_SQUARE: return "MATRIX_NOT_SQUARE";
    case ErrorKind::PERM_INVALID: return "PERM_INVALID";
    case ErrorKind::OUT_OF_RANGE: return "OUT_OF_RANGE";
    case ErrorKind::NOT_KET: return "NOT_KET";
    case ErrorKind::NOT_SQUARE_NOR_KET: return "NOT_SQUARE_NOR_KET";
    case ErrorKind::INDEX_OUT_OF_BOUNDS: return "INDEX_OUT_OF_BOUNDS";
    case ErrorKind::IO_ERROR: return "IO_ERROR";
  }
  return "UNKNOWN";
}

std::string_view kind_description(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ZERO_SIZE: return "Object has zero size!";
    case ErrorKind::DIMS_INVALID: return "Invalid dimension(s)!";
    case ErrorKind::DIMS_MISMATCH_MATRIX:
      return "Dimension(s) mismatch matrix size!";
    case ErrorKind::SUBSYS_MISMATCH_DIMS:
      return "Subsystems mismatch dimensions!";
    case ErrorKind::MATRIX_NOT_SQUARE: return "Matrix is not square!";
    case ErrorKind::PERM_INVALID: return "Invalid permutation!";
    case ErrorKind::OUT_OF_RANGE: return "Parameter out of range!";
    case ErrorKind::NOT_KET: return "Matrix is not a column vector!";
    case ErrorKind::NOT_SQUARE_NOR_KET:
      return "Matrix is not square nor column vector!";
    case ErrorKind::INDEX_OUT_OF_BOUNDS: return "Index out of bounds!";
    case ErrorKind::IO_ERROR: return "Input/output error!";
  }
  return "Unknown error!";
}

cplx omega(idx D) {
  if (D == 0) throw Exception("qsim::omega()", ErrorKind::OUT_OF_RANGE);
  const double theta = 2.0 * pi / static_cast<double>(D);
  return {std::cos(theta), std::sin(theta)};
}

Dims::Dims(std::initializer_list<idx> dims) : Dims(std::vector<idx>(dims)) {}

Dims::Dims(std::vector<idx> dims) : dims_(std::move(dims)) {
  if (dims_.empty())
    throw Exception("qsim::Dims()", ErrorKind::DIMS_INVALID, "no subsystems");
  if (dims_.size() > maxn)
    throw Exception("qsim::Dims()", ErrorKind::DIMS_INVALID,
                    "more than maxn subsystems");
  for (idx d : dims_) {
    if (d < 2)
      throw Exception("qsim::Dims()", ErrorKind::DIMS_INVALID,
                      "dimension smaller than 2");
    if (total_ > std::numeric_limits<idx>::max() / d)
      throw Exception("qsim::Dims()", ErrorKind::DIMS_INVALID,
                      "total dimension overflows");
    total_ *= d;
  }
}

Dims Dims::uniform(idx n, idx d) { return Dims(std::vector<idx>(n, d)); }

idx multiidx_to_n(const std::vector<idx>& midx, const Dims& dims) {
  if (midx.size() != dims.size())
    throw Exception("qsim::multiidx_to_n()", ErrorKind::SUBSYS_MISMATCH_DIMS);
  idx n = 0;
  for (idx k = 0; k < midx.size(); ++k) {
    if (midx[k] >= dims[k])
      throw Exception("qsim::multiidx_to_n()", ErrorKind::OUT_OF_RANGE);
    n = n * dims[k] + midx[k];
  }
  return n;
}

std::vector<idx> n_to_multiidx(idx n, const Dims& dims) {
  if (n >= dims.total())
    throw Exception("qsim::n_to_multiidx()", ErrorKind::OUT_OF_RANGE);
  std::vector<idx> midx(dims.size());
  for (idx k = dims.size(); k-- > 0;) {
    midx[k] = n % dims[k];
    n /= dims[k];
  }
  return midx;
}

void validate_dims(const Dims& dims, idx total) {
  if (dims.total() != total)
    throw Exception("qsim::validate_dims()", ErrorKind::DIMS_MISMATCH_MATRIX);
}

}  // namespace qsim
