#pragma once

#include <exception>
#include <string>
#include <string_view>

namespace qsim {

/// Library error. Carries exactly one kind and the name of the public
/// operation that reported it.
class Exception : public std::exception {
 public:
  enum class Type {
    ZERO_SIZE,
    DIMS_INVALID,
    DIMS_MISMATCH_MATRIX,
    SUBSYS_MISMATCH_DIMS,
    MATRIX_NOT_SQUARE,
    PERM_INVALID,
    OUT_OF_RANGE,
    NOT_KET,
    NOT_SQUARE_NOR_KET,
    INDEX_OUT_OF_BOUNDS,
    IO_ERROR,
  };

  Exception(std::string where, Type type, std::string_view detail = {});

  const char* what() const noexcept override { return msg_.c_str(); }
  Type type() const noexcept { return type_; }
  const std::string& where() const noexcept { return where_; }

 private:
  std::string where_;
  Type type_;
  std::string msg_;
};

using ErrorKind = Exception::Type;

/// Upper-case enumerator name, e.g. "ZERO_SIZE".
std::string_view kind_name(ErrorKind kind) noexcept;

/// Human-readable description of the error kind.
std::string_view kind_description(ErrorKind kind) noexcept;

}  // namespace qsim
