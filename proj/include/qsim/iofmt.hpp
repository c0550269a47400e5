#pragma once

#include <concepts>
#include <filesystem>
#include <iosfwd>
#include <ranges>
#include <sstream>
#include <string>
#include <string_view>

#include "qsim/constants.hpp"
#include "qsim/types.hpp"

namespace qsim {

inline constexpr idx default_precision = 4;

/// Fixed-point rendering with `precision` decimals and trailing zeros
/// removed; magnitudes below `chop` print as "0".
std::string format_real(double x, idx precision = default_precision,
                        double chop = qsim::chop);

/// a + bi rendering of one scalar. Components below `chop` are dropped; a
/// scalar with both components dropped prints "0".
std::string format_complex(cplx z, idx precision = default_precision,
                           double chop = qsim::chop);

/// Rows on separate lines, columns right-aligned and separated by two
/// spaces. An empty matrix renders as "[]".
std::string format_matrix(const cmat& A, idx precision = default_precision,
                          double chop = qsim::chop);

/// Joins the elements with `delimiter`. Floating-point elements use
/// format_real; everything else uses operator<<.
template <std::ranges::input_range R>
std::string format_sequence(const R& xs, std::string_view delimiter,
                            idx precision = default_precision) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    if (!first) os << delimiter;
    first = false;
    if constexpr (std::floating_point<std::ranges::range_value_t<R>>)
      os << format_real(static_cast<double>(x), precision);
    else
      os << x;
  }
  return os.str();
}

/// Binary record layout (all integers little-endian):
///   "QSIM"  version:u8=1  rows:u64  cols:u64
///   rows*cols entries in row-major order, each re:f64 im:f64
inline constexpr char qsim_magic[4] = {'Q', 'S', 'I', 'M'};
inline constexpr unsigned char qsim_version = 1;
inline constexpr std::size_t qsim_header_size = 4 + 1 + 8 + 8;

/// Writes the record. Throws ZERO_SIZE for an empty matrix and IO_ERROR
/// when the stream fails.
void save(const cmat& A, std::ostream& sink);
void save(const cmat& A, const std::filesystem::path& path);

/// Reads one record. Throws IO_ERROR on truncation, bad magic or an
/// unsupported version.
cmat load(std::istream& source);
cmat load(const std::filesystem::path& path);

}  // namespace qsim
