#include "qsim/iofmt.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <vector>

#include "qsim/exception.hpp"

namespace qsim {

std::string format_real(double x, idx precision, double chop) {
  if (std::abs(x) < chop) return "0";
  std::ostringstream os;
  os << std::fixed << std::setprecision(static_cast<int>(precision)) << x;
  std::string s = os.str();
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(cplx z, idx precision, double chop) {
  const std::string re = format_real(z.real(), precision, chop);
  const std::string im = format_real(z.imag(), precision, chop);
  if (im == "0") return re;
  if (re == "0") return im + "i";
  if (im.front() == '-') return re + " - " + im.substr(1) + "i";
  return re + " + " + im + "i";
}

std::string format_matrix(const cmat& A, idx precision, double chop) {
  if (A.size() == 0) return "[]";
  std::vector<std::vector<std::string>> cells(static_cast<idx>(A.rows()));
  std::vector<std::size_t> width(static_cast<idx>(A.cols()), 0);
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      auto& cell = cells[static_cast<idx>(i)].emplace_back(
          format_complex(A(i, j), precision, chop));
      width[static_cast<idx>(j)] =
          std::max(width[static_cast<idx>(j)], cell.size());
    }
  std::ostringstream os;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) os << '\n';
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      if (j > 0) os << "  ";
      os << std::setw(static_cast<int>(width[j])) << cells[i][j];
    }
  }
  return os.str();
}

namespace {

static_assert(std::numeric_limits<double>::is_iec559);

void put_u64(std::ostream& os, std::uint64_t v) {
  std::array<char, 8> bytes;
  for (int k = 0; k < 8; ++k) bytes[k] = static_cast<char>((v >> (8 * k)) & 0xffu);
  os.write(bytes.data(), bytes.size());
}

std::uint64_t get_u64(std::istream& is) {
  std::array<unsigned char, 8> bytes;
  if (!is.read(reinterpret_cast<char*>(bytes.data()), bytes.size()))
    throw Exception("qsim::load()", ErrorKind::IO_ERROR, "truncated record");
  std::uint64_t v = 0;
  for (int k = 7; k >= 0; --k) v = (v << 8) | bytes[k];
  return v;
}

void put_f64(std::ostream& os, double x) {
  put_u64(os, std::bit_cast<std::uint64_t>(x));
}

double get_f64(std::istream& is) { return std::bit_cast<double>(get_u64(is)); }

}  // namespace

void save(const cmat& A, std::ostream& sink) {
  if (A.size() == 0) throw Exception("qsim::save()", ErrorKind::ZERO_SIZE);
  sink.write(qsim_magic, sizeof qsim_magic);
  sink.put(static_cast<char>(qsim_version));
  put_u64(sink, static_cast<std::uint64_t>(A.rows()));
  put_u64(sink, static_cast<std::uint64_t>(A.cols()));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      put_f64(sink, A(i, j).real());
      put_f64(sink, A(i, j).imag());
    }
  if (!sink) throw Exception("qsim::save()", ErrorKind::IO_ERROR);
}

void save(const cmat& A, const std::filesystem::path& path) {
  if (A.size() == 0) throw Exception("qsim::save()", ErrorKind::ZERO_SIZE);
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file)
    throw Exception("qsim::save()", ErrorKind::IO_ERROR,
                    "cannot open " + path.string());
  save(A, file);
  file.flush();
  if (!file) throw Exception("qsim::save()", ErrorKind::IO_ERROR);
}

cmat load(std::istream& source) {
  char magic[4];
  if (!source.read(magic, sizeof magic))
    throw Exception("qsim::load()", ErrorKind::IO_ERROR, "truncated record");
  if (std::memcmp(magic, qsim_magic, sizeof magic) != 0)
    throw Exception("qsim::load()", ErrorKind::IO_ERROR, "bad magic");
  const int version = source.get();
  if (version == std::char_traits<char>::eof())
    throw Exception("qsim::load()", ErrorKind::IO_ERROR, "truncated record");
  if (version != qsim_version)
    throw Exception("qsim::load()", ErrorKind::IO_ERROR, "unsupported version");
  const std::uint64_t rows = get_u64(source);
  const std::uint64_t cols = get_u64(source);
  constexpr auto limit =
      static_cast<std::uint64_t>(std::numeric_limits<Eigen::Index>::max());
  if (rows == 0 || cols == 0 || rows > limit / cols)
    throw Exception("qsim::load()", ErrorKind::IO_ERROR, "bad shape");
  // Reject a shape the stream cannot back before allocating for it.
  const auto here = source.tellg();
  if (here != std::istream::pos_type(-1)) {
    source.seekg(0, std::ios::end);
    const auto remaining = static_cast<std::uint64_t>(source.tellg() - here);
    source.seekg(here);
    if (rows * cols > remaining / 16)
      throw Exception("qsim::load()", ErrorKind::IO_ERROR, "truncated record");
  }
  cmat A(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      const double re = get_f64(source);
      const double im = get_f64(source);
      A(i, j) = {re, im};
    }
  return A;
}

cmat load(const std::filesystem::path& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw Exception("qsim::load()", ErrorKind::IO_ERROR,
                    "cannot open " + path.string());
  return load(file);
}

}  // namespace qsim
