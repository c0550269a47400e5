#include "qsim/timer.hpp"

#include <ostream>

namespace qsim {

std::ostream& operator<<(std::ostream& os, const Timer& t) {
  return os << t.elapsed_seconds();
}

}  // namespace qsim
