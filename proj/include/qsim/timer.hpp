#pragma once

#include <chrono>
#include <iosfwd>

namespace qsim {

/// Stopwatch on the monotonic clock. Construction starts it; toc() records a
/// snapshot that elapsed_seconds() reports until the next toc() or tic().
class Timer {
 public:
  using clock = std::chrono::steady_clock;

  Timer() noexcept { tic(); }

  void tic() noexcept { start_ = end_ = clock::now(); }

  const Timer& toc() noexcept {
    end_ = clock::now();
    return *this;
  }

  double elapsed_seconds() const noexcept {
    return std::chrono::duration<double>(end_ - start_).count();
  }

  clock::duration elapsed() const noexcept { return end_ - start_; }

 private:
  clock::time_point start_;
  clock::time_point end_;
};

/// Writes elapsed_seconds() using the stream's current formatting.
std::ostream& operator<<(std::ostream& os, const Timer& t);

}  // namespace qsim
