#include <doctest.h>

#include <iomanip>
#include <sstream>
#include <thread>

#include "qsim/timer.hpp"

using namespace qsim;
using namespace std::chrono_literals;

TEST_CASE("fresh timer is near zero") {
  Timer t;
  CHECK(t.elapsed_seconds() < 0.1);
  CHECK(t.toc().elapsed_seconds() >= 0.);
  CHECK(t.elapsed_seconds() < 0.1);
}

TEST_CASE("toc snapshots the elapsed time") {
  Timer t;
  std::this_thread::sleep_for(100ms);
  t.toc();
  const double first = t.elapsed_seconds();
  CHECK(first >= 0.1);
  std::this_thread::sleep_for(20ms);
  CHECK(t.elapsed_seconds() == first);
  CHECK(t.toc().elapsed_seconds() >= first);
}

TEST_CASE("tic restarts") {
  Timer t;
  std::this_thread::sleep_for(50ms);
  t.toc();
  t.tic();
  CHECK(t.elapsed_seconds() == 0.);
  CHECK(t.toc().elapsed_seconds() < 0.05);
}

TEST_CASE("streams with the current precision") {
  Timer t;
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << t.toc();
  CHECK(os.str().size() == 5);  // "0.000" or similar
  CHECK(os.str()[1] == '.');
  CHECK(std::is_same_v<decltype(t.toc()), const Timer&>);
}
