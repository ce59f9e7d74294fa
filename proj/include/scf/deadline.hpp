#pragma once

#include <chrono>
#include <stdexcept>

namespace scf {

class TimeoutError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Per-thread wall-clock budget polled by long-running engine loops.
class DeadlineScope {
 public:
  explicit DeadlineScope(std::chrono::steady_clock::time_point until);
  ~DeadlineScope();
  DeadlineScope(const DeadlineScope&) = delete;
  DeadlineScope& operator=(const DeadlineScope&) = delete;

 private:
  std::chrono::steady_clock::time_point previous_;
};

/// Throws TimeoutError once the innermost active deadline has passed.
void check_deadline();

}  // namespace scf
