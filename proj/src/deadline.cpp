#include "scf/deadline.hpp"

namespace scf {

namespace {
thread_local std::chrono::steady_clock::time_point g_deadline = std::chrono::steady_clock::time_point::max();
thread_local unsigned g_poll = 0;
}  // namespace

DeadlineScope::DeadlineScope(std::chrono::steady_clock::time_point until) : previous_(g_deadline) {
  if (until < g_deadline) g_deadline = until;
}

DeadlineScope::~DeadlineScope() { g_deadline = previous_; }

void check_deadline() {
  if (g_deadline == std::chrono::steady_clock::time_point::max()) return;
  if ((++g_poll & 63u) != 0) return;
  if (std::chrono::steady_clock::now() > g_deadline) throw TimeoutError("time budget exhausted");
}

}  // namespace scf
