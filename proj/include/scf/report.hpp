#pragma once

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "scf/deadline.hpp"

namespace scf {

/// One named check: what was expected, what came out, and how long it took.
struct CheckResult {
  std::string name;
  std::string anchor;  // the claim this check stands for
  std::string expected;
  std::string computed;
  bool pass = false;
  double ms = 0;
};

/// An input taken on trust rather than computed.
struct Assumption {
  std::string statement;
  std::string anchor;
};

/// Append-only list of checks; the verdict is the conjunction.
class VerificationReport {
 public:
  std::uint32_t prime = 0;
  std::uint64_t seed = 0;
  std::vector<Assumption> assumptions;
  /// Set when the run stopped early (timeout); the checks so far are kept.
  std::string aborted;

  void append(CheckResult c) { checks_.push_back(std::move(c)); }
  void append(const std::vector<CheckResult>& cs) { checks_.insert(checks_.end(), cs.begin(), cs.end()); }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool verdict() const {
    for (const auto& c : checks_)
      if (!c.pass) return false;
    return aborted.empty() && !checks_.empty();
  }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

 private:
  std::vector<CheckResult> checks_;
};

/// Runs `compute`, compares its rendering with `expected` and times it; an
/// exception becomes a failed check carrying the message. Timeouts propagate.
inline CheckResult timed_check(std::string name, std::string anchor, std::string expected,
                               const std::function<std::string()>& compute) {
  CheckResult c{std::move(name), std::move(anchor), std::move(expected), {}, false, 0};
  auto t0 = std::chrono::steady_clock::now();
  try {
    c.computed = compute();
    c.pass = c.computed == c.expected;
  } catch (const TimeoutError&) {
    throw;
  } catch (const std::exception& e) {
    c.computed = std::string("error: ") + e.what();
  }
  c.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return c;
}

}  // namespace scf
