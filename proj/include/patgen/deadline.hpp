#pragma once

#include <chrono>
#include <optional>
#include <string_view>

#include "patgen/error.hpp"

namespace patgen {

/// Cooperative wall-clock budget. A default-constructed deadline never expires.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(std::chrono::milliseconds budget) : end_(Clock::now() + budget) {}

  static Deadline after_seconds(double seconds) {
    return Deadline(std::chrono::milliseconds(static_cast<long long>(seconds * 1000.0)));
  }

  bool expired() const { return end_ && Clock::now() >= *end_; }

  void check(std::string_view phase) const {
    if (expired()) throw TimeoutError(std::string(phase));
  }

 private:
  std::optional<Clock::time_point> end_;
};

}  // namespace patgen
