#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "patgen/eventlog.hpp"

namespace patgen {

/// `repeat_type` occurs `repetitions` times back to back from 1-based
/// position `start`.
struct TandemRepeat {
  std::size_t start = 1;
  Trace repeat_type;
  std::size_t repetitions = 2;

  std::size_t length() const { return repeat_type.size() * repetitions; }

  friend bool operator==(const TandemRepeat&, const TandemRepeat&) = default;
};

/// Maximal, primitive tandem repeats without right shifts, ordered by start,
/// then covered length descending, then repeat type.
std::vector<TandemRepeat> detect_tandem_repeats(std::span<const Label> trace);

/// Longest repeat starting at `start` (ties: smallest repeat type), or null.
const TandemRepeat* longest_at(std::span<const TandemRepeat> repeats, std::size_t start);

/// Keeps two copies of the longest repeat at each position, scanning left to right.
Trace reduce_trace(std::span<const Label> trace);

/// Reduced versions of the traces that contain a tandem repeat; counts of
/// traces that reduce to the same sequence add up.
EventLog reduce_log(const EventLog& log);

/// Repeats each tandem repeat of a reduced trace as many times as the reduced
/// trace is long.
Trace extend_trace(std::span<const Label> reduced);

EventLog extend_log(const EventLog& reduced);

}  // namespace patgen
