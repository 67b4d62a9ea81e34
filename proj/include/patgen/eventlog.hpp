#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patgen {

/// Activity name. Real events never carry an empty label.
using Label = std::string;

/// Ordered sequence of activity labels. Positions in the public API are
/// 1-based, matching the way patterns and tandem repeats are reported.
using Trace = std::vector<Label>;

/// Renders a trace as `<A,B,C>`.
std::string to_string(std::span<const Label> trace);

/// Multiset of traces. Iteration order is lexicographic by label sequence,
/// which keeps every downstream phase reproducible.
class EventLog {
 public:
  using Entries = std::map<Trace, std::uint64_t>;

  EventLog() = default;

  /// Multiset union with a single trace: counts of equal traces add up.
  /// A zero count is a no-op.
  void add(const Trace& trace, std::uint64_t count = 1);

  /// Multiset union with another log.
  EventLog& operator+=(const EventLog& other);

  std::uint64_t count(const Trace& trace) const;
  std::vector<Trace> unique() const;

  /// Sum of all counts.
  std::uint64_t total() const;

  std::size_t distinct() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Entries& entries() const { return entries_; }

  friend bool operator==(const EventLog&, const EventLog&) = default;

 private:
  Entries entries_;
};

EventLog operator+(EventLog lhs, const EventLog& rhs);

/// Parses the line format `count;label1,label2,...`. Blank lines and lines
/// starting with '#' are skipped; `count;` alone is the empty trace.
EventLog parse_csv(std::string_view text);

/// Inverse of parse_csv. Throws ConfigError for labels that cannot be
/// written (empty, or containing ',', ';' or a line break).
std::string render_csv(const EventLog& log);

/// Reads the XES subset used by the measure: one trace per <trace>, each
/// event labelled by its string attribute "concept:name".
EventLog parse_xes(std::string_view document);

/// Loads a log from disk, choosing XES for `.xes` files and CSV otherwise.
EventLog load_log(const std::filesystem::path& path);

/// Reads a whole file; throws ConfigError when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace patgen
