#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "patgen/eventlog.hpp"

namespace patgen {

using LabelPair = std::pair<Label, Label>;

/// Directly-follows counts plus the boolean relation derived from them.
struct DirectlyFollows {
  std::map<LabelPair, std::uint64_t> counts;
  std::set<LabelPair> relation;

  std::uint64_t count(const Label& x, const Label& y) const;
  bool follows(const Label& x, const Label& y) const { return relation.count({x, y}) != 0; }
};

/// Adjacent-pair counts, each distinct trace weighted by its log count.
DirectlyFollows directly_follows(const EventLog& log);

/// Keeps df(x,y) iff dfC(x,y) > eps * (sum_{z!=x} dfC(x,z) + sum_{z!=y} dfC(z,y)) / 2.
/// Counts are left untouched. Throws ConfigError unless 0 <= eps <= 1.
DirectlyFollows filter_df(const DirectlyFollows& stats, double epsilon);

/// Symmetric concurrency between labels, optionally overridden per trace by
/// concurrent 1-based position pairs.
class ConcurrencyRelation {
 public:
  using PositionPair = std::pair<std::size_t, std::size_t>;

  /// Adds {x,y}; a pair of equal labels is ignored.
  void add(const Label& x, const Label& y);
  void add_local(const Trace& trace, std::size_t i, std::size_t j);

  bool concurrent(const Label& x, const Label& y) const;

  /// Concurrency of positions i and j (1-based) of `trace`: listed locally
  /// for that trace, or concurrent by label.
  bool concurrent_at(const Trace& trace, std::size_t i, std::size_t j) const;

  /// Unordered pairs stored with first < second.
  const std::set<LabelPair>& pairs() const { return pairs_; }
  const std::map<Trace, std::set<PositionPair>>& local() const { return local_; }
  bool empty() const { return pairs_.empty() && local_.empty(); }

 private:
  std::set<LabelPair> pairs_;
  std::map<Trace, std::set<PositionPair>> local_;
};

/// x || y iff df(x,y) and df(y,x), for distinct labels.
ConcurrencyRelation alpha_oracle(const DirectlyFollows& stats);

/// alpha minus the pairs occurring as x,y,x or y,x,y anywhere in the log.
ConcurrencyRelation alpha_plus_oracle(const EventLog& log, const DirectlyFollows& stats);

struct ExplicitOracle {
  ConcurrencyRelation relation;
  std::vector<std::string> warnings;
};

/// Reads `{"global": [[x,y],...], "traces": [{"trace": [...], "pairs": [[i,j],...]}]}`.
/// Traces not present in `log` are skipped with a warning. Malformed JSON is a
/// ParseError; bad positions or pairs are ConfigErrors.
ExplicitOracle parse_explicit_oracle(std::string_view document, const EventLog& log);
ExplicitOracle load_explicit_oracle(const std::filesystem::path& path, const EventLog& log);

}  // namespace patgen
