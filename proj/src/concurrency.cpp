#include "patgen/concurrency.hpp"

#include <json.hpp>

#include "patgen/error.hpp"

namespace patgen {
namespace {

LabelPair ordered(const Label& x, const Label& y) { return x < y ? LabelPair{x, y} : LabelPair{y, x}; }

}  // namespace

std::uint64_t DirectlyFollows::count(const Label& x, const Label& y) const {
  const auto it = counts.find({x, y});
  return it == counts.end() ? 0 : it->second;
}

DirectlyFollows directly_follows(const EventLog& log) {
  DirectlyFollows df;
  for (const auto& [trace, count] : log.entries()) {
    for (std::size_t i = 0; i + 1 < trace.size(); ++i) df.counts[{trace[i], trace[i + 1]}] += count;
  }
  for (const auto& [pair, count] : df.counts) {
    if (count > 0) df.relation.insert(pair);
  }
  return df;
}

DirectlyFollows filter_df(const DirectlyFollows& stats, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ConfigError("df filter must lie in [0,1], got " + std::to_string(epsilon));
  }
  std::map<Label, std::uint64_t> out_sum;  // sum_{z != x} dfC(x,z)
  std::map<Label, std::uint64_t> in_sum;   // sum_{z != y} dfC(z,y)
  for (const auto& [pair, count] : stats.counts) {
    if (pair.first == pair.second) continue;
    out_sum[pair.first] += count;
    in_sum[pair.second] += count;
  }
  DirectlyFollows out;
  out.counts = stats.counts;
  for (const auto& pair : stats.relation) {
    const auto count = static_cast<long double>(stats.count(pair.first, pair.second));
    const auto spread = static_cast<long double>(out_sum[pair.first] + in_sum[pair.second]);
    if (2.0L * count > static_cast<long double>(epsilon) * spread) out.relation.insert(pair);
  }
  return out;
}

void ConcurrencyRelation::add(const Label& x, const Label& y) {
  if (x != y) pairs_.insert(ordered(x, y));
}

void ConcurrencyRelation::add_local(const Trace& trace, std::size_t i, std::size_t j) {
  if (i == j || i == 0 || j == 0 || i > trace.size() || j > trace.size()) {
    throw ConfigError("invalid concurrent position pair (" + std::to_string(i) + "," +
                      std::to_string(j) + ") for trace " + to_string(trace));
  }
  local_[trace].insert({std::min(i, j), std::max(i, j)});
}

bool ConcurrencyRelation::concurrent(const Label& x, const Label& y) const {
  return x != y && pairs_.count(ordered(x, y)) != 0;
}

bool ConcurrencyRelation::concurrent_at(const Trace& trace, std::size_t i, std::size_t j) const {
  if (i == j) return false;
  if (const auto it = local_.find(trace); it != local_.end()) {
    if (it->second.count({std::min(i, j), std::max(i, j)})) return true;
  }
  return concurrent(trace.at(i - 1), trace.at(j - 1));
}

ConcurrencyRelation alpha_oracle(const DirectlyFollows& stats) {
  ConcurrencyRelation rel;
  for (const auto& [x, y] : stats.relation) {
    if (x != y && stats.follows(y, x)) rel.add(x, y);
  }
  return rel;
}

ConcurrencyRelation alpha_plus_oracle(const EventLog& log, const DirectlyFollows& stats) {
  std::set<LabelPair> short_loops;
  for (const auto& [trace, count] : log.entries()) {
    for (std::size_t i = 0; i + 2 < trace.size(); ++i) {
      if (trace[i] == trace[i + 2] && trace[i] != trace[i + 1]) {
        short_loops.insert(ordered(trace[i], trace[i + 1]));
      }
    }
  }
  const auto alpha = alpha_oracle(stats);
  ConcurrencyRelation rel;
  for (const auto& pair : alpha.pairs()) {
    if (!short_loops.count(pair)) rel.add(pair.first, pair.second);
  }
  return rel;
}

ExplicitOracle parse_explicit_oracle(std::string_view document, const EventLog& log) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("oracle file: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("oracle file: top level must be an object");

  ExplicitOracle out;
  try {
    if (const auto it = doc.find("global"); it != doc.end()) {
      for (const auto& pair : *it) {
        if (pair.size() != 2 || pair.at(0) == pair.at(1)) {
          throw ConfigError("oracle file: invalid global pair " + pair.dump());
        }
        out.relation.add(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
      }
    }
    if (const auto it = doc.find("traces"); it != doc.end()) {
      for (const auto& entry : *it) {
        const auto trace = entry.at("trace").get<Trace>();
        if (log.count(trace) == 0) {
          out.warnings.push_back("oracle trace " + to_string(trace) + " does not occur in the log; ignored");
          continue;
        }
        for (const auto& pair : entry.value("pairs", nlohmann::json::array())) {
          if (pair.size() != 2) throw ConfigError("oracle file: invalid pair " + pair.dump());
          out.relation.add_local(trace, pair.at(0).get<std::size_t>(), pair.at(1).get<std::size_t>());
        }
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("oracle file: ") + e.what());
  }
  return out;
}

ExplicitOracle load_explicit_oracle(const std::filesystem::path& path, const EventLog& log) {
  return parse_explicit_oracle(read_file(path), log);
}

}  // namespace patgen
