#include "patgen/align.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <tuple>

#include "patgen/error.hpp"

namespace patgen {
namespace {

// Step priority among states of equal f and g.
enum StepKind : std::uint8_t { kMatch = 0, kSilent = 1, kModel = 2, kLog = 3, kStart = 4 };

struct QueueEntry {
  std::uint64_t f;
  std::uint64_t g;
  StepKind kind;
  std::uint32_t transition;
  std::size_t pos;
  std::uint64_t seq;
  std::size_t state;
  std::size_t parent;

  // Ordered by f, g descending, step kind, transition index, trace position.
  auto key() const { return std::tuple(f, ~g, kind, transition, pos, seq); }
  friend bool operator>(const QueueEntry& a, const QueueEntry& b) { return a.key() > b.key(); }
};

}  // namespace

std::string_view to_string(Move move) {
  switch (move) {
    case Move::Match: return "MT";
    case Move::LogOnly: return "LH";
    case Move::ModelOnly: return "RH";
  }
  return "?";
}

std::uint64_t cost(const Alignment& a) {
  return static_cast<std::uint64_t>(std::count_if(
      a.steps.begin(), a.steps.end(), [](const AlignmentStep& s) { return s.op != Move::Match; }));
}

std::vector<AlignmentStep> trace_projection(const Alignment& a) {
  std::vector<AlignmentStep> out;
  for (const auto& s : a.steps) {
    if (s.op != Move::ModelOnly) out.push_back(s);
  }
  return out;
}

std::vector<AlignmentStep> model_projection(const Alignment& a) {
  std::vector<AlignmentStep> out;
  for (const auto& s : a.steps) {
    if (s.op != Move::LogOnly) out.push_back(s);
  }
  return out;
}

Aligner::Aligner(const SystemNet& sn, Options options)
    : sn_(&sn), options_(options), graph_(explore(sn, options.max_markings)) {}

Alignment Aligner::align(const Trace& trace, const Deadline& deadline) const {
  if (!graph_.final_index) throw AlignmentError("the final marking is not reachable in the model");
  deadline.check("alignment");
  const std::size_t n = trace.size();
  const std::size_t width = n + 1;
  const std::size_t markings = graph_.markings.size();
  if (markings > options_.max_states / width) {
    throw AlignmentError("alignment of " + to_string(trace) + " exceeds the search budget of " +
                         std::to_string(options_.max_states) + " states");
  }
  const auto& net = sn_->net;

  // h counts the remaining log events no transition can match.
  const auto alphabet = net.alphabet();
  std::vector<std::uint64_t> h(width, 0);
  for (std::size_t pos = n; pos-- > 0;) {
    h[pos] = h[pos + 1] + (std::binary_search(alphabet.begin(), alphabet.end(), trace[pos]) ? 0 : 1);
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> parent(markings * width, kNone);
  std::vector<StepKind> via(markings * width, kStart);
  std::vector<std::uint32_t> via_transition(markings * width, 0);
  std::vector<char> closed(markings * width, 0);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, std::greater<>> queue;
  std::uint64_t seq = 0;
  const auto push = [&](std::size_t m, std::size_t pos, std::uint64_t g, StepKind kind,
                        std::uint32_t transition, std::size_t from) {
    const std::size_t s = m * width + pos;
    if (closed[s]) return;
    queue.push({g + h[pos], g, kind, transition, pos, seq++, s, from});
  };

  const std::size_t goal = std::size_t{*graph_.final_index} * width + n;
  push(0, 0, 0, kStart, 0, kNone);
  std::optional<std::uint64_t> total;
  std::size_t pops = 0;
  while (!queue.empty()) {
    const auto entry = queue.top();
    queue.pop();
    if (closed[entry.state]) continue;
    closed[entry.state] = 1;
    parent[entry.state] = entry.parent;
    via[entry.state] = entry.kind;
    via_transition[entry.state] = entry.transition;
    if (entry.state == goal) {
      total = entry.g;
      break;
    }
    if ((++pops & 0xfff) == 0) deadline.check("alignment");

    const std::size_t m = entry.state / width;
    const std::size_t pos = entry.state % width;
    for (const auto& e : graph_.outgoing[m]) {
      const auto& label = net.transition(e.transition).label;
      if (!label) {
        push(e.target, pos, entry.g, kSilent, e.transition, entry.state);
        continue;
      }
      if (pos < n && *label == trace[pos]) {
        push(e.target, pos + 1, entry.g, kMatch, e.transition, entry.state);
      }
      push(e.target, pos, entry.g + 1, kModel, e.transition, entry.state);
    }
    if (pos < n) {
      push(m, pos + 1, entry.g + 1, kLog, std::numeric_limits<std::uint32_t>::max(), entry.state);
    }
  }
  if (!total) throw AlignmentError("no complete model run exists for " + to_string(trace));

  Alignment out;
  out.cost = *total;
  for (std::size_t s = goal; parent[s] != kNone; s = parent[s]) {
    switch (via[s]) {
      case kMatch: out.steps.push_back({Move::Match, trace[s % width - 1]}); break;
      case kLog: out.steps.push_back({Move::LogOnly, trace[s % width - 1]}); break;
      case kModel: out.steps.push_back({Move::ModelOnly, *net.transition(via_transition[s]).label}); break;
      default: break;
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

Alignment align(const Trace& trace, const SystemNet& sn) { return Aligner(sn).align(trace); }

namespace {

// Edit-distance row of the trace against the visible run so far: row[j] is
// the cheapest alignment of the run with trace[0, j).
using Row = std::vector<std::uint32_t>;

Row advance(const Row& row, const Trace& trace, const Label& label) {
  Row next(row.size());
  next[0] = row[0] + 1;
  for (std::size_t j = 1; j < row.size(); ++j) {
    next[j] = std::min(row[j] + 1, next[j - 1] + 1);
    if (trace[j - 1] == label) next[j] = std::min(next[j], row[j - 1]);
  }
  return next;
}

Alignment edit_alignment(const Trace& trace, const Trace& run) {
  const std::size_t n = trace.size();
  const std::size_t r = run.size();
  std::vector<std::vector<std::uint32_t>> d(r + 1, std::vector<std::uint32_t>(n + 1));
  for (std::size_t j = 0; j <= n; ++j) d[0][j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= r; ++i) {
    d[i][0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      d[i][j] = std::min(d[i - 1][j], d[i][j - 1]) + 1;
      if (run[i - 1] == trace[j - 1]) d[i][j] = std::min(d[i][j], d[i - 1][j - 1]);
    }
  }
  Alignment out;
  out.cost = d[r][n];
  std::size_t i = r;
  std::size_t j = n;
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && run[i - 1] == trace[j - 1] && d[i][j] == d[i - 1][j - 1]) {
      out.steps.push_back({Move::Match, run[--i]});
      --j;
    } else if (j > 0 && d[i][j] == d[i][j - 1] + 1) {
      out.steps.push_back({Move::LogOnly, trace[--j]});
    } else {
      out.steps.push_back({Move::ModelOnly, run[--i]});
    }
  }
  std::reverse(out.steps.begin(), out.steps.end());
  return out;
}

}  // namespace

Alignment brute_force_align(const Trace& trace, const SystemNet& sn, std::size_t bound) {
  const auto graph = explore(sn);
  if (!graph.final_index) throw AlignmentError("the final marking is not reachable in the model");

  std::optional<std::uint32_t> best;
  Trace best_run;
  Trace run;
  std::map<std::pair<std::uint32_t, Row>, std::size_t> seen;  // -> smallest depth visited

  const auto dfs = [&](auto&& self, std::uint32_t m, const Row& row) -> void {
    const auto low = *std::min_element(row.begin(), row.end());
    if (best && low >= *best) return;
    const auto [it, inserted] = seen.emplace(std::make_pair(m, row), run.size());
    if (!inserted) {
      if (it->second <= run.size()) return;
      it->second = run.size();
    }
    if (m == *graph.final_index && (!best || row.back() < *best)) {
      best = row.back();
      best_run = run;
    }
    for (const auto& e : graph.outgoing[m]) {
      const auto& label = sn.net.transition(e.transition).label;
      if (!label) {
        self(self, e.target, row);
      } else if (run.size() < bound) {
        run.push_back(*label);
        self(self, e.target, advance(row, trace, *label));
        run.pop_back();
      }
    }
  };
  Row start(trace.size() + 1);
  for (std::size_t j = 0; j < start.size(); ++j) start[j] = static_cast<std::uint32_t>(j);
  dfs(dfs, 0, start);
  if (!best) {
    throw AlignmentError("no complete model run with at most " + std::to_string(bound) +
                         " visible transitions");
  }
  return edit_alignment(trace, best_run);
}

bool is_proper(const Alignment& a, const Trace& trace, const SystemNet& sn) {
  Trace logged;
  for (const auto& s : trace_projection(a)) logged.push_back(s.label);
  if (logged != trace) return false;
  Trace modelled;
  for (const auto& s : model_projection(a)) modelled.push_back(s.label);
  return replays(sn, modelled);
}

}  // namespace patgen
