#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "patgen/deadline.hpp"
#include "patgen/eventlog.hpp"
#include "patgen/petri.hpp"

namespace patgen {

/// Match (MT), log-only (LH) and model-only (RH) moves.
enum class Move { Match, LogOnly, ModelOnly };

std::string_view to_string(Move move);

struct AlignmentStep {
  Move op;
  Label label;

  friend bool operator==(const AlignmentStep&, const AlignmentStep&) = default;
};

/// Silent model moves are never listed; they cost nothing.
struct Alignment {
  std::vector<AlignmentStep> steps;
  std::uint64_t cost = 0;

  friend bool operator==(const Alignment&, const Alignment&) = default;
};

/// Number of LH and RH steps.
std::uint64_t cost(const Alignment& a);

/// Steps that consume a log event (op != RH); as long as the trace.
std::vector<AlignmentStep> trace_projection(const Alignment& a);

/// Steps that fire a visible transition (op != LH).
std::vector<AlignmentStep> model_projection(const Alignment& a);

/// Optimal alignments against one net. The reachability graph is built once;
/// align() is const and may be called from several threads.
class Aligner {
 public:
  struct Options {
    std::size_t max_markings = 1'000'000;
    std::size_t max_states = 50'000'000;  ///< markings x (trace length + 1)
  };

  explicit Aligner(const SystemNet& sn) : Aligner(sn, Options{}) {}
  Aligner(const SystemNet& sn, Options options);

  /// Minimum-cost proper alignment by A* over (marking, trace position).
  /// The heuristic counts remaining events whose label no transition carries.
  /// Queue ties: g descending, then the step that reached the state (match,
  /// silent, model, log), transition index, trace position, insertion order.
  /// Throws AlignmentError when the final marking cannot be reached or the
  /// search space exceeds max_states, TimeoutError("alignment") when the
  /// deadline passes.
  Alignment align(const Trace& trace, const Deadline& deadline = {}) const;

  const ReachabilityGraph& graph() const { return graph_; }

 private:
  const SystemNet* sn_;
  Options options_;
  ReachabilityGraph graph_;
};

Alignment align(const Trace& trace, const SystemNet& sn);

/// Enumerates model runs with at most `bound` visible transitions and edits
/// the trace against each by dynamic programming. Only the cost is meant to
/// be compared with align(); the steps are one optimal alignment.
/// Throws AlignmentError when no complete run fits in the bound.
Alignment brute_force_align(const Trace& trace, const SystemNet& sn, std::size_t bound);

/// The trace projection reproduces `trace` and the model projection is the
/// visible part of a complete firing sequence.
bool is_proper(const Alignment& a, const Trace& trace, const SystemNet& sn);

}  // namespace patgen
