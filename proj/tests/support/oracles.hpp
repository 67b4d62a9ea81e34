#pragma once

// Brute-force reference implementations and generators for tests.

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "patgen/align.hpp"
#include "patgen/eventlog.hpp"
#include "patgen/partial_order.hpp"
#include "patgen/petri.hpp"
#include "patgen/tandem.hpp"

namespace patgen {

/// Readable gtest output for alignment steps, e.g. MT(X).
void PrintTo(const AlignmentStep& step, std::ostream* out);

}  // namespace patgen

namespace patgen::testing {

std::filesystem::path data_path(const std::string& name);

EventLog running_example_log();
SystemNet running_example_net();  ///< tests/data/running_example.pnml
SystemNet running_example_net_in_code();
ConcurrencyRelation running_example_local_oracle(const EventLog& log);

Trace trace_of(const std::string& labels);  ///< "XAB" -> <X,A,B>, one char per label

/// Every (s, alpha, k) checked literally against the occurrence, maximality,
/// primitivity and right-shift conditions.
std::vector<TandemRepeat> brute_force_tandem_repeats(const Trace& t);

/// Label sequences of all event permutations that respect the order.
std::vector<Trace> brute_force_linearizations(const PartialOrder& po);
std::uint64_t brute_force_linear_extension_count(const PartialOrder& po);

/// Label-preserving bijection of events that maps the order onto the order.
bool brute_force_isomorphic(const PartialOrder& a, const PartialOrder& b);

/// Random labelled DAG over `events` inner events.
PartialOrder random_partial_order(std::mt19937& rng, std::size_t events, const std::vector<Label>& labels,
                                  double arc_probability);

/// Random block-structured net: sequence, exclusive choice, parallel, loop
/// and silent leaves, uniquely labelled A, B, C, ...; safe, sound and free-choice.
SystemNet random_process_net(std::mt19937& rng, std::size_t max_transitions);

/// Random trace over `alphabet`.
Trace random_trace(std::mt19937& rng, const std::vector<Label>& alphabet, std::size_t max_length);

/// Random visible run of the net, up to `max_steps` transitions per attempt.
Trace random_run(std::mt19937& rng, const SystemNet& sn, std::size_t max_steps);

}  // namespace patgen::testing
