#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "patgen/eventlog.hpp"

namespace patgen {

using PlaceIndex = std::uint32_t;
using TransitionIndex = std::uint32_t;

struct Place {
  std::string id;
  std::string name;
};

struct Transition {
  std::string id;
  std::optional<Label> label;  ///< nullopt is the silent label tau
  std::vector<PlaceIndex> preset;
  std::vector<PlaceIndex> postset;

  bool silent() const { return !label.has_value(); }
};

/// Labelled place/transition net. Presets and postsets are kept sorted and
/// duplicate-free.
class PetriNet {
 public:
  PlaceIndex add_place(std::string id, std::string name = {});
  TransitionIndex add_transition(std::string id, std::optional<Label> label);
  void add_input_arc(PlaceIndex from, TransitionIndex to);
  void add_output_arc(TransitionIndex from, PlaceIndex to);

  const std::vector<Place>& places() const { return places_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const Place& place(PlaceIndex p) const { return places_.at(p); }
  const Transition& transition(TransitionIndex t) const { return transitions_.at(t); }

  /// Transitions consuming from / producing into a place.
  std::vector<TransitionIndex> place_postset(PlaceIndex p) const;
  std::vector<TransitionIndex> place_preset(PlaceIndex p) const;

  /// Sorted visible labels.
  std::vector<Label> alphabet() const;

  /// Transition carrying a visible label, if any.
  std::optional<TransitionIndex> find_label(std::string_view label) const;

 private:
  std::vector<Place> places_;
  std::vector<Transition> transitions_;
};

/// Safe nets only: a marking is the sorted set of marked places.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::vector<PlaceIndex> places);

  bool contains(PlaceIndex p) const;
  bool empty() const { return places_.empty(); }
  std::size_t size() const { return places_.size(); }
  const std::vector<PlaceIndex>& places() const { return places_; }

  friend bool operator==(const Marking&, const Marking&) = default;
  friend auto operator<=>(const Marking&, const Marking&) = default;

 private:
  std::vector<PlaceIndex> places_;
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept;
};

/// Workflow system net: initial marking {source}, single final marking {sink}.
struct SystemNet {
  PetriNet net;
  PlaceIndex source = 0;
  PlaceIndex sink = 0;

  Marking initial_marking() const { return Marking({source}); }
  Marking final_marking() const { return Marking({sink}); }
};

struct Violation {
  enum class Kind { Workflow, Connectivity, FreeChoice, UniqueLabel };
  Kind kind;
  std::string message;
};

std::string_view to_string(Violation::Kind kind);

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks the workflow, strong-connectivity, free-choice and unique-labelling
/// conditions. Safety is not decided here; it is enforced while exploring.
ValidationReport validate(const SystemNet& sn);

/// Transitions enabled at `m`, ascending by index.
std::vector<TransitionIndex> enabled(const Marking& m, const SystemNet& sn);

/// Fires `t`. Throws ModelError when `t` is disabled or when the successor
/// marking would put a second token on a place.
Marking fire(const Marking& m, TransitionIndex t, const SystemNet& sn);

/// Explicit reachability graph from the initial marking.
struct ReachabilityGraph {
  struct Edge {
    TransitionIndex transition;
    std::uint32_t target;
  };
  std::vector<Marking> markings;            ///< index 0 is the initial marking
  std::vector<std::vector<Edge>> outgoing;  ///< sorted by transition index
  std::optional<std::uint32_t> final_index;
};

/// Breadth-first exploration. Throws ModelError on unsafe markings and when
/// more than `max_markings` markings are reachable.
ReachabilityGraph explore(const SystemNet& sn, std::size_t max_markings = 1'000'000);

/// True when some firing sequence from the initial marking to the final
/// marking has exactly `labels` as its visible projection.
bool replays(const SystemNet& sn, std::span<const Label> labels);

/// PNML subset: places, transitions, arcs, name texts, initial markings and the
/// ProM "$invisible$" tool-specific flag.
SystemNet parse_pnml(std::string_view document);
SystemNet load_pnml(const std::filesystem::path& path);

/// Serializes a net to the same PNML subset parse_pnml reads.
std::string render_pnml(const SystemNet& sn);

/// Net that accepts every sequence over `alphabet`.
SystemNet make_flower_net(std::span<const Label> alphabet);

}  // namespace patgen
