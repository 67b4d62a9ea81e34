#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "patgen/concurrency.hpp"
#include "patgen/eventlog.hpp"

namespace patgen {

using EventIndex = std::uint32_t;

/// Labelled partial order over events 0..n+1, where 0 is the initial sentinel
/// and n+1 the final one (both unlabelled). Events 1..n correspond to trace
/// positions.
class PartialOrder {
 public:
  using Arc = std::pair<EventIndex, EventIndex>;

  /// `labels` are the inner events; `arcs` relate inner events (1-based) and
  /// are closed transitively. Sentinels are added around everything. Throws
  /// Error when the arcs contain a cycle.
  PartialOrder(const Trace& labels, const std::vector<Arc>& arcs);

  std::size_t size() const { return labels_.size(); }
  std::size_t inner_size() const { return labels_.size() - 2; }
  EventIndex initial() const { return 0; }
  EventIndex final() const { return static_cast<EventIndex>(labels_.size() - 1); }

  const std::optional<Label>& label(EventIndex e) const { return labels_.at(e); }
  const std::vector<std::optional<Label>>& labels() const { return labels_; }

  /// Reflexive order.
  bool leq(EventIndex a, EventIndex b) const { return order_[a * size() + b] != 0; }
  bool comparable(EventIndex a, EventIndex b) const { return leq(a, b) || leq(b, a); }

  /// Transitive reduction.
  const std::vector<EventIndex>& successors(EventIndex e) const { return succ_.at(e); }
  const std::vector<EventIndex>& predecessors(EventIndex e) const { return pred_.at(e); }
  std::vector<Arc> reduced_arcs() const;

 private:
  std::vector<std::optional<Label>> labels_;
  std::vector<char> order_;
  std::vector<std::vector<EventIndex>> succ_;
  std::vector<std::vector<EventIndex>> pred_;
};

/// Events ordered by trace position unless the oracle deems them concurrent.
PartialOrder to_partial_order(const Trace& trace, const ConcurrencyRelation& oracle);

/// Isomorphism-invariant encoding: equal iff the partial orders are
/// isomorphic by a label-preserving bijection.
struct CanonicalForm {
  std::vector<std::optional<Label>> labels;
  std::vector<PartialOrder::Arc> arcs;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const PartialOrder& po);

struct PartialOrderClass {
  PartialOrder representative;  ///< built from the first trace
  std::vector<Trace> traces;    ///< lexicographic
  std::uint64_t count = 0;
};

/// Groups the log's traces by isomorphism class of their partial orders.
/// Classes are ordered by their first trace.
std::vector<PartialOrderClass> unique_partial_orders(const EventLog& log,
                                                     const ConcurrencyRelation& oracle);

}  // namespace patgen
