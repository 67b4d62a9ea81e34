#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patgen/align.hpp"
#include "patgen/concurrency.hpp"
#include "patgen/fraction.hpp"
#include "patgen/partial_order.hpp"
#include "patgen/tandem.hpp"

namespace patgen {

/// Distinct label sequences of all linear extensions of `po`, sorted.
/// Throws CapExceeded once more than `cap` distinct sequences exist.
std::vector<Trace> linearizations(const PartialOrder& po, std::size_t cap = 10'000,
                                  const Deadline& deadline = {});

/// Blocks of 1-based positions holding mutually entangled events. An event
/// comparable to every other event sits at the same position in every
/// linearization; the maximal runs of positions between such events are the
/// blocks (each has at least two events).
std::vector<std::vector<std::size_t>> concurrent_blocks(const PartialOrder& po);

struct RepetitivePattern {
  Trace trace;  ///< extended trace
  TandemRepeat repeat;
  std::vector<std::size_t> positions;  ///< first copy of the repeat type
  std::uint64_t count = 0;
  Fraction fulfilment;
};

/// Fraction of offsets of the repeat type matched in every repetition.
/// `ops` is the trace projection of an alignment of the extended trace.
Fraction repetitive_fulfilment(const TandemRepeat& repeat, std::span<const AlignmentStep> ops);

/// Patterns of every extended trace, scanning left to right and taking the
/// longest repeat at each position. `alignments` is indexed like
/// `extended.unique()`.
std::vector<RepetitivePattern> define_repetitive_patterns(const EventLog& extended,
                                                          std::span<const Alignment> alignments);

struct ConcurrentPatterns {
  PartialOrderClass order;
  std::vector<Trace> representatives;
  std::vector<std::vector<std::size_t>> patterns;
  std::optional<std::string> error;  ///< set when the linearization cap was hit
};

/// One entry per isomorphism class, ordered like unique_partial_orders.
std::vector<ConcurrentPatterns> representative_traces_and_patterns(
    const EventLog& log, const ConcurrencyRelation& oracle, std::size_t cap = 10'000,
    const Deadline& deadline = {});

/// Matched pattern positions over all alignments, as a fraction of
/// |positions| * |alignments|.
Fraction concurrent_fulfilment_partial(std::span<const std::size_t> positions,
                                       std::span<const Alignment> alignments);

/// Fraction of alignments in which every pattern position is matched.
Fraction concurrent_fulfilment_interleavings(std::span<const std::size_t> positions,
                                             std::span<const Alignment> alignments);

/// Number of matched positions (partial) or fully matched alignments
/// (interleavings), with the denominator, before reduction.
std::pair<std::uint64_t, std::uint64_t> partial_counts(std::span<const std::size_t> positions,
                                                       std::span<const Alignment> alignments);
std::pair<std::uint64_t, std::uint64_t> interleaving_counts(std::span<const std::size_t> positions,
                                                            std::span<const Alignment> alignments);

}  // namespace patgen
