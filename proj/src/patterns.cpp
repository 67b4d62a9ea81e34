#include "patgen/patterns.hpp"

#include <algorithm>
#include <set>

#include "patgen/error.hpp"

namespace patgen {

std::vector<Trace> linearizations(const PartialOrder& po, std::size_t cap, const Deadline& deadline) {
  const std::size_t n = po.inner_size();
  std::set<Trace> found;
  std::vector<std::size_t> missing(po.size(), 0);  // unplaced reduced predecessors
  for (EventIndex e = 1; e <= n; ++e) {
    for (auto p : po.predecessors(e)) {
      if (p != po.initial()) ++missing[e];
    }
  }
  std::vector<char> placed(po.size(), 0);
  Trace current;
  std::size_t steps = 0;

  const auto dfs = [&](auto&& self) -> void {
    if ((++steps & 0x3ff) == 0) deadline.check("linearization");
    if (current.size() == n) {
      found.insert(current);
      if (found.size() > cap) {
        throw CapExceeded("more than " + std::to_string(cap) + " linearizations", cap);
      }
      return;
    }
    for (EventIndex e = 1; e <= n; ++e) {
      if (placed[e] || missing[e] != 0) continue;
      placed[e] = 1;
      current.push_back(*po.label(e));
      for (auto s : po.successors(e)) --missing[s];
      self(self);
      for (auto s : po.successors(e)) ++missing[s];
      current.pop_back();
      placed[e] = 0;
    }
  };
  dfs(dfs);
  return {found.begin(), found.end()};
}

std::vector<std::vector<std::size_t>> concurrent_blocks(const PartialOrder& po) {
  const std::size_t n = po.inner_size();
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::size_t> run;
  // Events comparable to all others occupy a fixed position: the number of
  // events below them.
  std::vector<std::size_t> fixed;
  for (EventIndex e = 1; e <= n; ++e) {
    bool cut = true;
    for (EventIndex o = 1; o <= n && cut; ++o) cut = po.comparable(e, o);
    if (!cut) continue;
    std::size_t below = 0;
    for (EventIndex o = 1; o <= n; ++o) below += (o != e && po.leq(o, e)) ? 1 : 0;
    fixed.push_back(below + 1);
  }
  std::sort(fixed.begin(), fixed.end());
  std::size_t previous = 0;
  fixed.push_back(n + 1);
  for (auto position : fixed) {
    if (position - previous > 2) {
      std::vector<std::size_t> block;
      for (auto p = previous + 1; p < position; ++p) block.push_back(p);
      blocks.push_back(std::move(block));
    }
    previous = position;
  }
  return blocks;
}

Fraction repetitive_fulfilment(const TandemRepeat& repeat, std::span<const AlignmentStep> ops) {
  const std::size_t width = repeat.repeat_type.size();
  std::size_t matched = 0;
  for (std::size_t d = 0; d < width; ++d) {
    bool all = true;
    for (std::size_t j = 0; j < repeat.repetitions && all; ++j) {
      const std::size_t index = repeat.start - 1 + d + j * width;
      if (index >= ops.size()) throw Error("alignment shorter than the tandem repeat");
      all = ops[index].op == Move::Match;
    }
    matched += all ? 1 : 0;
  }
  return Fraction(matched, width);
}

std::vector<RepetitivePattern> define_repetitive_patterns(const EventLog& extended,
                                                          std::span<const Alignment> alignments) {
  if (alignments.size() != extended.distinct()) {
    throw Error("one alignment per extended trace is required");
  }
  std::vector<RepetitivePattern> out;
  std::size_t index = 0;
  for (const auto& [trace, count] : extended.entries()) {
    const auto ops = trace_projection(alignments[index++]);
    const auto repeats = detect_tandem_repeats(trace);
    std::size_t pos = 1;
    while (pos <= trace.size()) {
      const auto* r = longest_at(repeats, pos);
      if (!r) {
        ++pos;
        continue;
      }
      RepetitivePattern p{trace, *r, {}, count, repetitive_fulfilment(*r, ops)};
      for (std::size_t i = 0; i < r->repeat_type.size(); ++i) p.positions.push_back(pos + i);
      out.push_back(std::move(p));
      pos += r->length();
    }
  }
  return out;
}

std::vector<ConcurrentPatterns> representative_traces_and_patterns(
    const EventLog& log, const ConcurrencyRelation& oracle, std::size_t cap, const Deadline& deadline) {
  std::vector<ConcurrentPatterns> out;
  for (auto& cls : unique_partial_orders(log, oracle)) {
    deadline.check("partial-orders");
    ConcurrentPatterns entry{std::move(cls), {}, {}, std::nullopt};
    entry.patterns = concurrent_blocks(entry.order.representative);
    if (!entry.patterns.empty()) {
      try {
        entry.representatives = linearizations(entry.order.representative, cap, deadline);
      } catch (const CapExceeded& e) {
        entry.error = std::string(e.what()) + " for the partial order of " +
                      to_string(entry.order.traces.front());
        entry.patterns.clear();
      }
    } else {
      entry.representatives = {entry.order.traces.front()};
    }
    out.push_back(std::move(entry));
  }
  return out;
}

namespace {

bool matched_at(const std::vector<AlignmentStep>& ops, std::size_t position) {
  if (position == 0 || position > ops.size()) {
    throw Error("pattern position " + std::to_string(position) + " outside the aligned trace");
  }
  return ops[position - 1].op == Move::Match;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> partial_counts(std::span<const std::size_t> positions,
                                                       std::span<const Alignment> alignments) {
  std::uint64_t matched = 0;
  for (const auto& a : alignments) {
    const auto ops = trace_projection(a);
    for (auto p : positions) matched += matched_at(ops, p) ? 1 : 0;
  }
  return {matched, positions.size() * alignments.size()};
}

std::pair<std::uint64_t, std::uint64_t> interleaving_counts(std::span<const std::size_t> positions,
                                                            std::span<const Alignment> alignments) {
  std::uint64_t full = 0;
  for (const auto& a : alignments) {
    const auto ops = trace_projection(a);
    full += std::all_of(positions.begin(), positions.end(),
                        [&](std::size_t p) { return matched_at(ops, p); })
                ? 1
                : 0;
  }
  return {full, alignments.size()};
}

Fraction concurrent_fulfilment_partial(std::span<const std::size_t> positions,
                                       std::span<const Alignment> alignments) {
  const auto [num, den] = partial_counts(positions, alignments);
  if (den == 0) throw Error("no alignments or positions for a concurrent pattern");
  return Fraction(num, den);
}

Fraction concurrent_fulfilment_interleavings(std::span<const std::size_t> positions,
                                             std::span<const Alignment> alignments) {
  const auto [num, den] = interleaving_counts(positions, alignments);
  if (den == 0) throw Error("no alignments for a concurrent pattern");
  return Fraction(num, den);
}

}  // namespace patgen
