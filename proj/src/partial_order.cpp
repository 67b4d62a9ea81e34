#include "patgen/partial_order.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "patgen/error.hpp"

namespace patgen {

PartialOrder::PartialOrder(const Trace& labels, const std::vector<Arc>& arcs) {
  const std::size_t n = labels.size() + 2;
  labels_.reserve(n);
  labels_.emplace_back(std::nullopt);
  for (const auto& l : labels) labels_.emplace_back(l);
  labels_.emplace_back(std::nullopt);

  order_.assign(n * n, 0);
  const auto at = [&](std::size_t a, std::size_t b) -> char& { return order_[a * n + b]; };
  for (std::size_t e = 0; e < n; ++e) {
    at(e, e) = 1;
    at(0, e) = 1;
    at(e, n - 1) = 1;
  }
  for (const auto& [a, b] : arcs) {
    if (a == 0 || b == 0 || a > labels.size() || b > labels.size()) {
      throw Error("partial order arc out of range");
    }
    at(a, b) = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!at(i, k)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (at(k, j)) at(i, j) = 1;
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (at(a, b) && at(b, a)) throw Error("partial order arcs contain a cycle");
    }
  }

  succ_.resize(n);
  pred_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !at(a, b)) continue;
      bool direct = true;
      for (std::size_t c = 0; c < n && direct; ++c) {
        if (c != a && c != b && at(a, c) && at(c, b)) direct = false;
      }
      if (direct) {
        succ_[a].push_back(static_cast<EventIndex>(b));
        pred_[b].push_back(static_cast<EventIndex>(a));
      }
    }
  }
}

std::vector<PartialOrder::Arc> PartialOrder::reduced_arcs() const {
  std::vector<Arc> out;
  for (EventIndex a = 0; a < succ_.size(); ++a) {
    for (auto b : succ_[a]) out.emplace_back(a, b);
  }
  return out;
}

PartialOrder to_partial_order(const Trace& trace, const ConcurrencyRelation& oracle) {
  std::vector<PartialOrder::Arc> arcs;
  for (std::size_t x = 1; x <= trace.size(); ++x) {
    for (std::size_t y = x + 1; y <= trace.size(); ++y) {
      if (!oracle.concurrent_at(trace, x, y)) {
        arcs.emplace_back(static_cast<EventIndex>(x), static_cast<EventIndex>(y));
      }
    }
  }
  return PartialOrder(trace, arcs);
}

namespace {

using Colors = std::vector<std::uint32_t>;

// Replaces each value by its rank among the distinct values.
template <typename Key>
Colors rank(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Colors out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    out[i] = static_cast<std::uint32_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                        sorted.begin());
  }
  return out;
}

std::size_t count_colors(const Colors& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

Colors refine(const PartialOrder& po, Colors colors) {
  using Signature = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;
  while (true) {
    std::vector<Signature> sigs(po.size());
    for (EventIndex e = 0; e < po.size(); ++e) {
      auto& [own, preds, succs] = sigs[e];
      own = colors[e];
      for (auto p : po.predecessors(e)) preds.push_back(colors[p]);
      for (auto s : po.successors(e)) succs.push_back(colors[s]);
      std::sort(preds.begin(), preds.end());
      std::sort(succs.begin(), succs.end());
    }
    auto next = rank(sigs);
    if (count_colors(next) == count_colors(colors)) return next;
    colors = std::move(next);
  }
}

CanonicalForm encode(const PartialOrder& po, const Colors& colors) {
  CanonicalForm form;
  form.labels.resize(po.size());
  for (EventIndex e = 0; e < po.size(); ++e) form.labels[colors[e]] = po.label(e);
  for (const auto& [a, b] : po.reduced_arcs()) form.arcs.emplace_back(colors[a], colors[b]);
  std::sort(form.arcs.begin(), form.arcs.end());
  return form;
}

void search(const PartialOrder& po, const Colors& colors, std::optional<CanonicalForm>& best) {
  const auto refined = refine(po, colors);
  const std::size_t n = po.size();
  std::vector<std::size_t> cell_size(n, 0);
  for (auto c : refined) ++cell_size[c];
  std::optional<std::uint32_t> target;
  for (std::uint32_t c = 0; c < n; ++c) {
    if (cell_size[c] > 1) {
      target = c;
      break;
    }
  }
  if (!target) {
    auto form = encode(po, refined);
    if (!best || form < *best) best = std::move(form);
    return;
  }
  for (EventIndex v = 0; v < n; ++v) {
    if (refined[v] != *target) continue;
    std::vector<std::uint64_t> split(n);
    for (EventIndex u = 0; u < n; ++u) {
      split[u] = 2 * std::uint64_t{refined[u]} + (refined[u] == *target && u != v ? 1 : 0);
    }
    search(po, rank(split), best);
  }
}

}  // namespace

CanonicalForm canonical_form(const PartialOrder& po) {
  // Sentinels get their own colours ahead of every label.
  std::vector<std::pair<int, Label>> keys(po.size());
  for (EventIndex e = 0; e < po.size(); ++e) {
    if (e == po.initial()) {
      keys[e] = {0, {}};
    } else if (e == po.final()) {
      keys[e] = {1, {}};
    } else {
      keys[e] = {2, *po.label(e)};
    }
  }
  std::optional<CanonicalForm> best;
  search(po, rank(keys), best);
  return std::move(*best);
}

std::vector<PartialOrderClass> unique_partial_orders(const EventLog& log,
                                                     const ConcurrencyRelation& oracle) {
  std::vector<PartialOrderClass> classes;
  std::map<CanonicalForm, std::size_t> index;
  for (const auto& [trace, count] : log.entries()) {
    auto po = to_partial_order(trace, oracle);
    auto form = canonical_form(po);
    const auto [it, inserted] = index.emplace(std::move(form), classes.size());
    if (inserted) classes.push_back({std::move(po), {}, 0});
    auto& cls = classes[it->second];
    cls.traces.push_back(trace);
    cls.count += count;
  }
  return classes;
}

}  // namespace patgen
