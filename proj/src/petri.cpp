#include "patgen/petri.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

#include "patgen/error.hpp"

namespace patgen {
namespace {

void insert_sorted(std::vector<PlaceIndex>& v, PlaceIndex p) {
  const auto it = std::lower_bound(v.begin(), v.end(), p);
  if (it == v.end() || *it != p) v.insert(it, p);
}

std::string describe(const Marking& m, const PetriNet& net) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.places().size(); ++i) {
    if (i != 0) out += ',';
    out += net.place(m.places()[i]).id;
  }
  return out + "}";
}

std::string describe(const Transition& t) {
  return t.label ? "'" + *t.label + "' (" + t.id + ")" : "tau (" + t.id + ")";
}

}  // namespace

PlaceIndex PetriNet::add_place(std::string id, std::string name) {
  places_.push_back({std::move(id), std::move(name)});
  return static_cast<PlaceIndex>(places_.size() - 1);
}

TransitionIndex PetriNet::add_transition(std::string id, std::optional<Label> label) {
  transitions_.push_back({std::move(id), std::move(label), {}, {}});
  return static_cast<TransitionIndex>(transitions_.size() - 1);
}

void PetriNet::add_input_arc(PlaceIndex from, TransitionIndex to) {
  if (from >= places_.size()) throw ModelError("arc from unknown place");
  insert_sorted(transitions_.at(to).preset, from);
}

void PetriNet::add_output_arc(TransitionIndex from, PlaceIndex to) {
  if (to >= places_.size()) throw ModelError("arc to unknown place");
  insert_sorted(transitions_.at(from).postset, to);
}

std::vector<TransitionIndex> PetriNet::place_postset(PlaceIndex p) const {
  std::vector<TransitionIndex> out;
  for (TransitionIndex t = 0; t < transitions_.size(); ++t) {
    if (std::binary_search(transitions_[t].preset.begin(), transitions_[t].preset.end(), p)) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<TransitionIndex> PetriNet::place_preset(PlaceIndex p) const {
  std::vector<TransitionIndex> out;
  for (TransitionIndex t = 0; t < transitions_.size(); ++t) {
    if (std::binary_search(transitions_[t].postset.begin(), transitions_[t].postset.end(), p)) {
      out.push_back(t);
    }
  }
  return out;
}

std::vector<Label> PetriNet::alphabet() const {
  std::set<Label> labels;
  for (const auto& t : transitions_) {
    if (t.label) labels.insert(*t.label);
  }
  return {labels.begin(), labels.end()};
}

std::optional<TransitionIndex> PetriNet::find_label(std::string_view label) const {
  for (TransitionIndex t = 0; t < transitions_.size(); ++t) {
    if (transitions_[t].label && *transitions_[t].label == label) return t;
  }
  return std::nullopt;
}

Marking::Marking(std::vector<PlaceIndex> places) : places_(std::move(places)) {
  std::sort(places_.begin(), places_.end());
  places_.erase(std::unique(places_.begin(), places_.end()), places_.end());
}

bool Marking::contains(PlaceIndex p) const {
  return std::binary_search(places_.begin(), places_.end(), p);
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
  return boost::hash_range(m.places().begin(), m.places().end());
}

std::string_view to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::Workflow: return "workflow";
    case Violation::Kind::Connectivity: return "connectivity";
    case Violation::Kind::FreeChoice: return "free-choice";
    case Violation::Kind::UniqueLabel: return "unique-labelling";
  }
  return "unknown";
}

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(v.kind)) + ": " + v.message;
  }
  return out;
}

ValidationReport validate(const SystemNet& sn) {
  ValidationReport report;
  const auto& net = sn.net;
  const auto add = [&](Violation::Kind kind, std::string message) {
    report.violations.push_back({kind, std::move(message)});
  };

  if (sn.source >= net.places().size() || sn.sink >= net.places().size()) {
    add(Violation::Kind::Workflow, "source or sink place out of range");
    return report;
  }
  if (!net.place_preset(sn.source).empty()) {
    add(Violation::Kind::Workflow, "source place '" + net.place(sn.source).id + "' has incoming arcs");
  }
  if (!net.place_postset(sn.sink).empty()) {
    add(Violation::Kind::Workflow, "sink place '" + net.place(sn.sink).id + "' has outgoing arcs");
  }

  // Strong connectivity of the short-circuited net is equivalent to every node
  // lying on some path from the source to the sink.
  const std::size_t np = net.places().size();
  const std::size_t nt = net.transitions().size();
  const auto walk = [&](bool forward) {
    std::vector<char> seen(np + nt, 0);  // places first, then transitions
    std::deque<std::size_t> queue{forward ? sn.source : sn.sink};
    seen[queue.front()] = 1;
    while (!queue.empty()) {
      const auto node = queue.front();
      queue.pop_front();
      const auto visit = [&](std::size_t next) {
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      };
      if (node < np) {
        const auto p = static_cast<PlaceIndex>(node);
        for (auto t : forward ? net.place_postset(p) : net.place_preset(p)) visit(np + t);
      } else {
        const auto& t = net.transition(static_cast<TransitionIndex>(node - np));
        for (auto p : forward ? t.postset : t.preset) visit(p);
      }
    }
    return seen;
  };
  const auto from_source = walk(true);
  const auto to_sink = walk(false);
  for (std::size_t node = 0; node < np + nt; ++node) {
    if (from_source[node] && to_sink[node]) continue;
    const std::string name = node < np ? "place '" + net.place(static_cast<PlaceIndex>(node)).id + "'"
                                       : "transition " + describe(net.transition(
                                                             static_cast<TransitionIndex>(node - np)));
    add(Violation::Kind::Connectivity,
        name + (from_source[node] ? " cannot reach the sink" : " is not reachable from the source"));
  }

  for (PlaceIndex p = 0; p < np; ++p) {
    const auto consumers = net.place_postset(p);
    for (std::size_t a = 1; a < consumers.size(); ++a) {
      if (net.transition(consumers[a]).preset != net.transition(consumers[0]).preset) {
        add(Violation::Kind::FreeChoice,
            "transitions " + describe(net.transition(consumers[0])) + " and " +
                describe(net.transition(consumers[a])) + " share place '" + net.place(p).id +
                "' but have different presets");
      }
    }
  }

  std::map<Label, TransitionIndex> seen_labels;
  for (TransitionIndex t = 0; t < nt; ++t) {
    const auto& label = net.transition(t).label;
    if (!label) continue;
    const auto [it, inserted] = seen_labels.emplace(*label, t);
    if (!inserted) {
      add(Violation::Kind::UniqueLabel, "label '" + *label + "' is carried by transitions '" +
                                            net.transition(it->second).id + "' and '" +
                                            net.transition(t).id + "'");
    }
  }
  return report;
}

std::vector<TransitionIndex> enabled(const Marking& m, const SystemNet& sn) {
  std::vector<TransitionIndex> out;
  const auto& ts = sn.net.transitions();
  for (TransitionIndex t = 0; t < ts.size(); ++t) {
    const auto& pre = ts[t].preset;
    if (std::includes(m.places().begin(), m.places().end(), pre.begin(), pre.end())) {
      out.push_back(t);
    }
  }
  return out;
}

Marking fire(const Marking& m, TransitionIndex t, const SystemNet& sn) {
  const auto& tr = sn.net.transition(t);
  if (!std::includes(m.places().begin(), m.places().end(), tr.preset.begin(), tr.preset.end())) {
    throw ModelError("transition " + describe(tr) + " is not enabled at " + describe(m, sn.net));
  }
  std::vector<PlaceIndex> rest;
  std::set_difference(m.places().begin(), m.places().end(), tr.preset.begin(), tr.preset.end(),
                      std::back_inserter(rest));
  std::vector<PlaceIndex> next;
  std::set_union(rest.begin(), rest.end(), tr.postset.begin(), tr.postset.end(),
                 std::back_inserter(next));
  if (next.size() != rest.size() + tr.postset.size()) {
    throw ModelError("net is not safe: firing " + describe(tr) + " at " + describe(m, sn.net) +
                     " puts a second token on a place");
  }
  return Marking(std::move(next));
}

ReachabilityGraph explore(const SystemNet& sn, std::size_t max_markings) {
  ReachabilityGraph graph;
  std::unordered_map<Marking, std::uint32_t, MarkingHash> index;
  const auto intern = [&](Marking m) -> std::uint32_t {
    const auto [it, inserted] = index.emplace(m, static_cast<std::uint32_t>(graph.markings.size()));
    if (inserted) {
      if (graph.markings.size() >= max_markings) {
        throw ModelError("more than " + std::to_string(max_markings) + " reachable markings");
      }
      graph.markings.push_back(std::move(m));
      graph.outgoing.emplace_back();
    }
    return it->second;
  };

  intern(sn.initial_marking());
  for (std::uint32_t current = 0; current < graph.markings.size(); ++current) {
    const Marking m = graph.markings[current];
    for (auto t : enabled(m, sn)) {
      const auto target = intern(fire(m, t, sn));
      graph.outgoing[current].push_back({t, target});
    }
  }
  if (const auto it = index.find(sn.final_marking()); it != index.end()) {
    graph.final_index = it->second;
  }
  return graph;
}

bool replays(const SystemNet& sn, std::span<const Label> labels) {
  const auto graph = explore(sn);
  if (!graph.final_index) return false;
  const std::size_t width = labels.size() + 1;
  std::vector<char> seen(graph.markings.size() * width, 0);
  std::deque<std::pair<std::uint32_t, std::size_t>> queue{{0, 0}};
  seen[0] = 1;
  while (!queue.empty()) {
    const auto [m, pos] = queue.front();
    queue.pop_front();
    if (m == *graph.final_index && pos == labels.size()) return true;
    for (const auto& edge : graph.outgoing[m]) {
      const auto& label = sn.net.transition(edge.transition).label;
      std::size_t next = pos;
      if (label) {
        if (pos == labels.size() || *label != labels[pos]) continue;
        ++next;
      }
      auto& flag = seen[edge.target * width + next];
      if (!flag) {
        flag = 1;
        queue.emplace_back(edge.target, next);
      }
    }
  }
  return false;
}

SystemNet make_flower_net(std::span<const Label> alphabet) {
  SystemNet sn;
  sn.source = sn.net.add_place("source");
  const auto centre = sn.net.add_place("centre");
  sn.sink = sn.net.add_place("sink");
  const auto start = sn.net.add_transition("start", std::nullopt);
  sn.net.add_input_arc(sn.source, start);
  sn.net.add_output_arc(start, centre);
  std::set<Label> distinct(alphabet.begin(), alphabet.end());
  for (const auto& label : distinct) {
    const auto t = sn.net.add_transition("t_" + label, label);
    sn.net.add_input_arc(centre, t);
    sn.net.add_output_arc(t, centre);
  }
  const auto end = sn.net.add_transition("end", std::nullopt);
  sn.net.add_input_arc(centre, end);
  sn.net.add_output_arc(end, sn.sink);
  return sn;
}

}  // namespace patgen
