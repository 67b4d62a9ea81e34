#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "patgen/error.hpp"

namespace patgen {

void PrintTo(const AlignmentStep& step, std::ostream* out) { *out << to_string(step.op) << '(' << step.label << ')'; }

}  // namespace patgen

namespace patgen::testing {

std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(PATGEN_TEST_DATA) / name;
}

EventLog running_example_log() { return load_log(data_path("running_example.csv")); }

SystemNet running_example_net() { return load_pnml(data_path("running_example.pnml")); }

SystemNet running_example_net_in_code() {
  SystemNet sn;
  auto& net = sn.net;
  sn.source = net.add_place("i");
  const auto px = net.add_place("p_x");
  const auto pa = net.add_place("p_a");
  const auto pb1 = net.add_place("p_b1");
  const auto pc1 = net.add_place("p_c1");
  const auto pb2 = net.add_place("p_b2");
  const auto pc2 = net.add_place("p_c2");
  sn.sink = net.add_place("o");
  const auto arc = [&](PlaceIndex from, TransitionIndex t, PlaceIndex to) {
    net.add_input_arc(from, t);
    net.add_output_arc(t, to);
  };
  arc(sn.source, net.add_transition("t_start", std::nullopt), px);
  arc(px, net.add_transition("t_x", "X"), px);
  arc(px, net.add_transition("t_skip_x", std::nullopt), pa);
  arc(pa, net.add_transition("t_a", "A"), pa);
  const auto split = net.add_transition("t_split", std::nullopt);
  net.add_input_arc(pa, split);
  net.add_output_arc(split, pb1);
  net.add_output_arc(split, pc1);
  arc(pb1, net.add_transition("t_b", "B"), pb2);
  arc(pc1, net.add_transition("t_c", "C"), pc2);
  const auto join = net.add_transition("t_join", std::nullopt);
  net.add_input_arc(pb2, join);
  net.add_input_arc(pc2, join);
  net.add_output_arc(join, sn.sink);
  return sn;
}

ConcurrencyRelation running_example_local_oracle(const EventLog& log) {
  return load_explicit_oracle(data_path("local_oracle.json"), log).relation;
}

Trace trace_of(const std::string& labels) {
  Trace t;
  for (char c : labels) t.emplace_back(1, c);
  return t;
}

namespace {

bool occurs(const Trace& t, long s, const Trace& alpha, std::size_t k) {
  if (s < 1) return false;
  const std::size_t start = static_cast<std::size_t>(s) - 1;
  if (start + alpha.size() * k > t.size()) return false;
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      if (t[start + m * alpha.size() + j] != alpha[j]) return false;
    }
  }
  return true;
}

bool is_tandem_repeat(const Trace& alpha) {
  for (std::size_t len = 1; 2 * len <= alpha.size(); ++len) {
    if (alpha.size() % len != 0) continue;
    const Trace beta(alpha.begin(), alpha.begin() + static_cast<long>(len));
    if (occurs(alpha, 1, beta, alpha.size() / len)) return true;
  }
  return false;
}

}  // namespace

std::vector<TandemRepeat> brute_force_tandem_repeats(const Trace& t) {
  std::vector<TandemRepeat> out;
  const long n = static_cast<long>(t.size());
  for (long s = 1; s <= n; ++s) {
    for (long len = 1; s - 1 + 2 * len <= n; ++len) {
      const Trace alpha(t.begin() + (s - 1), t.begin() + (s - 1 + len));
      for (std::size_t k = 2; s - 1 + static_cast<long>(k) * len <= n; ++k) {
        if (!occurs(t, s, alpha, k)) continue;
        if (occurs(t, s - len, alpha, k + 1) || occurs(t, s, alpha, k + 1)) continue;
        if (is_tandem_repeat(alpha)) continue;
        bool shifted = false;
        for (long x = 1; x < len && !shifted; ++x) {
          if (s - x < 1) break;
          const Trace rotated(t.begin() + (s - 1 - x), t.begin() + (s - 1 - x + len));
          shifted = occurs(t, s - x, rotated, k);
        }
        if (!shifted) out.push_back({static_cast<std::size_t>(s), alpha, k});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const TandemRepeat& a, const TandemRepeat& b) {
    if (a.start != b.start) return a.start < b.start;
    if (a.length() != b.length()) return a.length() > b.length();
    return a.repeat_type < b.repeat_type;
  });
  return out;
}

namespace {

template <typename Visit>
void for_each_extension(const PartialOrder& po, Visit visit) {
  std::vector<EventIndex> events(po.inner_size());
  std::iota(events.begin(), events.end(), EventIndex{1});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < events.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < events.size() && ok; ++j) {
        ok = !po.leq(events[j], events[i]);
      }
    }
    if (ok) visit(events);
  } while (std::next_permutation(events.begin(), events.end()));
}

}  // namespace

std::vector<Trace> brute_force_linearizations(const PartialOrder& po) {
  std::set<Trace> out;
  for_each_extension(po, [&](const std::vector<EventIndex>& events) {
    Trace t;
    for (auto e : events) t.push_back(*po.label(e));
    out.insert(t);
  });
  return {out.begin(), out.end()};
}

std::uint64_t brute_force_linear_extension_count(const PartialOrder& po) {
  std::uint64_t count = 0;
  for_each_extension(po, [&](const std::vector<EventIndex>&) { ++count; });
  return count;
}

bool brute_force_isomorphic(const PartialOrder& a, const PartialOrder& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  // Sentinels map to sentinels; permute the inner events.
  std::vector<EventIndex> image(n - 2);
  std::iota(image.begin(), image.end(), EventIndex{1});
  const auto map = [&](EventIndex e) -> EventIndex {
    if (e == a.initial()) return b.initial();
    if (e == a.final()) return b.final();
    return image[e - 1];
  };
  do {
    bool ok = true;
    for (EventIndex e = 1; e + 1 < n && ok; ++e) ok = a.label(e) == b.label(map(e));
    for (EventIndex x = 0; x < n && ok; ++x) {
      for (EventIndex y = 0; y < n && ok; ++y) ok = a.leq(x, y) == b.leq(map(x), map(y));
    }
    if (ok) return true;
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

PartialOrder random_partial_order(std::mt19937& rng, std::size_t events, const std::vector<Label>& labels,
                                  double arc_probability) {
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  std::bernoulli_distribution arc(arc_probability);
  Trace t;
  for (std::size_t i = 0; i < events; ++i) t.push_back(labels[pick(rng)]);
  // Arcs follow a random topological order so every draw is acyclic.
  std::vector<EventIndex> order(events);
  std::iota(order.begin(), order.end(), EventIndex{1});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<PartialOrder::Arc> arcs;
  for (std::size_t i = 0; i < events; ++i) {
    for (std::size_t j = i + 1; j < events; ++j) {
      if (arc(rng)) arcs.emplace_back(order[i], order[j]);
    }
  }
  return PartialOrder(t, arcs);
}

namespace {

struct Node {
  enum Kind { Activity, Silent, Sequence, Choice, Parallel, Loop } kind;
  std::vector<Node> children;
};

Node random_tree(std::mt19937& rng, int depth, bool root = false) {
  std::uniform_int_distribution<int> kind(root ? 4 : 0, depth <= 0 ? 1 : 9);
  const int k = kind(rng);
  if (k == 0 || (k == 1 && depth <= 0)) return {Node::Activity, {}};
  if (k == 1) return {std::bernoulli_distribution(0.3)(rng) ? Node::Silent : Node::Activity, {}};
  if (k <= 3) return {Node::Activity, {}};
  const Node::Kind kinds[] = {Node::Sequence, Node::Choice, Node::Parallel, Node::Loop};
  Node node{kinds[(k - 4) % 4], {}};
  const int arity = node.kind == Node::Loop ? 2 : std::uniform_int_distribution<int>(2, 3)(rng);
  for (int i = 0; i < arity; ++i) node.children.push_back(random_tree(rng, depth - 1));
  return node;
}

struct NetBuilder {
  SystemNet sn;
  char next_label = 'A';
  int next_id = 0;

  PlaceIndex place() { return sn.net.add_place("p" + std::to_string(next_id++)); }
  TransitionIndex transition(std::optional<Label> label) {
    return sn.net.add_transition("t" + std::to_string(next_id++), std::move(label));
  }

  void build(const Node& node, PlaceIndex in, PlaceIndex out) {
    switch (node.kind) {
      case Node::Activity:
      case Node::Silent: {
        std::optional<Label> label;
        if (node.kind == Node::Activity) label = Label(1, next_label++);
        const auto t = transition(label);
        sn.net.add_input_arc(in, t);
        sn.net.add_output_arc(t, out);
        break;
      }
      case Node::Sequence: {
        PlaceIndex from = in;
        for (std::size_t i = 0; i < node.children.size(); ++i) {
          const PlaceIndex to = i + 1 == node.children.size() ? out : place();
          build(node.children[i], from, to);
          from = to;
        }
        break;
      }
      case Node::Choice:
        for (const auto& child : node.children) build(child, in, out);
        break;
      case Node::Parallel: {
        const auto split = transition(std::nullopt);
        const auto join = transition(std::nullopt);
        sn.net.add_input_arc(in, split);
        sn.net.add_output_arc(join, out);
        for (const auto& child : node.children) {
          const auto a = place();
          const auto b = place();
          sn.net.add_output_arc(split, a);
          sn.net.add_input_arc(b, join);
          build(child, a, b);
        }
        break;
      }
      case Node::Loop: {
        const auto enter = transition(std::nullopt);
        const auto exit = transition(std::nullopt);
        const auto a = place();
        const auto b = place();
        sn.net.add_input_arc(in, enter);
        sn.net.add_output_arc(enter, a);
        sn.net.add_input_arc(b, exit);
        sn.net.add_output_arc(exit, out);
        build(node.children[0], a, b);
        build(node.children[1], b, a);
        break;
      }
    }
  }
};

}  // namespace

SystemNet random_process_net(std::mt19937& rng, std::size_t max_transitions) {
  while (true) {
    NetBuilder builder;
    const auto tree = random_tree(rng, 3, true);
    builder.sn.source = builder.place();
    builder.sn.sink = builder.place();
    builder.build(tree, builder.sn.source, builder.sn.sink);
    const auto& net = builder.sn.net;
    const auto size = net.transitions().size();
    if (size > max_transitions || size < std::min<std::size_t>(3, max_transitions) || net.alphabet().empty()) {
      continue;
    }
    return std::move(builder.sn);
  }
}

Trace random_trace(std::mt19937& rng, const std::vector<Label>& alphabet, std::size_t max_length) {
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  Trace t(length(rng));
  for (auto& l : t) l = alphabet[pick(rng)];
  return t;
}

Trace random_run(std::mt19937& rng, const SystemNet& sn, std::size_t max_steps) {
  const auto graph = explore(sn);
  while (true) {
    Trace run;
    std::uint32_t m = 0;
    for (std::size_t step = 0; step < max_steps; ++step) {
      if (graph.final_index && m == *graph.final_index) return run;
      const auto& edges = graph.outgoing[m];
      if (edges.empty()) break;
      const auto& e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
      if (const auto& label = sn.net.transition(e.transition).label) run.push_back(*label);
      m = e.target;
    }
    if (graph.final_index && m == *graph.final_index) return run;
  }
}

}  // namespace patgen::testing
