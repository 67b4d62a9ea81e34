#include <gtest/gtest.h>

#include "oracles.hpp"
#include "patgen/error.hpp"
#include "patgen/petri.hpp"

using namespace patgen;

namespace {

std::vector<std::string> enabled_ids(const Marking& m, const SystemNet& sn) {
  std::vector<std::string> out;
  for (auto t : enabled(m, sn)) out.push_back(sn.net.transition(t).id);
  return out;
}

SystemNet sequence_net(const std::vector<Label>& labels) {
  SystemNet sn;
  sn.source = sn.net.add_place("i");
  PlaceIndex from = sn.source;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    const auto to = sn.net.add_place("p" + std::to_string(k));
    const auto t = sn.net.add_transition("t" + std::to_string(k), labels[k]);
    sn.net.add_input_arc(from, t);
    sn.net.add_output_arc(t, to);
    from = to;
  }
  sn.sink = from;
  return sn;
}

}  // namespace

TEST(Pnml, RunningExampleNet) {
  const auto sn = patgen::testing::running_example_net();
  EXPECT_TRUE(validate(sn).ok()) << validate(sn).summary();
  EXPECT_EQ(sn.net.alphabet(), (std::vector<Label>{"A", "B", "C", "X"}));
  std::size_t silent = 0;
  for (const auto& t : sn.net.transitions()) silent += t.silent() ? 1 : 0;
  EXPECT_EQ(silent, 4u);
  EXPECT_EQ(sn.net.place(sn.source).id, "i");
  EXPECT_EQ(sn.net.place(sn.sink).id, "o");
}

TEST(Pnml, FixtureMatchesNetBuiltInCode) {
  const auto parsed = patgen::testing::running_example_net();
  const auto built = patgen::testing::running_example_net_in_code();
  ASSERT_EQ(parsed.net.transitions().size(), built.net.transitions().size());
  for (TransitionIndex t = 0; t < built.net.transitions().size(); ++t) {
    const auto& a = parsed.net.transition(t);
    const auto& b = built.net.transition(t);
    EXPECT_EQ(a.id, b.id);
    EXPECT_EQ(a.label, b.label);
    EXPECT_EQ(a.preset, b.preset);
    EXPECT_EQ(a.postset, b.postset);
  }
}

TEST(Pnml, RoundTrip) {
  const auto sn = patgen::testing::running_example_net();
  const auto again = parse_pnml(render_pnml(sn));
  ASSERT_EQ(again.net.transitions().size(), sn.net.transitions().size());
  for (TransitionIndex t = 0; t < sn.net.transitions().size(); ++t) {
    EXPECT_EQ(again.net.transition(t).label, sn.net.transition(t).label);
    EXPECT_EQ(again.net.transition(t).preset, sn.net.transition(t).preset);
  }
  EXPECT_EQ(again.source, sn.source);
  EXPECT_EQ(again.sink, sn.sink);
}

TEST(Pnml, SingleMarkedPlaceIsDegenerateNet) {
  const auto sn = parse_pnml(R"(<pnml><net><place id="p"><initialMarking><text>1</text></initialMarking></place></net></pnml>)");
  EXPECT_EQ(sn.source, sn.sink);
  EXPECT_TRUE(sn.net.transitions().empty());
}

TEST(Pnml, DuplicateLabelsRejected) {
  EXPECT_THROW(parse_pnml(R"(<pnml><net>
    <place id="i"/><place id="o"/>
    <transition id="t1"><name><text>A</text></name></transition>
    <transition id="t2"><name><text>A</text></name></transition>
    <arc id="a" source="i" target="t1"/><arc id="b" source="t1" target="o"/>
    <arc id="c" source="i" target="t2"/><arc id="d" source="t2" target="o"/>
  </net></pnml>)"),
               ModelError);
}

TEST(Pnml, DanglingArcRejected) {
  EXPECT_THROW(parse_pnml(R"(<pnml><net><place id="i"/><place id="o"/>
    <transition id="t"><name><text>A</text></name></transition>
    <arc id="a" source="i" target="t"/><arc id="b" source="t" target="nowhere"/></net></pnml>)"),
               ModelError);
}

TEST(Pnml, TwoSinksRejected) {
  EXPECT_THROW(parse_pnml(R"(<pnml><net><place id="i"/><place id="o1"/><place id="o2"/>
    <transition id="t"><name><text>A</text></name></transition>
    <arc id="a" source="i" target="t"/><arc id="b" source="t" target="o1"/>
    <arc id="c" source="t" target="o2"/></net></pnml>)"),
               ModelError);
}

TEST(Pnml, MalformedXml) { EXPECT_THROW(parse_pnml("<pnml><net>"), ParseError); }

TEST(Validate, FreeChoiceViolation) {
  SystemNet sn = sequence_net({"A"});
  const auto extra = sn.net.add_place("q");
  const auto t = sn.net.add_transition("u", "B");
  sn.net.add_input_arc(sn.source, t);
  sn.net.add_input_arc(extra, t);
  sn.net.add_output_arc(t, sn.sink);
  const auto report = validate(sn);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations) found |= v.kind == Violation::Kind::FreeChoice;
  EXPECT_TRUE(found) << report.summary();
}

TEST(Validate, SinkWithOutgoingArc) {
  SystemNet sn = sequence_net({"A", "B"});
  const auto t = sn.net.add_transition("back", "C");
  sn.net.add_input_arc(sn.sink, t);
  sn.net.add_output_arc(t, sn.source);
  const auto report = validate(sn);
  bool found = false;
  for (const auto& v : report.violations) found |= v.kind == Violation::Kind::Workflow;
  EXPECT_TRUE(found) << report.summary();
}

TEST(Validate, UnreachableTransition) {
  SystemNet sn = sequence_net({"A"});
  const auto island = sn.net.add_place("island");
  const auto t = sn.net.add_transition("lost", "Z");
  sn.net.add_input_arc(island, t);
  sn.net.add_output_arc(t, sn.sink);
  EXPECT_FALSE(validate(sn).ok());
}

TEST(Firing, EnabledAtInitialMarking) {
  const auto sn = patgen::testing::running_example_net();
  EXPECT_EQ(enabled_ids(sn.initial_marking(), sn), (std::vector<std::string>{"t_start"}));
  EXPECT_TRUE(enabled(sn.final_marking(), sn).empty());
  EXPECT_TRUE(enabled(Marking{}, sn).empty());
}

TEST(Firing, FireProducesPostset) {
  const auto sn = patgen::testing::running_example_net();
  const auto m = fire(sn.initial_marking(), 0, sn);
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(sn.net.place(m.places()[0]).id, "p_x");
}

TEST(Firing, DisabledTransitionThrows) {
  const auto sn = patgen::testing::running_example_net();
  EXPECT_THROW(fire(sn.initial_marking(), 1, sn), ModelError);
}

TEST(Firing, UnsafeMarkingThrows) {
  SystemNet sn;
  sn.source = sn.net.add_place("i");
  const auto p = sn.net.add_place("p");
  sn.sink = sn.net.add_place("o");
  const auto t = sn.net.add_transition("t", "A");
  sn.net.add_input_arc(sn.source, t);
  sn.net.add_output_arc(t, p);
  const auto u = sn.net.add_transition("u", "B");
  sn.net.add_input_arc(p, u);
  sn.net.add_output_arc(u, p);
  sn.net.add_output_arc(u, sn.sink);
  const auto once = fire(sn.initial_marking(), t, sn);
  const auto twice = fire(once, u, sn);
  EXPECT_THROW(fire(twice, u, sn), ModelError);
  EXPECT_THROW(explore(sn), ModelError);
}

TEST(Firing, TokenCountChangesByArcBalance) {
  const auto sn = patgen::testing::running_example_net();
  const auto graph = explore(sn);
  for (const auto& m : graph.markings) {
    for (auto t : enabled(m, sn)) {
      const auto& tr = sn.net.transition(t);
      EXPECT_EQ(fire(m, t, sn).size(), m.size() - tr.preset.size() + tr.postset.size());
    }
  }
}

TEST(Replay, RunningExampleRuns) {
  const auto sn = patgen::testing::running_example_net();
  using patgen::testing::trace_of;
  for (const auto* s : {"XABC", "XACB", "ABC", "ACB", "BC", "XXXXAAAABC", "CB"}) {
    EXPECT_TRUE(replays(sn, trace_of(s))) << s;
  }
  for (const auto* s : {"BAC", "AXBC", "XAB", "", "XABCX"}) {
    EXPECT_FALSE(replays(sn, trace_of(s))) << s;
  }
}

TEST(Flower, AcceptsEverySequence) {
  const std::vector<Label> alphabet{"A", "B"};
  const auto sn = make_flower_net(alphabet);
  EXPECT_TRUE(validate(sn).ok()) << validate(sn).summary();
  EXPECT_TRUE(replays(sn, std::vector<Label>{}));
  EXPECT_TRUE(replays(sn, std::vector<Label>{"B", "A", "A", "B"}));
  EXPECT_FALSE(replays(sn, std::vector<Label>{"C"}));
}
