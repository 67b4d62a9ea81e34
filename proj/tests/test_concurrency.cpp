#include <gtest/gtest.h>

#include "oracles.hpp"
#include "patgen/concurrency.hpp"
#include "patgen/error.hpp"

using namespace patgen;
using patgen::testing::trace_of;

namespace {

EventLog log_of(std::initializer_list<std::pair<const char*, std::uint64_t>> rows) {
  EventLog log;
  for (const auto& [labels, count] : rows) log.add(trace_of(labels), count);
  return log;
}

std::set<LabelPair> pairs(std::initializer_list<LabelPair> p) { return p; }

}  // namespace

TEST(DirectlyFollows, CountsAreWeighted) {
  const auto df = directly_follows(log_of({{"AB", 3}}));
  EXPECT_EQ(df.count("A", "B"), 3u);
  EXPECT_TRUE(df.follows("A", "B"));
  EXPECT_FALSE(df.follows("B", "A"));
  EXPECT_TRUE(directly_follows(EventLog{}).counts.empty());
}

TEST(DirectlyFollows, RunningExampleShortLoop) {
  const auto df = directly_follows(patgen::testing::running_example_log());
  EXPECT_GT(df.count("X", "A"), 0u);
  EXPECT_GT(df.count("A", "X"), 0u);
  EXPECT_EQ(df.count("X", "A"), 1000u + 1000u + 1000u + 500u * 2 + 200u * 3 + 200u * 5);
}

TEST(Filter, ZeroKeepsEverything) {
  const auto df = directly_follows(patgen::testing::running_example_log());
  EXPECT_EQ(filter_df(df, 0.0).relation, df.relation);
}

TEST(Filter, OneDropsSingleSuccessor) {
  // dfC(A,B) = 1, delta = (1 + 1) / 2 = 1, and 1 > 1 fails.
  const auto df = directly_follows(log_of({{"AB", 1}}));
  EXPECT_FALSE(filter_df(df, 1.0).follows("A", "B"));
}

TEST(Filter, HandEvaluatedThreshold) {
  // dfC(A,B)=9, dfC(A,C)=1, dfC(B,C)=9, dfC(C,B)=1.
  const auto df = directly_follows(log_of({{"AB", 9}, {"AC", 1}, {"BC", 9}, {"CB", 1}}));
  const auto kept = filter_df(df, 0.5).relation;
  // A->B: 2*9=18 > 0.5*(10 + 10)=10.
  EXPECT_TRUE(kept.count({"A", "B"}));
  // A->C: 2 > 0.5*(10 + 10) fails.
  EXPECT_FALSE(kept.count({"A", "C"}));
  // C->B: 2 > 0.5*(1 + 10) fails.
  EXPECT_FALSE(kept.count({"C", "B"}));
  // B->C: 18 > 0.5*(9 + 10).
  EXPECT_TRUE(kept.count({"B", "C"}));
}

TEST(Filter, RejectsOutOfRange) {
  const auto df = directly_follows(EventLog{});
  EXPECT_THROW(filter_df(df, -0.1), ConfigError);
  EXPECT_THROW(filter_df(df, 1.5), ConfigError);
}

TEST(Alpha, Definition) {
  EXPECT_TRUE(alpha_oracle(directly_follows(log_of({{"AB", 1}}))).pairs().empty());
  EXPECT_EQ(alpha_oracle(directly_follows(log_of({{"AB", 1}, {"BA", 1}}))).pairs(), pairs({{"A", "B"}}));
}

TEST(Alpha, RunningExampleMistakesShortLoopForConcurrency) {
  const auto rel = alpha_oracle(directly_follows(patgen::testing::running_example_log()));
  EXPECT_TRUE(rel.concurrent("X", "A"));
  EXPECT_TRUE(rel.concurrent("A", "X"));
}

TEST(AlphaPlus, RunningExample) {
  const auto log = patgen::testing::running_example_log();
  const auto rel = alpha_plus_oracle(log, directly_follows(log));
  EXPECT_EQ(rel.pairs(), pairs({{"A", "B"}, {"A", "C"}, {"B", "C"}}));
}

TEST(AlphaPlus, ShortLoopRemoved) {
  const auto log = log_of({{"ABA", 1}});
  EXPECT_TRUE(alpha_plus_oracle(log, directly_follows(log)).pairs().empty());
  const auto both = log_of({{"AB", 1}, {"BA", 1}});
  EXPECT_EQ(alpha_plus_oracle(both, directly_follows(both)).pairs(), pairs({{"A", "B"}}));
}

TEST(AlphaPlus, SubsetOfAlpha) {
  std::mt19937 rng(7);
  const std::vector<Label> alphabet{"A", "B", "C", "D"};
  for (int round = 0; round < 100; ++round) {
    EventLog log;
    for (int i = 0; i < 5; ++i) log.add(patgen::testing::random_trace(rng, alphabet, 8), 1 + round % 3);
    const auto df = directly_follows(log);
    const auto alpha = alpha_oracle(df).pairs();
    const auto plus = alpha_plus_oracle(log, df);
    for (const auto& p : plus.pairs()) EXPECT_TRUE(alpha.count(p));
  }
}

TEST(Relation, SymmetricAndIrreflexive) {
  ConcurrencyRelation rel;
  rel.add("B", "A");
  rel.add("C", "C");
  EXPECT_TRUE(rel.concurrent("A", "B"));
  EXPECT_TRUE(rel.concurrent("B", "A"));
  EXPECT_FALSE(rel.concurrent("C", "C"));
  EXPECT_EQ(rel.pairs().size(), 1u);
}

TEST(Explicit, LocalPairs) {
  const auto log = patgen::testing::running_example_log();
  const auto rel = patgen::testing::running_example_local_oracle(log);
  EXPECT_TRUE(rel.concurrent_at(trace_of("XABC"), 3, 4));
  EXPECT_FALSE(rel.concurrent_at(trace_of("XABC"), 2, 3));
  EXPECT_TRUE(rel.concurrent_at(trace_of("BAC"), 1, 3));
  EXPECT_FALSE(rel.concurrent_at(trace_of("XAXACB"), 7, 8 - 1));
  EXPECT_TRUE(rel.pairs().empty());
}

TEST(Explicit, GlobalPairsApplyEverywhere) {
  const auto log = log_of({{"AB", 1}});
  const auto oracle = parse_explicit_oracle(R"({"global": [["A","B"]]})", log);
  EXPECT_TRUE(oracle.relation.concurrent_at(trace_of("AB"), 1, 2));
  EXPECT_TRUE(oracle.warnings.empty());
}

TEST(Explicit, EmptyDocument) {
  const auto oracle = parse_explicit_oracle("{}", patgen::testing::running_example_log());
  EXPECT_TRUE(oracle.relation.empty());
}

TEST(Explicit, Errors) {
  const auto log = log_of({{"AB", 1}});
  EXPECT_THROW(parse_explicit_oracle(R"({"traces":[{"trace":["A","B"],"pairs":[[1,3]]}]})", log), ConfigError);
  EXPECT_THROW(parse_explicit_oracle(R"({"traces":[{"trace":["A","B"],"pairs":[[2,2]]}]})", log), ConfigError);
  EXPECT_THROW(parse_explicit_oracle(R"({"traces":[{"trace":["A","B"],"pairs":[[0,1]]}]})", log), ConfigError);
  EXPECT_THROW(parse_explicit_oracle(R"({"global":[["A","A"]]})", log), ConfigError);
  EXPECT_THROW(parse_explicit_oracle("{", log), ParseError);
  EXPECT_THROW(parse_explicit_oracle("[]", log), ConfigError);
}

TEST(Explicit, UnknownTraceWarns) {
  const auto log = log_of({{"AB", 1}});
  const auto oracle = parse_explicit_oracle(R"({"traces":[{"trace":["Z"],"pairs":[[1,2]]}]})", log);
  ASSERT_EQ(oracle.warnings.size(), 1u);
  EXPECT_NE(oracle.warnings[0].find("<Z>"), std::string::npos);
  EXPECT_TRUE(oracle.relation.empty());
}
