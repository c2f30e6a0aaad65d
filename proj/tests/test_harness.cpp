#include "oracles.hpp"

#include <ckhopf/harness.hpp>

#include <gtest/gtest.h>

using namespace ckhopf;

namespace {

harness::SuiteParams small_params()
{
  harness::SuiteParams p;
  p.max_edges = 2;
  p.dimension = 3;
  p.random_triples = 10;
  return p;
}

const harness::CheckResult* find_check(const harness::VerificationReport& r, const std::string& name)
{
  for (const auto& c : r.checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

} // namespace

TEST(Oracle, NamedCounts)
{
  EXPECT_EQ(harness::oracle_aut(corpus::loop1()), 2);
  EXPECT_EQ(harness::oracle_aut(corpus::bubble()), 4);
  EXPECT_EQ(harness::oracle_aut(Graph()), 1);
  EXPECT_TRUE(harness::oracle_iso(corpus::bubble(), canonical_form(corpus::bubble()).graph));
  EXPECT_FALSE(harness::oracle_iso(corpus::loop1(), corpus::dot(1)));
}

// The harness oracle (plain permutation search) and the test oracle
// (backtracking) agree with each other.
TEST(Oracle, AgreesWithBacktracking)
{
  const auto graphs = harness::corpus_graphs(2);
  for (const auto& a : graphs) {
    EXPECT_EQ(harness::oracle_aut(a.graph), oracle::aut(a.graph));
    for (const auto& b : graphs)
      EXPECT_EQ(harness::oracle_iso(a.graph, b.graph), oracle::iso(a.graph, b.graph));
  }
}

TEST(Oracle, ResourceBound)
{
  const Graph big = disjoint_union(corpus::tadpole2(), corpus::tadpole2());
  try {
    harness::oracle_aut(big);
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ResourceBound);
  }
}

TEST(Corpus, ContainsNamedGraphsAndAllClasses)
{
  const auto graphs = harness::corpus_graphs(2);
  std::set<CanonicalKey> keys;
  for (const auto& cf : graphs)
    keys.insert(cf.key);
  EXPECT_EQ(keys.size(), graphs.size());
  for (const auto& named : corpus::named_graphs())
    EXPECT_TRUE(keys.count(canonical_key(named.graph))) << named.name;
  for (int n = 0; n <= 2; ++n)
    for (const auto& cf : enumerate_graphs(n, GraphFilter::All))
      EXPECT_TRUE(keys.count(cf.key));
}

TEST(Suites, PassOnSmallCorpus)
{
  for (const std::string& name : harness::suite_names()) {
    if (name == "duality")
      continue;
    const auto r = harness::run_suite(name, small_params());
    EXPECT_TRUE(r.passed()) << name << "\n" << harness::to_table(r);
    EXPECT_FALSE(r.checks.empty());
  }
}

TEST(Suites, DualityIdentitiesHold)
{
  const auto r = harness::run_suite("duality", small_params());
  for (const auto& c : r.checks)
    if (c.name != "twoleg_star_loop1_instance") {
      EXPECT_NE(c.status, "fail") << c.name;
    }
}

TEST(Suites, FullSubgraphVariantIsReported)
{
  harness::SuiteParams p = small_params();
  p.full_subgraph_term = true;
  const auto r = harness::run_suite("hopf", p);
  const auto* coassoc = find_check(r, "coassociativity");
  ASSERT_NE(coassoc, nullptr);
  EXPECT_GT(coassoc->cases, 0u);
  const auto* anti = find_check(r, "antipode_axiom");
  ASSERT_NE(anti, nullptr);
  EXPECT_EQ(anti->status, "skipped");
}

TEST(Suites, Reproducible)
{
  const auto a = harness::to_json(harness::run_suite("prelie", small_params())).dump();
  const auto b = harness::to_json(harness::run_suite("prelie", small_params())).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.find("seconds"), std::string::npos);
}

TEST(Suites, AllPrefixesNames)
{
  harness::SuiteParams p = small_params();
  p.max_edges = 1;
  const auto r = harness::run_suite("all", p);
  EXPECT_NE(find_check(r, "oracle/automorphism_count"), nullptr);
  EXPECT_NE(find_check(r, "hopf/coassociativity"), nullptr);
}

TEST(Suites, UnknownName)
{
  EXPECT_THROW(harness::run_suite("nope", small_params()), Error);
}

TEST(Report, FailureKeepsFirstCounterexample)
{
  harness::CheckResult c("demo");
  c.record(true, [] { return harness::json("unused"); });
  c.record(false, [] { return harness::json("first"); });
  c.record(false, [] { return harness::json("second"); });
  EXPECT_EQ(c.status, "fail");
  EXPECT_EQ(c.cases, 3u);
  EXPECT_EQ(c.failures, 2u);
  EXPECT_EQ(c.counterexample, "first");
}
