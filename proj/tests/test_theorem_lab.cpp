#include "modrep/errors.hpp"
#include "modrep/theorem_lab.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace modrep;

namespace {

// Number of integer partitions of n, by the standard recurrence.
Int partitionCount(int n) {
  std::vector<Int> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part) {
    for (int k = part; k <= n; ++k) p[static_cast<std::size_t>(k)] += p[static_cast<std::size_t>(k - part)];
  }
  return p[static_cast<std::size_t>(n)];
}

// Abelian groups of order <= N, counted as products of partition numbers of
// the prime exponents.
Int abelianGroupCount(Int max_order) {
  Int total = 0;
  for (Int n = 2; n <= max_order; ++n) {
    Int count = 1;
    for (const auto& [p, e] : factorize(n)) count *= partitionCount(e);
    total += count;
  }
  return total;
}

}  // namespace

TEST(GenerateCorpus, Examples) {
  const auto c4 = generateCorpus(4);
  ASSERT_EQ(c4.modules.size(), 4u);
  EXPECT_EQ(c4.modules[0], makeModule({2}));
  EXPECT_EQ(c4.modules[1], makeModule({3}));
  EXPECT_EQ(c4.modules[2], makeModule({2, 2}));
  EXPECT_EQ(c4.modules[3], makeModule({4}));
  EXPECT_EQ(generateCorpus(2).modules, (std::vector<FinModule>{makeModule({2})}));
  const auto c8 = generateCorpus(8).modules;
  EXPECT_NE(std::find(c8.begin(), c8.end(), makeModule({2, 4})), c8.end());
  EXPECT_NE(std::find(c8.begin(), c8.end(), makeModule({2, 2, 2})), c8.end());
  EXPECT_EQ(generateCorpus(10).modules.size(), 13u);
  EXPECT_THROW(generateCorpus(1), ValidationError);
}

TEST(GenerateCorpus, MatchesIndependentCounts) {
  for (Int bound : {10, 50, 100, 200}) {
    const auto corpus = generateCorpus(bound);
    EXPECT_EQ(static_cast<Int>(corpus.modules.size()), abelianGroupCount(bound));
    auto chains = modrep::testing::allChains(bound);
    std::vector<std::vector<Int>> got;
    for (const auto& m : corpus.modules) got.push_back(m.invariantFactors());
    std::sort(chains.begin(), chains.end());
    auto sorted = got;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, chains);
    for (std::size_t i = 0; i + 1 < corpus.modules.size(); ++i) {
      const auto& a = corpus.modules[i];
      const auto& b = corpus.modules[i + 1];
      EXPECT_TRUE(a.order() < b.order() || (a.order() == b.order() && a.invariantFactors() < b.invariantFactors()));
    }
  }
  // Sum over n <= 200 of the product of partition numbers of the exponents.
  EXPECT_EQ(generateCorpus(200).modules.size(), 388u);
}

TEST(VerifyTheorem, Examples) {
  const auto su = verifyTheorem("second-uniqueness", makeModule({30}));
  EXPECT_TRUE(su.holds);
  EXPECT_FALSE(su.vacuous);
  ASSERT_TRUE(su.witness);
  EXPECT_EQ((*su.witness)["second"]["minimal_representations"], 1);

  const auto direct = verifyTheorem("thm-4.23-2", makeModule({18}));
  EXPECT_TRUE(direct.holds);
  EXPECT_FALSE(direct.vacuous);
  ASSERT_TRUE(direct.witness);
  EXPECT_EQ((*direct.witness)["example"]["is_direct"], true);
  EXPECT_EQ((*direct.witness)["example"]["summands"].size(), 2u);

  const auto p421 = verifyTheorem("prop-4.21-1", makeModule({6}));
  EXPECT_TRUE(p421.holds);
  EXPECT_FALSE(p421.vacuous);
  EXPECT_EQ((*p421.witness)["min"], nlohmann::json({2, 3}));
}

TEST(VerifyTheorem, VacuousVerdictsCarryNoEvidence) {
  const auto v = verifyTheorem("existence-minimal", makeModule({18}));
  EXPECT_TRUE(v.holds);
  EXPECT_TRUE(v.vacuous);
  EXPECT_FALSE(v.witness);
  EXPECT_FALSE(v.counterexample);
  EXPECT_TRUE(verifyTheorem("thm-4.26", makeModule({12})).vacuous);
  EXPECT_FALSE(verifyTheorem("thm-4.26", makeModule({30})).vacuous);
}

TEST(VerifyTheorem, Errors) {
  EXPECT_THROW(verifyTheorem("no-such-theorem", makeModule({2})), UnknownTheoremError);
  EXPECT_THROW(verifyTheorem("figure-1", FinModule()), ValidationError);
  SecondOptions tight;
  tight.lattice.max_submodules = 3;
  EXPECT_THROW(verifyTheorem("figure-1", makeModule({2, 2}), tight), ResourceCapError);
}

TEST(RunSuite, SmallCorpora) {
  const auto r2 = runSuite(2, theoremIds());
  EXPECT_EQ(r2.module_count, 1u);
  EXPECT_EQ(r2.totalFailures(), 0u);

  const auto r30 = runSuite(30, {"first-uniqueness-second"});
  EXPECT_EQ(r30.totalFailures(), 0u);
  EXPECT_GT(r30.tallies.at("first-uniqueness-second").pass, 0u);
  EXPECT_THROW(runSuite(30, {"bogus"}), UnknownTheoremError);
  EXPECT_THROW(runSuite(1, theoremIds()), ValidationError);
}

TEST(RunSuite, AllTheoremsHoldAtOrderFifty) {
  const auto r = runSuite(50, theoremIds());
  EXPECT_EQ(r.totalFailures(), 0u) << toText(r);
  EXPECT_TRUE(r.skipped.empty());
}

TEST(RunSuite, SkippedEntriesAreCountedSeparately) {
  SuiteOptions options;
  options.second.lattice.max_submodules = 5;
  const auto r = runSuite(8, {"figure-1"}, options);
  const auto& t = r.tallies.at("figure-1");
  EXPECT_GT(t.skipped, 0u);
  EXPECT_EQ(t.pass + t.vacuous + t.fail + t.skipped, r.module_count);
  EXPECT_EQ(r.skipped.size(), t.skipped);
}

TEST(RunSuite, DeterministicAcrossJobs) {
  SuiteOptions one, three;
  three.jobs = 3;
  const auto a = toJson(runSuite(40, theoremIds(), one)).dump();
  const auto b = toJson(runSuite(40, theoremIds(), three)).dump();
  EXPECT_EQ(a, b);
}
