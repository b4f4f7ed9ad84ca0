#include "modrep/errors.hpp"
#include "modrep/lattice.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace modrep;
using modrep::testing::ElementModel;
using modrep::testing::smallModules;

TEST(EnumerateSubmodules, Counts) {
  EXPECT_EQ(enumerateSubmodules(makeModule({6})).size(), 4u);
  EXPECT_EQ(enumerateSubmodules(makeModule({2, 2})).size(), 5u);
  EXPECT_EQ(enumerateSubmodules(FinModule()).size(), 1u);
  for (Int p : {2, 3, 5}) {
    EXPECT_EQ(enumerateSubmodules(makeModule({p, p})).size(), static_cast<std::size_t>(p + 3));
  }
}

TEST(EnumerateSubmodules, MatchesExhaustiveClosure) {
  for (const auto& m : smallModules(32)) {
    const ElementModel model(m);
    const auto expected = model.allSubgroups();
    const auto subs = enumerateSubmodules(m);
    ASSERT_EQ(subs.size(), expected.size()) << m.toString();
    std::set<std::set<Int>> seen;
    for (const auto& s : subs) seen.insert(model.elementsOf(s));
    EXPECT_EQ(seen, expected) << m.toString();
  }
}

TEST(EnumerateSubmodules, CountFormulaAgrees) {
  for (const auto& m : smallModules(200)) {
    EXPECT_EQ(BigInt(enumerateSubmodules(m).size()), countSubmodules(m)) << m.toString();
  }
  EXPECT_EQ(countSubmodules(makeModule({2, 2, 2, 2, 2, 2, 2})), 29212);
}

TEST(EnumerateSubmodules, CanonicalOrder) {
  for (const auto& m : smallModules(64)) {
    const auto subs = enumerateSubmodules(m);
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
      EXPECT_TRUE(canonicalLess(subs[i], subs[i + 1])) << m.toString() << " at " << i;
    }
  }
}

TEST(EnumerateSubmodules, ResourceCap) {
  LatticeOptions tight;
  tight.max_submodules = 4;
  EXPECT_THROW(enumerateSubmodules(makeModule({2, 2}), tight), ResourceCapError);
  EXPECT_NO_THROW(enumerateSubmodules(makeModule({6}), tight));
  EXPECT_THROW(maximalSubmodules(makeModule({2, 2}), tight), ResourceCapError);
}

TEST(SubmoduleLattice, QueriesAgreeWithSubmoduleOperations) {
  for (const auto& m : smallModules(40)) {
    const SubmoduleLattice lat(m);
    EXPECT_TRUE(lat.at(lat.zero()).isZero());
    EXPECT_TRUE(lat.at(lat.whole()).isWhole());
    for (SubmoduleLattice::Index i = 0; i < lat.size(); ++i) {
      EXPECT_EQ(lat.indexOf(lat.at(i)), i);
      for (SubmoduleLattice::Index j = 0; j < lat.size(); ++j) {
        const auto& a = lat.at(i);
        const auto& b = lat.at(j);
        EXPECT_EQ(lat.contains(i, j), isContained(b, a));
        EXPECT_EQ(lat.meetOrder(i, j), intersectOf(a, b).order());
        EXPECT_EQ(lat.sumIsWhole(i, j), sumOf(a, b).isWhole());
        EXPECT_EQ(lat.at(lat.join(i, j)), sumOf(a, b));
        EXPECT_EQ(lat.at(lat.meet(i, j)), intersectOf(a, b));
      }
    }
  }
}

TEST(SubmoduleLattice, LowerCoversArePrimeIndexSubgroups) {
  for (const auto& m : smallModules(36)) {
    const SubmoduleLattice lat(m);
    for (SubmoduleLattice::Index i = 0; i < lat.size(); ++i) {
      const auto covers = lat.lowerCovers(i);
      const auto maxes = maximalSubmodules(moduleOfSubmodule(lat.at(i)));
      EXPECT_EQ(covers.size(), lat.at(i).isZero() ? 0u : maxes.size()) << m.toString();
      for (auto c : covers) EXPECT_TRUE(isPrime(lat.order(i) / lat.order(c)));
    }
  }
}
