#include <gtest/gtest.h>

#include <numeric>

#include "latrad/generators.hpp"
#include "oracle.hpp"

using namespace latrad;

namespace {

Lattice diamond() { return Lattice::from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}); }

oracle::Order oracle_of(const Lattice& L) {
  std::vector<std::pair<std::string, std::string>> cs;
  for (auto [x, y] : L.covers()) cs.emplace_back(L.id(x), L.id(y));
  return oracle::from_covers(L.ids(), cs);
}

std::vector<Lattice> small_zoo() {
  return {chain_lattice(2), chain_lattice(5), diamond_lattice(), m3_lattice(), n5_lattice(), boolean_lattice(3),
          divisor_lattice(12), partition_lattice(4), *subspace_lattice(2, 3).lattice, dm_completion(random_poset(6, 3))};
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST(FromCovers, TwoChain) {
  Lattice L = Lattice::from_covers({"0", "1"}, {{"0", "1"}});
  EXPECT_EQ(L.size(), 2);
  EXPECT_EQ(L.id(L.bottom()), "0");
  EXPECT_EQ(L.id(L.top()), "1");
}

TEST(FromCovers, Diamond) {
  Lattice L = diamond();
  EXPECT_EQ(L.size(), 4);
  EXPECT_EQ(L.covers().size(), 4u);
  EXPECT_EQ(L.id(L.join(L.index("a"), L.index("b"))), "1");
  EXPECT_EQ(L.id(L.meet(L.index("a"), L.index("b"))), "0");
}

TEST(FromCovers, MissingTopIsNotALattice) {
  EXPECT_EQ(kind_of([] { Lattice::from_covers({"x", "y", "z"}, {{"x", "y"}, {"x", "z"}}); }), ErrorKind::NotALattice);
}

TEST(FromCovers, CycleIsRejected) {
  EXPECT_EQ(kind_of([] { Lattice::from_covers({"x", "y"}, {{"x", "y"}, {"y", "x"}}); }), ErrorKind::NotALattice);
}

TEST(Bounds, SetBounds) {
  Lattice L = diamond();
  Bits ab = Bits::of({L.index("a"), L.index("b")});
  EXPECT_EQ(L.id(L.meet_set(ab)), "0");
  EXPECT_EQ(L.id(L.join_set(ab)), "1");
  for (int x = 0; x < L.size(); ++x) {
    EXPECT_EQ(L.meet_set(Bits::single(x)), x);
    EXPECT_EQ(L.join_set(Bits::single(x)), x);
  }
}

TEST(Bounds, DivisorTwelveIsGcdLcm) {
  Lattice L = divisor_lattice(12);
  Bits s = Bits::of({L.index("4"), L.index("6")});
  EXPECT_EQ(L.id(L.meet_set(s)), "2");
  EXPECT_EQ(L.id(L.join_set(s)), "12");
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y) {
      int a = std::stoi(L.id(x)), b = std::stoi(L.id(y));
      EXPECT_EQ(std::stoi(L.id(L.meet(x, y))), std::gcd(a, b));
      EXPECT_EQ(std::stoi(L.id(L.join(x, y))), std::lcm(a, b));
    }
}

TEST(Bounds, AgreeWithOracleOnZoo) {
  for (const Lattice& L : small_zoo()) {
    auto o = oracle_of(L);
    for (int x = 0; x < L.size(); ++x)
      for (int y = 0; y < L.size(); ++y) {
        ASSERT_EQ(L.leq(x, y), o.le[x][y]);
        ASSERT_EQ(L.join(x, y), oracle::join(o, x, y));
        ASSERT_EQ(L.meet(x, y), oracle::meet(o, x, y));
      }
  }
}

TEST(Intervals, Examples) {
  Lattice L = diamond();
  int z = L.index("0"), a = L.index("a"), one = L.index("1");
  EXPECT_EQ(L.interval(z, a), Bits::of({z, a}));
  EXPECT_EQ(L.interval(z, one), L.all());
  Lattice C = chain_lattice(4);
  EXPECT_EQ(L.interval(z, z).count(), 1);
  EXPECT_EQ(C.interval(2, 3), Bits::of({2, 3}));
}

TEST(Gaps, Examples) {
  Lattice L = diamond();
  EXPECT_TRUE(L.is_gap(L.index("0"), L.index("a")));
  EXPECT_FALSE(L.is_gap(L.index("0"), L.index("1")));
  EXPECT_TRUE(chain_lattice(2).is_gap(0, 1));
}

TEST(Covers, AreTransitiveReduction) {
  for (const Lattice& L : small_zoo()) {
    auto o = oracle_of(L);
    std::set<std::pair<int, int>> want;
    for (int x = 0; x < L.size(); ++x)
      for (int y = 0; y < L.size(); ++y) {
        if (x == y || !o.le[x][y]) continue;
        bool direct = true;
        for (int z = 0; z < L.size(); ++z)
          if (z != x && z != y && o.le[x][z] && o.le[z][y]) direct = false;
        if (direct) want.emplace(x, y);
      }
    std::set<std::pair<int, int>> got(L.covers().begin(), L.covers().end());
    EXPECT_EQ(got, want);
  }
}

TEST(StructureProfile, Pentagon) {
  auto p = structure_profile(n5_lattice());
  EXPECT_FALSE(p.modular);
  EXPECT_FALSE(p.distributive);
}

TEST(StructureProfile, M3ModularNotDistributive) {
  auto p = structure_profile(m3_lattice());
  EXPECT_TRUE(p.modular);
  EXPECT_FALSE(p.distributive);
}

TEST(StructureProfile, FiniteLatticesHaveChainDistributivity) {
  for (const Lattice& L : small_zoo()) {
    auto p = structure_profile(L);
    EXPECT_TRUE(p.jidc);
    EXPECT_TRUE(p.midc);
    if (p.distributive) {
      EXPECT_TRUE(p.modular);
    }
    if (p.jid && p.mid) {
      EXPECT_TRUE(p.distributive);
    }
  }
}

TEST(StructureProfile, ModularityAgreesWithOracle) {
  for (const Lattice& L : small_zoo()) {
    auto o = oracle_of(L);
    bool modular = true, distributive = true;
    for (int x = 0; x < L.size(); ++x)
      for (int y = 0; y < L.size(); ++y)
        for (int z = 0; z < L.size(); ++z) {
          int lhs = oracle::join(o, x, oracle::meet(o, y, z)), rhs = oracle::meet(o, oracle::join(o, x, y), oracle::join(o, x, z));
          if (lhs != rhs) distributive = false;
          if (o.le[x][z] && oracle::join(o, x, oracle::meet(o, y, z)) != oracle::meet(o, oracle::join(o, x, y), z)) modular = false;
        }
    auto p = structure_profile(L);
    EXPECT_EQ(p.modular, modular);
    EXPECT_EQ(p.distributive, distributive);
  }
}

TEST(MaximalChains, Examples) {
  Lattice L = diamond();
  auto cs = L.maximal_chains(L.bottom(), L.top());
  ASSERT_EQ(cs.size(), 2u);
  Lattice C = chain_lattice(3);
  EXPECT_EQ(C.maximal_chains(C.bottom(), C.top()), (std::vector<std::vector<int>>{{0, 1, 2}}));
  Lattice N = n5_lattice();
  auto ns = N.maximal_chains(N.index("a"), N.index("d"));
  std::set<std::string> names;
  for (const auto& c : ns) names.insert(join_str(c, "<", [&](int x) { return N.id(x); }));
  EXPECT_EQ(names, (std::set<std::string>{"a<b<c<d", "a<e<d"}));
}

TEST(Automorphisms, Counts) {
  EXPECT_EQ(chain_lattice(3).automorphisms().size(), 1u);
  EXPECT_EQ(diamond_lattice().automorphisms().size(), 2u);
  EXPECT_EQ(m3_lattice().automorphisms().size(), 6u);
  EXPECT_EQ(n5_lattice().automorphisms().size(), 1u);
  EXPECT_EQ(boolean_lattice(3).automorphisms().size(), 6u);
}

TEST(Automorphisms, PreserveOrder) {
  for (const Lattice& L : small_zoo()) {
    if (L.size() > 10) continue;
    for (const auto& t : L.automorphisms())
      for (int x = 0; x < L.size(); ++x)
        for (int y = 0; y < L.size(); ++y) ASSERT_EQ(L.leq(x, y), L.leq(t[x], t[y]));
  }
}

TEST(Dual, SwapsBounds) {
  Lattice N = n5_lattice();
  Lattice D = N.dual();
  for (int x = 0; x < N.size(); ++x)
    for (int y = 0; y < N.size(); ++y) EXPECT_EQ(D.join(x, y), N.meet(x, y));
}

TEST(CanonicalForm, DetectsIsomorphism) {
  EXPECT_EQ(m3_lattice().canonical_form(), subspace_lattice(2, 2).lattice->canonical_form());
  EXPECT_EQ(diamond_lattice().canonical_form(), boolean_lattice(2).canonical_form());
  EXPECT_NE(m3_lattice().canonical_form(), n5_lattice().canonical_form());
}
