#include <gtest/gtest.h>

#include <set>

#include "latrad/generators.hpp"

using namespace latrad;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

// Number of k-dimensional subspaces of GF(q)^d, straight from the product formula.
long subspaces_of_dim(long q, int d, int k) {
  long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    long qi = 1, qd = 1, qk = 1;
    for (int t = 0; t < i; ++t) qi *= q;
    for (int t = 0; t < d; ++t) qd *= q;
    for (int t = 0; t < k; ++t) qk *= q;
    num *= qd - qi;
    den *= qk - qi;
  }
  return num / den;
}

std::set<std::string> id_set(const Lattice& L) {
  auto v = L.ids();
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Named, Sizes) {
  Lattice c = chain_lattice(4);
  EXPECT_EQ(c.size(), 4);
  EXPECT_EQ(c.covers().size(), 3u);
  Lattice b = boolean_lattice(3);
  EXPECT_EQ(b.size(), 8);
  auto p = structure_profile(b);
  EXPECT_TRUE(p.modular && p.distributive);
  EXPECT_EQ(id_set(divisor_lattice(12)), (std::set<std::string>{"1", "2", "3", "4", "6", "12"}));
  EXPECT_EQ(partition_lattice(3).size(), 5);
  EXPECT_EQ(partition_lattice(4).size(), 15);
  EXPECT_EQ(divisor_lattice(30).canonical_form(), b.canonical_form());
}

TEST(Named, PartitionLatticeShape) {
  EXPECT_EQ(partition_lattice(3).canonical_form(), m3_lattice().canonical_form());
  auto p = structure_profile(partition_lattice(4));
  EXPECT_FALSE(p.modular);
  EXPECT_TRUE(p.graded);
}

TEST(Named, Factory) {
  auto d = make_named("divisor", {12});
  EXPECT_EQ(d.lattice->size(), 6);
  ASSERT_TRUE(d.relation);
  EXPECT_EQ(d.relation->size(), 12);
  auto s = make_named("subspace", {2, 2});
  ASSERT_TRUE(s.ranked);
  EXPECT_EQ(s.ranked->ambient, 2);
  EXPECT_EQ(make_named("dm-random", {6, 3}).lattice->canonical_form(), make_named("dm-random", {6, 3}).lattice->canonical_form());
  EXPECT_EQ(kind_of([] { make_named("torus", {}); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([] { make_named("chain", {}); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([] { partition_lattice(5); }), ErrorKind::SizeLimit);
}

TEST(Divisibility, ExpandedButNotContiguous) {
  for (int n : {4, 6, 12}) {
    auto p = classify(divisibility_on_chain(n));
    EXPECT_TRUE(p.up_expanded && p.down_expanded && p.transitive);
    EXPECT_FALSE(p.up_contiguous);
    EXPECT_FALSE(p.down_contiguous);
  }
}

TEST(Product, Examples) {
  Lattice p = product_lattice(chain_lattice(2), chain_lattice(2));
  EXPECT_EQ(p.canonical_form(), diamond_lattice().canonical_form());
  EXPECT_EQ(product_lattice(chain_lattice(3), chain_lattice(4)).size(), 12);
}

TEST(Subspace, Counts) {
  auto s22 = subspace_lattice(2, 2);
  EXPECT_EQ(s22.lattice->size(), 5);
  EXPECT_EQ(s22.lattice->canonical_form(), m3_lattice().canonical_form());
  EXPECT_EQ(subspace_lattice(2, 3).lattice->size(), 16);
  for (int q : {2, 3})
    for (int d = 1; d <= 3; ++d) {
      auto R = subspace_lattice(q, d);
      std::vector<long> byRank(d + 1);
      for (int x = 0; x < R.lattice->size(); ++x) ++byRank[R.rank[x]];
      for (int k = 0; k <= d; ++k) EXPECT_EQ(byRank[k], subspaces_of_dim(q, d, k)) << q << "^" << d << " rank " << k;
      EXPECT_TRUE(structure_profile(*R.lattice).modular);
    }
}

TEST(Subspace, Limits) {
  EXPECT_EQ(kind_of([] { subspace_lattice(6, 2); }), ErrorKind::PreconditionFailed);
  EXPECT_EQ(kind_of([] { subspace_lattice(2, 5); }), ErrorKind::SizeLimit);
}

TEST(Subspace, RankInequalities) {
  auto R = subspace_lattice(2, 3);
  const Lattice& L = *R.lattice;
  const auto& r = R.rank;
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b) {
      EXPECT_EQ(r[a] + r[b], r[L.join(a, b)] + r[L.meet(a, b)]);
      if (!L.leq(a, b)) continue;
      for (int k = 0; k < L.size(); ++k) {
        EXPECT_LE(r[L.join(b, k)] - r[L.join(a, k)], r[b] - r[a]);
        EXPECT_LE(r[L.meet(b, k)] - r[L.meet(a, k)], r[b] - r[a]);
      }
    }
}

TEST(Downset, Examples) {
  Poset anti = make_poset({"x", "y"}, {});
  EXPECT_EQ(downset_lattice(anti).canonical_form(), diamond_lattice().canonical_form());
  Poset two = make_poset({"x", "y"}, {{0, 1}});
  EXPECT_EQ(downset_lattice(two).canonical_form(), chain_lattice(3).canonical_form());
  Poset vee = make_poset({"b", "x", "y"}, {{0, 1}, {0, 2}});
  Lattice v = downset_lattice(vee);
  EXPECT_EQ(v.size(), 5);
  EXPECT_TRUE(structure_profile(v).distributive);
}

TEST(Downset, AllFourElementPosetsGiveDistributiveLattices) {
  auto ps = four_element_posets();
  EXPECT_EQ(ps.size(), 16u);
  for (const Poset& P : ps) {
    Lattice L = downset_lattice(P);
    auto sp = structure_profile(L);
    EXPECT_TRUE(sp.jid && sp.mid && sp.distributive);
  }
}

TEST(DMCompletion, Examples) {
  for (const Lattice& L : {n5_lattice(), m3_lattice(), chain_lattice(4)})
    EXPECT_EQ(dm_completion(poset_of(L)).canonical_form(), L.canonical_form());
  EXPECT_EQ(dm_completion(make_poset({"x", "y"}, {})).canonical_form(), diamond_lattice().canonical_form());
}

TEST(DMCompletion, Crown) {
  // a_i < b_j whenever i != j
  std::vector<std::pair<int, int>> lt;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) lt.emplace_back(i, 3 + j);
  Poset crown = make_poset({"a1", "a2", "a3", "b1", "b2", "b3"}, lt);
  Lattice L = dm_completion(crown);
  EXPECT_EQ(L.size(), 8);
  EXPECT_EQ(L.canonical_form(), boolean_lattice(3).canonical_form());
  for (const char* id : {"a1", "a2", "a3", "b1", "b2", "b3"}) EXPECT_GE(L.find(id), 0) << id;
}

TEST(RandomPoset, IsSeeded) {
  for (uint64_t s : {1u, 7u, 99u}) {
    Poset a = random_poset(6, s), b = random_poset(6, s);
    EXPECT_EQ(dm_completion(a).canonical_form(), dm_completion(b).canonical_form());
  }
}

TEST(Codim, Examples) {
  auto R = subspace_lattice(2, 2);
  auto L = R.lattice;
  EXPECT_TRUE(rel_codim(R, Bound::of(1)) == Rel::identity(L));
  EXPECT_TRUE(rel_codim(R, Bound::inf()) == builtin_rel(L, Builtin::Leq));
  Rel two = rel_codim(R, Bound::of(2));
  EXPECT_TRUE(classify(two).hh);
  EXPECT_FALSE(two.has(L->bottom(), L->top()));
  EXPECT_TRUE(two == builtin_rel(L, Builtin::Gap));
}

TEST(Codim, Perp) {
  auto R = subspace_lattice(2, 2);
  auto L = R.lattice;
  EXPECT_TRUE(rel_codim_perp(R, Bound::of(0)) == builtin_rel(L, Builtin::Leq));
  EXPECT_TRUE(rel_codim_perp(R, Bound::of(2)) == Rel::identity(L));
  EXPECT_TRUE(classify(rel_codim_perp(R, Bound::of(1))).hh);
  EXPECT_TRUE(rel_codim_perp(R, Bound::inf()) == Rel::identity(L));
  auto C = ranked(share(chain_lattice(3)));
  EXPECT_EQ(kind_of([&] { rel_codim_perp(C, Bound::of(1)); }), ErrorKind::PreconditionFailed);
}

TEST(Codim, AllHHOnSubspaceLattices) {
  for (auto [q, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    auto R = subspace_lattice(q, d);
    for (int n = 0; n <= d + 1; ++n) {
      EXPECT_TRUE(classify(rel_codim(R, Bound::of(n))).hh);
      EXPECT_TRUE(classify(rel_codim_perp(R, Bound::of(n))).hh);
    }
  }
}

TEST(Ranked, NeedsGrading) {
  EXPECT_EQ(kind_of([] { ranked(share(n5_lattice())); }), ErrorKind::PreconditionFailed);
  auto R = ranked(share(boolean_lattice(3)));
  EXPECT_EQ(R.rank[R.lattice->top()], 3);
}
