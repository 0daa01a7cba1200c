#include <gtest/gtest.h>

#include <set>

#include "latrad/closure.hpp"
#include "latrad/generators.hpp"
#include "oracle.hpp"

using namespace latrad;

namespace {

LatticePtr B2() { return share(diamond_lattice()); }
Rel on(const LatticePtr& L, std::vector<std::pair<std::string, std::string>> ps) { return rel_from_pairs(L, ps); }

oracle::Order oracle_of(const Lattice& L) {
  std::vector<std::pair<std::string, std::string>> cs;
  for (auto [x, y] : L.covers()) cs.emplace_back(L.id(x), L.id(y));
  return oracle::from_covers(L.ids(), cs);
}

Bits ids(const Lattice& L, std::vector<std::string> xs) {
  Bits b;
  for (auto& s : xs) b.set(L.index(s));
  return b;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InternalInconsistency;
}

std::vector<Bits> all_subsets(int n) {
  std::vector<Bits> out;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    Bits b;
    for (int i = 0; i < n; ++i)
      if ((m >> i) & 1) b.set(i);
    out.push_back(b);
  }
  return out;
}

}  // namespace

TEST(EnvelopeCheck, Examples) {
  auto L = B2();
  auto top = envelope_check(L, Bits::single(L->top()));
  EXPECT_TRUE(top.enveloping);
  EXPECT_FALSE(top.inscribing);
  auto bot = envelope_check(L, Bits::single(L->bottom()));
  EXPECT_TRUE(bot.inscribing);
  EXPECT_EQ(bot.kind(), "inscribing");
  EXPECT_EQ(envelope_check(L, ids(*L, {"a", "b", "1"})).kind(), "neither");
}

TEST(EnvelopeCheck, AgreesWithOracleDefinition) {
  for (auto L : {B2(), share(n5_lattice()), share(m3_lattice()), share(boolean_lattice(3))}) {
    auto o = oracle_of(*L);
    for (const Bits& s : all_subsets(L->size())) {
      bool env = true, ins = true;
      for (int x = 0; x < o.n(); ++x) {
        // an element of s above x that lies below every other such element, and the mirror
        bool least = false, greatest = false;
        for (int y : s.list()) {
          bool lo = o.le[x][y], hi = o.le[y][x];
          for (int z : s.list()) {
            if (o.le[x][z] && !o.le[y][z]) lo = false;
            if (o.le[z][x] && !o.le[z][y]) hi = false;
          }
          least = least || lo;
          greatest = greatest || hi;
        }
        env = env && least;
        ins = ins && greatest;
      }
      auto f = envelope_check(L, s);
      ASSERT_EQ(f.enveloping, env);
      ASSERT_EQ(f.inscribing, ins);
    }
  }
}

TEST(EnvelopeMap, Examples) {
  auto L = B2();
  EXPECT_TRUE(envelope_map(envelope_check(L, Bits::single(L->top()))) == constant_map(L, L->top()));
  EXPECT_TRUE(envelope_map(envelope_check(L, L->all())) == identity_map(L));
  EXPECT_EQ(kind_of([&] { envelope_map(envelope_check(L, ids(*L, {"a", "b"}))); }), ErrorKind::WrongKind);
  EXPECT_EQ(kind_of([&] { envelope_closure(envelope_check(L, Bits::single(L->bottom()))); }), ErrorKind::WrongKind);
}

// Enveloping sets and radical maps determine each other on every host with at most four elements.
TEST(EnvelopeMap, BijectionWithRadicalMaps) {
  for (auto L : {B2(), share(chain_lattice(4)), share(chain_lattice(3))}) {
    auto o = oracle_of(*L);
    int envelopes = 0, inscribed = 0;
    for (const Bits& s : all_subsets(L->size())) {
      auto f = envelope_check(L, s);
      if (f.enveloping) {
        auto m = envelope_closure(f);
        EXPECT_EQ(m.fixpoints, s);
        EXPECT_TRUE(oracle::closure_operator(o, m.table));
        ++envelopes;
      }
      if (f.inscribing) {
        EXPECT_EQ(inscribe_interior(f).fixpoints, s);
        ++inscribed;
      }
    }
    int radical = 0, dual = 0;
    for (const auto& g : all_maps(L)) {
      EXPECT_EQ(g.profile.radical, oracle::closure_operator(o, g.table));
      if (g.profile.radical) {
        ++radical;
        EXPECT_TRUE(envelope_closure(envelope_check(L, g.fixpoints)) == g);
      }
      if (g.profile.dual_radical) {
        ++dual;
        EXPECT_TRUE(inscribe_interior(envelope_check(L, g.fixpoints)) == g);
      }
    }
    EXPECT_EQ(radical, envelopes);
    EXPECT_EQ(dual, inscribed);
  }
}

TEST(MapLatticeOps, Examples) {
  auto L = B2();
  auto id = identity_map(L), top = constant_map(L, L->top());
  auto [j, m] = map_lattice_ops({id, top});
  EXPECT_TRUE(m == id);
  EXPECT_TRUE(j == top);
  auto [j1, m1] = map_lattice_ops({top});
  EXPECT_TRUE(j1 == top);
  EXPECT_TRUE(m1 == top);
}

TEST(MapLatticeOps, MeetOfRadicalMapsFixesMeetClosure) {
  auto L = B2();
  std::vector<LatticeMap> rad;
  for (const auto& g : all_maps(L))
    if (g.profile.radical) rad.push_back(g);
  for (const auto& f : rad)
    for (const auto& g : rad) {
      auto meet = map_lattice_ops({f, g}).second;
      EXPECT_TRUE(meet.profile.radical);
      EXPECT_EQ(meet.fixpoints, meet_closure(*L, f.fixpoints | g.fixpoints));
    }
}

TEST(MapLatticeOps, HostMismatch) {
  EXPECT_EQ(kind_of([] { map_lattice_ops({identity_map(share(diamond_lattice())), identity_map(share(chain_lattice(3)))}); }),
            ErrorKind::HostMismatch);
}

TEST(RadJoin, Examples) {
  auto L = B2();
  auto t = rad_join({identity_map(L)});
  EXPECT_TRUE(t.fixpoint() == identity_map(L));
  EXPECT_EQ(t.steps.size(), 1u);
  EXPECT_TRUE(t.identity_in_generators);
  EXPECT_TRUE(rad_join({constant_map(L, L->top())}).fixpoint() == constant_map(L, L->top()));
  auto f1 = envelope_closure(envelope_check(L, ids(*L, {"a", "1"})));
  auto f2 = envelope_closure(envelope_check(L, ids(*L, {"b", "1"})));
  auto u = rad_join({f1, f2});
  EXPECT_EQ(u.fixpoint().fixpoints, Bits::single(L->top()));
  EXPECT_FALSE(u.identity_in_generators);
}

TEST(RadJoin, RejectsNonRadical) {
  auto L = B2();
  EXPECT_EQ(kind_of([&] { rad_join({constant_map(L, L->bottom())}); }), ErrorKind::NotRadical);
}

TEST(RefspaceClosures, Examples) {
  auto L = B2();
  Rel le = builtin_rel(L, Builtin::Leq), eq = Rel::identity(L);
  for (const auto& [name, v] : refspace_closures(le).items) EXPECT_TRUE(v == le) << name;
  for (const auto& [name, v] : refspace_closures(eq).items) EXPECT_TRUE(v == eq) << name;
  Rel r = on(L, {{"0", "a"}});
  Rel h = refspace_closures(r).get("h_closure");
  EXPECT_TRUE(h.has(L->index("b"), L->index("1")));
  EXPECT_TRUE(h == on(L, {{"0", "a"}, {"b", "1"}}));
}

// Each closure is the least member of its class above r, checked against the class by enumeration.
TEST(RefspaceClosures, AreLeastInTheirClass) {
  for (auto L : {B2(), share(chain_lattice(4)), share(n5_lattice())}) {
    auto rels = all_relations(L, 8);
    std::vector<PropertyProfile> ps;
    for (const Rel& r : rels) ps.push_back(classify(r));
    auto member = [&](const std::string& name, const PropertyProfile& p) {
      if (name == "up_contiguous") return p.up_contiguous;
      if (name == "down_contiguous") return p.down_contiguous;
      if (name == "up_expanded") return p.up_expanded;
      if (name == "down_expanded") return p.down_expanded;
      if (name == "order") return p.transitive;
      if (name == "h_closure") return p.h_relation;
      return p.dual_h_relation;
    };
    for (const Rel& r : rels) {
      auto c = refspace_closures(r);
      for (std::string name : {"up_contiguous", "down_contiguous", "up_expanded", "down_expanded", "order", "h_closure", "dual_h_closure"}) {
        const Rel& v = c.get(name);
        for (std::size_t k = 0; k < rels.size(); ++k)
          if (member(name, ps[k]) && r.subset_of(rels[k])) {
            ASSERT_TRUE(v.subset_of(rels[k])) << name << " " << r.describe();
          }
      }
      for (std::string name : {"h_interior", "dual_h_interior"}) {
        const Rel& v = c.get(name);
        bool h = name == "h_interior";
        for (std::size_t k = 0; k < rels.size(); ++k)
          if ((h ? ps[k].h_relation : ps[k].dual_h_relation) && rels[k].subset_of(r)) {
            ASSERT_TRUE(rels[k].subset_of(v)) << name;
          }
      }
    }
  }
}

TEST(Tilde, Examples) {
  auto L = B2();
  Rel r = on(L, {{"0", "a"}});
  auto t = tilde(r);
  EXPECT_TRUE(t.fixpoint() == r);
  EXPECT_EQ(t.steps.size(), 1u);
  auto C = share(chain_lattice(3));
  Rel c = rel_from_pairs(C, std::vector<std::pair<int, int>>{{0, 2}});
  EXPECT_TRUE(tilde(c).fixpoint() == builtin_rel(C, Builtin::Leq));
}

TEST(Tilde, IsLeastTTOrderAbove) {
  for (auto L : {B2(), share(chain_lattice(4)), share(m3_lattice()), share(n5_lattice())}) {
    auto rels = all_relations(L, 8);
    std::vector<Rel> tt;
    for (const Rel& r : rels)
      if (classify(r).tt_order) tt.push_back(r);
    for (const Rel& r : rels) {
      Rel t = tilde(r).fixpoint();
      ASSERT_TRUE(classify(t).tt_order);
      for (const Rel& x : tt)
        if (r.subset_of(x)) {
          ASSERT_TRUE(t.subset_of(x));
        }
    }
  }
}

TEST(Bar, Examples) {
  auto C = share(chain_lattice(4));
  EXPECT_TRUE(bar(builtin_rel(C, Builtin::Gap)).fixpoint() == builtin_rel(C, Builtin::Leq));
  auto L = B2();
  EXPECT_TRUE(bar(Rel::identity(L)).fixpoint() == Rel::identity(L));
  auto N = share(n5_lattice());
  Rel nb = bar(builtin_rel(N, Builtin::Gap)).fixpoint();
  EXPECT_TRUE(nb == builtin_rel(N, Builtin::Leq));
}

TEST(Bar, NeedNotBeContiguous) {
  auto C = share(chain_lattice(3));
  Rel r = rel_from_pairs(C, std::vector<std::pair<int, int>>{{0, 2}});
  Rel b = bar(r).fixpoint();
  EXPECT_TRUE(b == r);
  EXPECT_FALSE(classify(b).up_contiguous);
}

TEST(Bar, InsideTildeAndEqualOnHHModular) {
  for (auto L : {B2(), share(m3_lattice()), share(chain_lattice(4))})
    for (const Rel& r : all_relations(L, 8)) {
      Rel b = bar(r).fixpoint(), t = tilde(r).fixpoint();
      ASSERT_TRUE(b.subset_of(t));
      if (classify(r).hh) {
        ASSERT_TRUE(b == t);
        ASSERT_TRUE(classify(b).rr_order);
      }
    }
}

TEST(GdWitness, Examples) {
  auto C = share(chain_lattice(4));
  Rel gap = builtin_rel(C, Builtin::Gap);
  EXPECT_EQ(gd_witness(gap, 2, 2), std::vector<int>{2});
  EXPECT_EQ(gd_witness(gap, 0, 3), (std::vector<int>{0, 1, 2, 3}));
  auto L = B2();
  Rel r = on(L, {{"0", "a"}, {"a", "1"}});
  EXPECT_EQ(gd_witness(r, L->bottom(), L->top()), (std::vector<int>{L->bottom(), L->index("a"), L->top()}));
  EXPECT_EQ(kind_of([&] { gd_witness(r, L->bottom(), L->index("b")); }), ErrorKind::NotBarRelated);
}

TEST(Topology, Examples) {
  auto P = share(boolean_lattice(3));
  EXPECT_EQ(topology_bridge(identity_map(P)), P->all());
  std::vector<int> t(P->size(), P->top());
  t[P->bottom()] = P->bottom();
  auto f = classify_map(P, t);
  EXPECT_EQ(topology_bridge(f), Bits::of({P->bottom(), P->top()}));
  Bits closed = ids(*P, {"{}", "{1}", "{1,2}", "{1,2,3}"});
  auto g = closure_of_topology(P, closed);
  EXPECT_EQ(topology_bridge(g), closed);
  EXPECT_EQ(g(P->index("{2}")), P->index("{1,2}"));
  EXPECT_EQ(g(P->index("{3}")), P->top());
}

TEST(Topology, RoundtripsEveryClosedFamily) {
  auto P = share(boolean_lattice(3));
  int families = 0;
  for (const Bits& s : all_subsets(P->size())) {
    if (!is_closed_family(*P, s)) continue;
    ++families;
    EXPECT_EQ(topology_bridge(closure_of_topology(P, s)), s);
  }
  // topologies on a three-point set
  EXPECT_EQ(families, 29);
}

TEST(Topology, Errors) {
  auto P = share(boolean_lattice(3));
  EXPECT_EQ(kind_of([&] { topology_bridge(constant_map(P, P->top())); }), ErrorKind::EmptyNotFixed);
  EXPECT_EQ(kind_of([] { topology_bridge(identity_map(share(n5_lattice()))); }), ErrorKind::PreconditionFailed);
  auto m = classify_map(P, std::vector<int>(P->size(), P->bottom()));
  EXPECT_EQ(kind_of([&] { topology_bridge(m); }), ErrorKind::NotTRadical);
}
