#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "closure.hpp"
#include "generators.hpp"
#include "io.hpp"

namespace latrad {

// ---------------------------------------------------------------------------
// Corpus.

struct RelCase {
  std::string name;
  Rel rel;
  PropertyProfile p;
  Rel tc;  // both triangle relations on a finite lattice
};

struct LatCase {
  std::string name;
  LatticePtr L;
  StructureProfile sp;
  std::optional<RankedLattice> ranked;
  std::vector<RelCase> rels;
  bool exhaustive = false;  // rels holds all of Ref(Q)
  std::vector<std::pair<int, int>> pairs;  // all a <= b
  std::vector<std::vector<int>> autos;     // automorphisms, when small
  bool chain = false;
  bool power_set = false;
};

inline RelCase make_rel_case(std::string name, Rel r) {
  PropertyProfile p = classify(r);
  Rel tc = transitive_closure(r);
  return {std::move(name), std::move(r), p, std::move(tc)};
}

struct CorpusOptions {
  uint64_t seed = 7;
  int samples = 200;          // random relations per lattice beyond the exhaustive budget
  int exhaustive_pairs = 6;   // strict comparable pairs for full Ref(Q) enumeration
  bool small = false;         // a reduced corpus for quick runs
};

inline LatCase make_lat_case(std::string name, LatticePtr L, std::optional<RankedLattice> ranked, const CorpusOptions& opt,
                             uint64_t salt) {
  LatCase c;
  c.name = std::move(name);
  c.L = L;
  c.sp = structure_profile(*L);
  c.ranked = std::move(ranked);
  for (int a = 0; a < L->size(); ++a) L->up(a).each([&](int b) { c.pairs.emplace_back(a, b); });
  if (L->size() <= 10) c.autos = L->automorphisms();
  c.chain = true;
  for (int a = 0; a < L->size(); ++a)
    for (int b = 0; b < L->size(); ++b) c.chain = c.chain && L->comparable(a, b);
  try {
    power_set_coords(*L);
    c.power_set = true;
  } catch (const Error&) {
  }

  c.rels.push_back(make_rel_case("eq", builtin_rel(L, Builtin::Eq)));
  c.rels.push_back(make_rel_case("leq", builtin_rel(L, Builtin::Leq)));
  c.rels.push_back(make_rel_case("gap", builtin_rel(L, Builtin::Gap)));
  c.rels.push_back(make_rel_case("cont", builtin_rel(L, Builtin::Cont)));
  if (c.ranked) {
    int top = c.ranked->rank[L->top()];
    for (int n = 1; n <= top + 1; ++n) c.rels.push_back(make_rel_case("codim<" + std::to_string(n), rel_codim(*c.ranked, Bound::of(n))));
    c.rels.push_back(make_rel_case("codim<inf", rel_codim(*c.ranked, Bound::inf())));
    if (c.ranked->ambient > 0) {
      for (int n = 0; n <= c.ranked->ambient; ++n)
        c.rels.push_back(make_rel_case("perp>=" + std::to_string(n), rel_codim_perp(*c.ranked, Bound::of(n))));
      c.rels.push_back(make_rel_case("perp>=inf", rel_codim_perp(*c.ranked, Bound::inf())));
    }
  }
  int strict = static_cast<int>(strict_order_pairs(*L).size());
  if (strict <= opt.exhaustive_pairs) {
    c.exhaustive = true;
    int k = 0;
    for (auto& r : all_relations(L, opt.exhaustive_pairs)) c.rels.push_back(make_rel_case("ref#" + std::to_string(k++), std::move(r)));
  } else {
    int k = 0;
    for (auto& r : sample_relations(L, opt.samples, opt.seed * 1000003u + salt))
      c.rels.push_back(make_rel_case("rand#" + std::to_string(k++), std::move(r)));
  }
  return c;
}

inline std::vector<LatCase> default_corpus(const CorpusOptions& opt) {
  std::vector<LatCase> out;
  uint64_t salt = 0;
  auto add = [&](std::string name, Lattice L, std::optional<RankedLattice> R = std::nullopt) {
    auto P = R ? R->lattice : share(std::move(L));
    if (!R) {
      StructureProfile sp = structure_profile(*P);
      if (sp.graded) R = RankedLattice{P, sp.rank, 0, 0};
    }
    out.push_back(make_lat_case(std::move(name), P, std::move(R), opt, ++salt));
  };
  for (int n = 2; n <= 6; ++n) add("chain" + std::to_string(n), chain_lattice(n));
  add("B2", diamond_lattice());
  add("B3", boolean_lattice(3));
  add("M3", m3_lattice());
  add("N5", n5_lattice());
  add("divisor12", divisor_lattice(12));
  add("divisor30", divisor_lattice(30));
  add("partition3", partition_lattice(3));
  add("partition4", partition_lattice(4));
  for (auto [q, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    RankedLattice R = subspace_lattice(q, d);
    add("subspace" + std::to_string(q) + "^" + std::to_string(d), Lattice(*R.lattice), R);
  }
  if (opt.small) return out;
  auto posets = four_element_posets();
  for (std::size_t i = 0; i < posets.size(); ++i) add("downset4#" + std::to_string(i), downset_lattice(posets[i]));
  for (int i = 0; i < 20; ++i) add("dm6#" + std::to_string(i), dm_completion(random_poset(6, opt.seed * 7919u + i)));
  return out;
}

// ---------------------------------------------------------------------------
// Checks.

enum class Verdict { Pass, Fail, Vacuous };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Vacuous: return "VACUOUS";
  }
  return "?";
}

struct Outcome {
  Verdict verdict = Verdict::Pass;
  std::string witness;
};

inline Outcome pass() { return {Verdict::Pass, ""}; }
inline Outcome vacuous() { return {Verdict::Vacuous, ""}; }
inline Outcome failed(std::string w) { return {Verdict::Fail, std::move(w)}; }

using RelCheckFn = std::function<Outcome(const LatCase&, const RelCase&)>;
using LatCheckFn = std::function<Outcome(const LatCase&)>;

struct CheckDef {
  std::string id;
  std::string summary;
  RelCheckFn per_relation;  // exactly one of the two is set
  LatCheckFn per_lattice;
};

namespace chk {

inline std::string el(const Lattice& L, int x) { return L.id(x); }
inline std::string iv(const Lattice& L, int a, int b) { return "[" + L.id(a) + "," + L.id(b) + "]"; }
inline std::string set_str(const Lattice& L, const Bits& s) {
  return "{" + join_str(s.list(), ",", [&](int x) { return L.id(x); }) + "}";
}

inline bool meet_closed(const Lattice& L, const Bits& s) { return detail::meet_closed(L, s); }
inline bool join_closed(const Lattice& L, const Bits& s) { return detail::join_closed(L, s); }

// Union of all relations in a lattice case satisfying pred and contained in r.
inline Bits all_of_interval(const Lattice& L, int a, int b) { return L.interval(a, b); }

inline std::vector<int> map_upper(const Rel& r) { return upper_map_table(r); }
inline std::vector<int> map_lower(const Rel& r) { return lower_map_table(r); }

inline bool unique_radicals_everywhere(const LatCase& lc, const Rel& r, bool dual) {
  for (auto [a, b] : lc.pairs) {
    auto s = enumerate_radicals(r, a, b);
    if ((dual ? s.dual_radicals : s.radicals).count() != 1) return false;
  }
  return true;
}

// Lower <<-set: every x other than the meet has a distinct y in G with y << x.
inline bool lower_set(const Lattice& L, const Rel& r, const Bits& g) {
  int m = L.meet_set(g);
  bool ok = true;
  g.each([&](int x) {
    if (x == m || !ok) return;
    ok = (r.pred(x) & g).count() > 1;
  });
  return ok;
}

inline bool is_chain(const Lattice& L, const Bits& s) {
  auto xs = s.list();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!L.comparable(xs[i], xs[j])) return false;
  return true;
}

// Elements reached from b by strict descending <<-steps inside g.
inline Bits descent(const Rel& r, const Bits& g, int b) {
  Bits seen = Bits::single(b);
  std::vector<int> stack{b};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    ((r.pred(x) & g) - seen).each([&](int y) {
      seen.set(y);
      stack.push_back(y);
    });
  }
  return seen;
}

inline std::vector<Bits> subsets_of(const Bits& s) {
  auto xs = s.list();
  std::vector<Bits> out;
  for (uint32_t m = 0; m < (1u << xs.size()); ++m) {
    Bits b;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if ((m >> i) & 1) b.set(xs[i]);
    out.push_back(b);
  }
  return out;
}

inline bool leq_map(const LatticeMap& g, const LatticeMap& f) {
  for (int x = 0; x < g.host->size(); ++x)
    if (!g.host->leq(g(x), f(x))) return false;
  return true;
}

inline Bits sublattice_closure(const Lattice& L, Bits s) {
  for (Bits prev; prev != s;) {
    prev = s;
    s = join_closure(L, meet_closure(L, s));
  }
  return s;
}

}  // namespace chk

// All registered checks, in report order.
inline const std::vector<CheckDef>& registry() {
  using namespace chk;
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> d;
    auto rel = [&](std::string id, std::string summary, RelCheckFn f) { d.push_back({std::move(id), std::move(summary), std::move(f), {}}); };
    auto lat = [&](std::string id, std::string summary, LatCheckFn f) { d.push_back({std::move(id), std::move(summary), {}, std::move(f)}); };

    // -- radicals ----------------------------------------------------------
    rel("radical-formula", "up-expanded order: join([a,b] & [a,<<]) is a radical; T-order: it is the only one",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!(rc.p.up_expanded && rc.p.transitive)) return vacuous();
          for (auto [a, b] : lc.pairs) {
            int f = L.join_set(r.succ(a) & L.interval(a, b));
            Bits rs = enumerate_radicals(r, a, b).radicals;
            if (!rs.test(f)) return failed(iv(L, a, b) + ": formula value " + el(L, f) + " is not a radical");
            if (rc.p.t_order) {
              if (rs != Bits::single(f)) return failed(iv(L, a, b) + " has radicals " + set_str(L, rs));
              if (L.interval(a, f) != (L.interval(a, b) & r.pred(f))) return failed(iv(L, a, f) + " differs from [a,b] & [<<,r]");
            }
          }
          return pass();
        });
    rel("dual-radical-formula", "down-expanded order: meet([a,b] & [<<,b]) is a dual radical; dual T-order: unique",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!(rc.p.down_expanded && rc.p.transitive)) return vacuous();
          for (auto [a, b] : lc.pairs) {
            int f = L.meet_set(r.pred(b) & L.interval(a, b));
            Bits ps = enumerate_radicals(r, a, b).dual_radicals;
            if (!ps.test(f)) return failed(iv(L, a, b) + ": formula value " + el(L, f) + " is not a dual radical");
            if (rc.p.dual_t_order) {
              if (ps != Bits::single(f)) return failed(iv(L, a, b) + " has dual radicals " + set_str(L, ps));
              if (L.interval(f, b) != (L.interval(a, b) & r.succ(f))) return failed(iv(L, f, b) + " differs from [a,b] & [p,<<]");
            }
          }
          return pass();
        });
    rel("unique-radicals-force-expansion",
        "order with unique radicals everywhere => up-expanded; an up-contiguous order is a T-order iff radicals are unique (and duals)",
        [](const LatCase& lc, const RelCase& rc) {
          bool uniq = unique_radicals_everywhere(lc, rc.rel, false);
          bool duniq = unique_radicals_everywhere(lc, rc.rel, true);
          bool any = false;
          // Needs transitivity: on B2, {(0,a),(0,b),(a,1)} has unique radicals and is not up-expanded.
          if (uniq && rc.p.transitive) {
            any = true;
            if (!rc.p.up_expanded) return failed("unique radicals but not up-expanded");
          }
          if (duniq && rc.p.transitive) {
            any = true;
            if (!rc.p.down_expanded) return failed("unique dual radicals but not down-expanded");
          }
          if (rc.p.transitive && rc.p.up_contiguous) {
            any = true;
            if (rc.p.t_order != uniq) return failed("up-contiguous order: T-order flag differs from radical uniqueness");
          }
          if (rc.p.transitive && rc.p.down_contiguous) {
            any = true;
            if (rc.p.dual_t_order != duniq) return failed("down-contiguous order: dual T-order flag differs from dual radical uniqueness");
          }
          return any ? pass() : vacuous();
        });
    rel("radical-map-identities", "T-orders: r(r(a)) = r(a), a << b => b << r(b) = r(a), and the interval laws (and duals)",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!rc.p.t_order && !rc.p.dual_t_order) return vacuous();
          if (rc.p.dual_t_order) {
            auto P = map_lower(r);
            for (auto [a, b] : lc.pairs) {
              if (P[P[b]] != P[b]) return failed("p(p(" + el(L, b) + ")) != p(" + el(L, b) + ")");
              if (r.has(a, b) && !(P[b] == P[a] && r.has(P[a], a))) return failed(r.pair_str(a, b) + ": p(b) = p(a) << a fails");
              if (L.leq(P[b], a)) {
                if (!(P[b] == P[a] && r.has(P[a], a))) return failed(r.pair_str(a, b) + ": p(b) <= a breaks p(b) = p(a) << a");
                if (rc.p.up_contiguous && !r.has(a, b)) return failed(r.pair_str(a, b) + ": p(b) <= a <= b but a not << b");
              }
            }
          }
          if (rc.p.t_order) {
            auto R = map_upper(r);
            for (auto [a, b] : lc.pairs) {
              if (R[R[a]] != R[a]) return failed("r(r(" + el(L, a) + ")) != r(" + el(L, a) + ")");
              if (r.has(a, b) && !(R[b] == R[a] && r.has(b, R[b]))) return failed(r.pair_str(a, b) + ": b << r(b) = r(a) fails");
              if (L.leq(b, R[a])) {
                if (!(R[b] == R[a] && r.has(b, R[b]))) return failed(r.pair_str(a, b) + ": b <= r(a) breaks b << r(b) = r(a)");
                if (rc.p.down_contiguous && !r.has(a, b)) return failed(r.pair_str(a, b) + ": a <= b <= r(a) but a not << b");
              }
            }
          }
          return pass();
        });
    rel("maps-of-t-orders", "T-order: r is pre-radical, << inside <<^r, equal when contiguous; R-order: r is radical (and duals)",
        [](const LatCase& lc, const RelCase& rc) {
          const Rel& r = rc.rel;
          bool contiguous = rc.p.up_contiguous && rc.p.down_contiguous;
          if (!rc.p.t_order && !rc.p.dual_t_order) return vacuous();
          auto side = [&](bool upper) -> std::optional<std::string> {
            LatticeMap g = classify_map(lc.L, upper ? map_upper(r) : map_lower(r));
            const char* nm = upper ? "r" : "p";
            if (!(upper ? g.profile.pre_radical : g.profile.dual_pre_radical)) return std::string(nm) + " is not pre-radical: " + g.describe();
            Rel back = rel_from_map_raw(g);
            if (!r.subset_of(back)) return std::string("relation is not inside the relation of ") + nm;
            if (contiguous && !(back == r)) return std::string("contiguous relation differs from the relation of ") + nm;
            bool rOrder = upper ? rc.p.r_order : rc.p.dual_r_order;
            if (rOrder && !(upper ? g.profile.radical : g.profile.dual_radical)) return std::string(nm) + " of an R-order is not radical";
            return std::nullopt;
          };
          if (rc.p.t_order)
            if (auto w = side(true)) return failed(*w);
          if (rc.p.dual_t_order)
            if (auto w = side(false)) return failed(*w);
          return pass();
        });
    rel("tt-block-structure", "TT-order: r(a) = r(p(a)), p(a) = p(r(a)), r and p inverse on fixpoints, << = <= on [p(c), r(c)]",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!rc.p.tt_order) return vacuous();
          auto R = map_upper(r), P = map_lower(r);
          const int n = L.size();
          Bits qr, qp;
          for (int x = 0; x < n; ++x) {
            if (R[x] != R[P[x]] || P[x] != P[R[x]]) return failed("r/p composition law fails at " + el(L, x));
            if (R[x] == x) qr.set(x);
            if (P[x] == x) qp.set(x);
          }
          for (int x = 0; x < n; ++x)
            if (!qp.test(P[x]) || !qr.test(R[x])) return failed("maps leave their fixpoint sets at " + el(L, x));
          bool inv = true;
          qr.each([&](int l) { inv = inv && R[P[l]] == l; });
          qp.each([&](int m) { inv = inv && P[R[m]] == m; });
          if (!inv) return failed("r restricted to fixpoints is not inverse to p");
          for (int c = 0; c < n; ++c)
            for (auto [a, b] : lc.pairs)
              if (L.leq(P[c], a) && L.leq(b, R[c]))
                if (!r.has(a, b) || P[a] != P[c] || P[b] != P[c] || R[a] != R[c] || R[b] != R[c])
                  return failed(r.pair_str(a, b) + " inside [p(c),r(c)] for c = " + el(L, c));
          return pass();
        });
    rel("tt-decomposition", "TT-order iff Q splits into disjoint intervals [p(l), l] with << = <= inside blocks",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          auto part = interval_partition(r);
          if (part.has_value() != rc.p.tt_order)
            return failed(rc.p.tt_order ? "TT-order without block form" : "block form without TT-order");
          if (!rc.p.tt_order) return pass();
          auto R = map_upper(r), P = map_lower(r);
          auto blocks_from = [&](bool fromTop) {
            std::vector<std::pair<int, int>> bl;
            for (int l = 0; l < L.size(); ++l) {
              if (fromTop && R[l] == l) bl.emplace_back(P[l], l);
              if (!fromTop && P[l] == l) bl.emplace_back(l, R[l]);
            }
            std::sort(bl.begin(), bl.end());
            return bl;
          };
          auto b1 = blocks_from(true), b2 = blocks_from(false);
          auto b0 = *part;
          std::sort(b0.begin(), b0.end());
          if (b1 != b2 || b1 != b0) return failed("the two block descriptions disagree");
          std::vector<int> owner(L.size(), -1);
          for (std::size_t k = 0; k < b1.size(); ++k)
            L.interval(b1[k].first, b1[k].second).each([&](int x) { owner[x] = owner[x] < 0 ? static_cast<int>(k) : -2; });
          for (int x = 0; x < L.size(); ++x)
            if (owner[x] < 0) return failed("element " + el(L, x) + (owner[x] == -1 ? " in no block" : " in two blocks"));
          for (auto [a, b] : lc.pairs)
            if (r.has(a, b) != (owner[a] == owner[b])) return failed(r.pair_str(a, b) + " breaks the block rule");
          return pass();
        });
    rel("h-conditions-agree", "the three H-conditions agree, and the three dual H-conditions agree",
        [](const LatCase&, const RelCase& rc) {
          const Rel& r = rc.rel;
          bool h = !h_violation(r).has_value(), dh = !dual_h_violation(r).has_value();
          if (h != h_by_contiguity(r) || h != h_by_shift(r)) return failed("H-conditions disagree");
          if (dh != dual_h_by_contiguity(r) || dh != dual_h_by_shift(r)) return failed("dual H-conditions disagree");
          return pass();
        });
    rel("r-order-map-laws", "dual R-order: p(a^b) << p(a)^p(b) << a^b and p monotone; R-order: the mirror",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!rc.p.r_order && !rc.p.dual_r_order) return vacuous();
          const int n = L.size();
          if (rc.p.dual_r_order) {
            auto P = map_lower(r);
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b) {
                int m = L.meet(P[a], P[b]);
                if (!r.has(P[L.meet(a, b)], m) || !r.has(m, L.meet(a, b))) return failed("meet law of p fails at " + el(L, a) + "," + el(L, b));
                if (L.leq(a, b) && !L.leq(P[a], P[b])) return failed("p not monotone at " + el(L, a) + "<=" + el(L, b));
              }
          }
          if (rc.p.r_order) {
            auto R = map_upper(r);
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b) {
                int j = L.join(R[a], R[b]);
                if (!r.has(L.join(a, b), j) || !r.has(j, R[L.join(a, b)])) return failed("join law of r fails at " + el(L, a) + "," + el(L, b));
                if (L.leq(a, b) && !L.leq(R[a], R[b])) return failed("r not monotone at " + el(L, a) + "<=" + el(L, b));
              }
          }
          return pass();
        });
    rel("mixed-map-laws", "H and dual T: p(a v b) << p(a) v p(b), equality for dual R; dual H and T: the mirror",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          bool one = rc.p.h_relation && rc.p.dual_t_order, two = rc.p.dual_h_relation && rc.p.t_order;
          if (!one && !two) return vacuous();
          const int n = L.size();
          if (one) {
            auto P = map_lower(r);
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b) {
                int lhs = P[L.join(a, b)], rhs = L.join(P[a], P[b]);
                if (!r.has(lhs, rhs)) return failed("p(a v b) << p(a) v p(b) fails at " + el(L, a) + "," + el(L, b));
                if (rc.p.dual_r_order && lhs != rhs) return failed("p(a v b) != p(a) v p(b) at " + el(L, a) + "," + el(L, b));
              }
          }
          if (two) {
            auto R = map_upper(r);
            for (int a = 0; a < n; ++a)
              for (int b = 0; b < n; ++b) {
                int lhs = L.meet(R[a], R[b]), rhs = R[L.meet(a, b)];
                if (!r.has(lhs, rhs)) return failed("r(a) ^ r(b) << r(a ^ b) fails at " + el(L, a) + "," + el(L, b));
                if (rc.p.r_order && lhs != rhs) return failed("r(a) ^ r(b) != r(a ^ b) at " + el(L, a) + "," + el(L, b));
              }
          }
          return pass();
        });
    rel("tt-r-order-criteria", "TT-order: dual R iff p monotone iff p(a^b) <= p(a)^p(b) iff p(a^b) = p(p(a)^p(b)); mirror for R",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          if (!rc.p.tt_order) return vacuous();
          auto R = map_upper(rc.rel), P = map_lower(rc.rel);
          const int n = L.size();
          bool c2 = true, c3 = true, c4 = true, d2 = true, d3 = true, d4 = true;
          for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
              if (L.leq(a, b)) {
                c2 = c2 && L.leq(P[a], P[b]);
                d2 = d2 && L.leq(R[a], R[b]);
              }
              c3 = c3 && L.leq(P[L.meet(a, b)], L.meet(P[a], P[b]));
              c4 = c4 && P[L.meet(a, b)] == P[L.meet(P[a], P[b])];
              d3 = d3 && L.leq(L.join(R[a], R[b]), R[L.join(a, b)]);
              d4 = d4 && R[L.join(R[a], R[b])] == R[L.join(a, b)];
            }
          bool c1 = rc.p.dual_r_order, d1 = rc.p.r_order;
          if (!(c1 == c2 && c2 == c3 && c3 == c4)) return failed("dual R criteria disagree");
          if (!(d1 == d2 && d2 == d3 && d3 == d4)) return failed("R criteria disagree");
          if (rc.p.rr_order != (c2 && d2)) return failed("RR flag differs from monotonicity of both maps");
          return pass();
        });
    rel("rr-maps-conjugate", "RR-order: r and p are conjugate, and <<^r = <<^p is an RR-order with the same maps",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          if (!rc.p.rr_order) return vacuous();
          auto R = map_upper(rc.rel), P = map_lower(rc.rel);
          for (int x = 0; x < L.size(); ++x)
            if (P[R[x]] != P[x] || R[P[x]] != R[x]) return failed("maps not conjugate at " + el(L, x));
          Rel fr = rel_from_map_raw(classify_map(lc.L, R)), gr = rel_from_map_raw(classify_map(lc.L, P));
          if (!(fr == gr)) return failed("relations of r and p differ");
          if (!classify(fr).rr_order || map_upper(fr) != R || map_lower(fr) != P) return failed("relation built from conjugate maps is wrong");
          return pass();
        });

    // -- complements and lower/upper sets ---------------------------------
    rel("complement-laws", "<-<< is down-contiguous with meet-closed rows, ->> is up-contiguous with join-closed columns; both antitone",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          auto [lft, rgt] = complements(rc.rel);
          if (down_contiguous_violation(lft)) return failed("left complement not down-contiguous");
          if (up_contiguous_violation(rgt)) return failed("right complement not up-contiguous");
          for (int a = 0; a < L.size(); ++a) {
            if (!meet_closed(L, lft.succ(a))) return failed("[" + el(L, a) + ",<-<<] not meet-closed");
            if (!join_closed(L, rgt.pred(a))) return failed("[->>," + el(L, a) + "] not join-closed");
          }
          auto [lt2, rt2] = complements(rc.tc);
          if (!lt2.subset_of(lft) || !rt2.subset_of(rgt)) return failed("complements are not antitone");
          return pass();
        });
    // lo need not be transitive: on B2, {(0,a),(a,1)} gives lo = itself.
    rel("lower-upper-sets", "lo = <-(->>) is down-contiguous and idempotent; up mirrored; contiguity gives inclusion",
        [](const LatCase&, const RelCase& rc) {
          const Rel& r = rc.rel;
          auto [lo, up] = lo_up(r);
          auto [lft, rgt] = complements(r);
          if (!(lo == left_complement(rgt)) || !(up == right_complement(lft))) return failed("lo/up differ from double complements");
          PropertyProfile pl = classify(lo), pu = classify(up);
          if (!pl.down_contiguous) return failed("lo is not down-contiguous");
          if (!pu.up_contiguous) return failed("up is not up-contiguous");
          if (rc.p.down_contiguous && !r.subset_of(lo)) return failed("down-contiguous relation not inside lo");
          if (rc.p.up_contiguous && !r.subset_of(up)) return failed("up-contiguous relation not inside up");
          if (!rgt.subset_of(right_complement(lo)) || !lft.subset_of(left_complement(up))) return failed("complement inclusion fails");
          if (!(lo_up(lo).first == lo) || !(lo_up(up).second == up)) return failed("lo or up not idempotent");
          return pass();
        });
    rel("series-are-gap-chains", "triangle relations equal the reachability oracle; each witness is an upper and a lower gap chain",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!(series_relation(r) == rc.tc) || !(tri_upper(r) == rc.tc) || !(tri_lower(r) == rc.tc))
            return failed("triangle relation differs from the reachability oracle");
          for (auto [a, b] : lc.pairs) {
            if (!rc.tc.has(a, b)) continue;
            auto c = triangle_witness(r, a, b);
            Bits cs = Bits::of(c);
            for (std::size_t i = 0; i < c.size(); ++i) {
              if (i + 1 < c.size() && !(r.has(c[i], c[i + 1]) && (L.interval(c[i], c[i + 1]) & cs).count() == 2))
                return failed(r.pair_str(a, b) + ": witness step lacks an immediate successor");
              if (i > 0 && !(r.has(c[i - 1], c[i]) && (L.interval(c[i - 1], c[i]) & cs).count() == 2))
                return failed(r.pair_str(a, b) + ": witness step lacks an immediate predecessor");
            }
          }
          return pass();
        });
    rel("triangle-closure-laws", "triangles are idempotent orders containing lo/up that keep the complements; expanded orders are fixed",
        [](const LatCase&, const RelCase& rc) {
          const Rel& r = rc.rel;
          const Rel& t = rc.tc;
          auto [lo, up] = lo_up(r);
          auto [lft, rgt] = complements(r);
          if (!classify(t).transitive || !(transitive_closure(t) == t)) return failed("triangle is not an idempotent order");
          if (!lo.subset_of(t) || !up.subset_of(t)) return failed("lo or up not inside the triangle");
          auto [tl, tr] = complements(t);
          if (!(tr == rgt) || !(tl == lft)) return failed("triangle changes a complement");
          if (rc.p.transitive && (rc.p.down_expanded || rc.p.up_expanded) && !(t == r)) return failed("expanded order not fixed");
          if (rc.p.dual_t_order && !(lo == r)) return failed("dual T-order differs from lo");
          if (rc.p.t_order && !(up == r)) return failed("T-order differs from up");
          return pass();
        });
    rel("chain-triangles-keep-contiguity", "on chains, up- or down-contiguity passes to both triangle relations",
        [](const LatCase& lc, const RelCase& rc) {
          if (!lc.chain || (!rc.p.up_contiguous && !rc.p.down_contiguous)) return vacuous();
          if (rc.p.up_contiguous && up_contiguous_violation(rc.tc)) return failed("triangle loses up-contiguity");
          if (rc.p.down_contiguous && down_contiguous_violation(rc.tc)) return failed("triangle loses down-contiguity");
          return pass();
        });
    rel("triangle-radicals-exist", "every interval has dual radicals of the lower triangle and radicals of the upper triangle",
        [](const LatCase& lc, const RelCase& rc) {
          for (auto [a, b] : lc.pairs) {
            auto s = enumerate_radicals(rc.tc, a, b);
            if (s.radicals.none() || s.dual_radicals.none()) return failed(iv(*lc.L, a, b) + " lacks a triangle radical");
          }
          return pass();
        });
    rel("dual-h-triangle-theory",
        "dual H: lower triangle = lo is a dual R-order, ->> is an R-order equal to its up, unique dual radicals bound the interval",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!rc.p.dual_h_relation && !rc.p.h_relation) return vacuous();
          auto [lo, up] = lo_up(r);
          auto [lft, rgt] = complements(r);
          if (rc.p.dual_h_relation) {
            if (!(rc.tc == lo) || !classify(rc.tc).dual_r_order) return failed("lower triangle is not lo or not a dual R-order");
            if (!(transitive_closure(rgt) == rgt) || !(lo_up(rgt).second == rgt) || !classify(rgt).r_order)
              return failed("right complement is not an R-order equal to its triangle and up");
            for (auto [a, b] : lc.pairs) {
              Bits ps = enumerate_radicals(rc.tc, a, b).dual_radicals;
              if (ps.count() != 1) return failed(iv(L, a, b) + " has dual triangle radicals " + set_str(L, ps));
              int p = ps.first();
              if (!rgt.has(a, p)) return failed(iv(L, a, b) + ": a ->> p fails");
              for (int x : (L.interval(a, b) & rc.tc.pred(b)).list())
                if (!L.leq(p, x)) return failed(iv(L, a, b) + ": " + el(L, x) + " below the dual radical");
            }
          }
          if (rc.p.h_relation) {
            if (!(rc.tc == up) || !classify(rc.tc).r_order) return failed("upper triangle is not up or not an R-order");
            if (!(transitive_closure(lft) == lft) || !(lo_up(lft).first == lft) || !classify(lft).dual_r_order)
              return failed("left complement is not a dual R-order equal to its triangle and lo");
            for (auto [a, b] : lc.pairs) {
              Bits rs = enumerate_radicals(rc.tc, a, b).radicals;
              if (rs.count() != 1) return failed(iv(L, a, b) + " has triangle radicals " + set_str(L, rs));
              int q = rs.first();
              if (!lft.has(q, b)) return failed(iv(L, a, b) + ": r <-<< b fails");
              for (int x : (L.interval(a, b) & rc.tc.succ(a)).list())
                if (!L.leq(x, q)) return failed(iv(L, a, b) + ": " + el(L, x) + " above the radical");
            }
          }
          return pass();
        });
    rel("dual-r-order-equivalences", "dual H: dual R-order iff << equals its lower triangle iff unique dual radicals everywhere (and mirror)",
        [](const LatCase& lc, const RelCase& rc) {
          if (!rc.p.dual_h_relation && !rc.p.h_relation) return vacuous();
          bool same = rc.tc == rc.rel;
          if (rc.p.dual_h_relation) {
            bool u = unique_radicals_everywhere(lc, rc.rel, true);
            if (rc.p.dual_r_order != same || same != u) return failed("dual R equivalences disagree");
          }
          if (rc.p.h_relation) {
            bool u = unique_radicals_everywhere(lc, rc.rel, false);
            if (rc.p.r_order != same || same != u) return failed("R equivalences disagree");
          }
          return pass();
        });
    rel("h-radicals-match-triangle", "H: the triangle radical equals the dual radical of <-<<, and any << radical equals it (and mirror)",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          if (!rc.p.dual_h_relation && !rc.p.h_relation) return vacuous();
          auto [lft, rgt] = complements(r);
          for (auto [a, b] : lc.pairs) {
            auto own = enumerate_radicals(r, a, b);
            auto tri = enumerate_radicals(rc.tc, a, b);
            if (rc.p.h_relation) {
              if (tri.radicals != enumerate_radicals(lft, a, b).dual_radicals) return failed(iv(L, a, b) + ": triangle radical differs from <-<< dual radical");
              if (own.radicals.any() && own.radicals != tri.radicals) return failed(iv(L, a, b) + ": << radical differs from triangle radical");
            }
            if (rc.p.dual_h_relation) {
              if (tri.dual_radicals != enumerate_radicals(rgt, a, b).radicals) return failed(iv(L, a, b) + ": triangle dual radical differs from ->> radical");
              if (own.dual_radicals.any() && own.dual_radicals != tri.dual_radicals)
                return failed(iv(L, a, b) + ": << dual radical differs from triangle dual radical");
            }
          }
          return pass();
        });
    rel("series-extraction", "H: r(a) = join[a,triangle] is reached by a series, fixed on [a,r(a)], and only r(a) lacks successors (and mirror)",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          const Rel& r = rc.rel;
          const Rel& t = rc.tc;
          if (!rc.p.h_relation && !rc.p.dual_h_relation) return vacuous();
          const int n = L.size();
          auto [lft, rgt] = complements(r);
          if (rc.p.h_relation) {
            auto R = upper_map_table(t);
            for (int a = 0; a < n; ++a) {
              int ra = R[a];
              if (!t.has(a, ra) || !lft.has(ra, L.top())) return failed(el(L, a) + ": r(a) is not the triangle radical of [a,1]");
              for (int b : L.up(a).list()) {
                if (L.leq(b, ra) && (R[b] != ra || !t.has(b, ra))) return failed(el(L, b) + " in [a,r(a)] with a different radical");
                bool hasSucc = (r.succ(b) - Bits::single(b)).any();
                if (!L.leq(ra, b) && b != L.top() && !hasSucc) return failed(el(L, b) + " below r(" + el(L, a) + ") has no successor");
                if (t.has(a, b) && !L.leq(b, ra)) return failed("series from " + el(L, a) + " overshoots r(a)");
              }
              if ((r.succ(ra) - Bits::single(ra)).any()) return failed("r(" + el(L, a) + ") has a successor");
            }
          }
          if (rc.p.dual_h_relation) {
            auto P = lower_map_table(t);
            for (int b = 0; b < n; ++b) {
              int pb = P[b];
              if (!t.has(pb, b) || !rgt.has(L.bottom(), pb)) return failed(el(L, b) + ": p(b) is not the dual triangle radical of [0,b]");
              for (int a : L.down(b).list()) {
                if (L.leq(pb, a) && (P[a] != pb || !t.has(pb, a))) return failed(el(L, a) + " in [p(b),b] with a different dual radical");
                bool hasPred = (r.pred(a) - Bits::single(a)).any();
                if (!L.leq(a, pb) && a != L.bottom() && !hasPred) return failed(el(L, a) + " above p(" + el(L, b) + ") has no predecessor");
                if (t.has(a, b) && !L.leq(pb, a)) return failed("series to " + el(L, b) + " undershoots p(b)");
              }
              if ((r.pred(pb) - Bits::single(pb)).any()) return failed("p(" + el(L, b) + ") has a predecessor");
            }
          }
          return pass();
        });
    rel("successor-bounds", "H: s(a) <= join[a,triangle]; dual H: sigma(a) >= meet[triangle,a]",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          if (!rc.p.h_relation && !rc.p.dual_h_relation) return vacuous();
          for (int a = 0; a < L.size(); ++a) {
            auto [sg, s] = sigma_s(rc.rel, a, rc.p);
            if (rc.p.h_relation && !L.leq(s, L.join_set(rc.tc.succ(a)))) return failed("s(" + el(L, a) + ") exceeds the triangle radical");
            if (rc.p.dual_h_relation && !L.leq(L.meet_set(rc.tc.pred(a)), sg)) return failed("sigma(" + el(L, a) + ") below the triangle dual radical");
          }
          return pass();
        });
    rel("automorphism-invariance", "an automorphism preserving << preserves its triangles (H cases) and fixes sigma, s and the radicals at fixed points",
        [](const LatCase& lc, const RelCase& rc) {
          const Lattice& L = *lc.L;
          bool any = false;
          for (const auto& th : lc.autos) {
            if (!preserves(th, rc.rel)) continue;
            if ((rc.p.h_relation || rc.p.dual_h_relation) && !preserves(th, rc.tc)) return failed("automorphism does not preserve the triangle");
            for (int a = 0; a < L.size(); ++a)
              if (th[a] == a) {
                any = true;
                if (!automorphism_invariance(rc.rel, th, a, rc.p).ok()) return failed("value moved by an automorphism fixing " + el(L, a));
              }
          }
          return any ? pass() : vacuous();
        });
    rel("hh-triangles", "HH: the lower triangle is an H-order and dual R-order, the upper an R-order and dual H-order",
        [](const LatCase&, const RelCase& rc) {
          if (!rc.p.hh) return vacuous();
          PropertyProfile t = classify(rc.tc);
          if (!(t.transitive && t.h_relation && t.dual_r_order && t.r_order && t.dual_h_relation)) return failed("triangle of an HH-relation is not RR");
          return pass();
        });
    rel("bar-tilde-relations",
        "bar is transitive, inside tilde and gap-dense, equal to tilde when TT or HH, fixes expanded orders, keeps chain contiguity",
        [](const LatCase& lc, const RelCase& rc) {
          const Rel& r = rc.rel;
          Rel b = bar(r).fixpoint();
          Rel t = tilde(r).fixpoint();
          Rel gd = gap_dense(r);
          PropertyProfile pb = classify(b);
          if (!(tri_upper(b) == b) || !(tri_lower(b) == b)) return failed("bar is not fixed by the triangles");
          if (!(b == rc.tc)) return failed("bar differs from the least transitive relation containing <<");
          if (!b.subset_of(t)) return failed("bar not inside tilde");
          if (pb.tt_order && !(b == t)) return failed("TT bar differs from tilde");
          if (rc.p.transitive && rc.p.up_expanded && rc.p.down_expanded && !(b == r)) return failed("expanded order moved by bar");
          if (lc.chain && ((rc.p.up_contiguous && !pb.up_contiguous) || (rc.p.down_contiguous && !pb.down_contiguous)))
            return failed("bar loses contiguity on a chain");
          if (rc.p.hh && (!(b == t) || !pb.rr_order)) return failed("bar of an HH-relation is not the RR-order tilde");
          if (!r.subset_of(gd) || !(tri_upper(gd) == gd) || !(tri_lower(gd) == gd) || !b.subset_of(gd))
            return failed("gap-dense relation laws fail");
          for (auto [x, y] : lc.pairs)
            if (b.has(x, y)) gd_witness(r, x, y);
          return pass();
        });
    rel("closures-are-extremal", "every closure is the least class member above <<, every interior the largest below, checked against Ref(Q)",
        [](const LatCase& lc, const RelCase& rc) {
          if (!lc.exhaustive) return vacuous();
          RefClosures c = refspace_closures(rc.rel);
          std::vector<std::pair<std::string, std::function<bool(const PropertyProfile&)>>> classes = {
              {"upper_series", [](const PropertyProfile& p) { return p.transitive; }},
              {"lower_series", [](const PropertyProfile& p) { return p.transitive; }},
              {"order", [](const PropertyProfile& p) { return p.transitive; }},
              {"up_contiguous", [](const PropertyProfile& p) { return p.up_contiguous; }},
              {"down_contiguous", [](const PropertyProfile& p) { return p.down_contiguous; }},
              {"up_expanded", [](const PropertyProfile& p) { return p.up_expanded; }},
              {"down_expanded", [](const PropertyProfile& p) { return p.down_expanded; }},
              {"h_closure", [](const PropertyProfile& p) { return p.h_relation; }},
              {"dual_h_closure", [](const PropertyProfile& p) { return p.dual_h_relation; }},
              {"h_interior", [](const PropertyProfile& p) { return p.h_relation; }},
              {"dual_h_interior", [](const PropertyProfile& p) { return p.dual_h_relation; }},
              {"tilde", [](const PropertyProfile& p) { return p.tt_order; }},
              {"bar", [](const PropertyProfile& p) { return p.transitive; }},
          };
          for (const auto& [name, member] : classes) {
            bool interior = name.find("interior") != std::string::npos;
            std::optional<Rel> best;
            for (const auto& other : lc.rels) {
              if (other.name.rfind("ref#", 0) != 0 || !member(other.p)) continue;
              if (interior ? !other.rel.subset_of(rc.rel) : !rc.rel.subset_of(other.rel)) continue;
              if (!best) best = other.rel;
              else best = interior ? rel_meet_join({*best, other.rel}).second : rel_meet_join({*best, other.rel}).first;
            }
            if (!best) return failed("class " + name + " has no member around <<");
            Rel got = name == "tilde" ? tilde(rc.rel).fixpoint() : name == "bar" ? bar(rc.rel).fixpoint() : c.get(name);
            if (!(got == *best)) return failed(name + " is " + got.describe() + " but the extremal member is " + best->describe());
          }
          return pass();
        });

    // -- Ref(Q) as a lattice --------------------------------------------------
    lat("ref-space-classes-closed", "H, dual H, uc, dc classes are closed under meet and join; order, ue, de, T, dual T, R, dual R under meet",
        [](const LatCase& lc) {
          if (!lc.exhaustive) return vacuous();
          std::vector<const RelCase*> refs;
          for (const auto& rc : lc.rels)
            if (rc.name.rfind("ref#", 0) == 0) refs.push_back(&rc);
          using Flag = bool PropertyProfile::*;
          struct Cls {
            const char* name;
            Flag flag;
            bool joins;
          };
          const Cls classes[] = {{"h", &PropertyProfile::h_relation, true},       {"dual_h", &PropertyProfile::dual_h_relation, true},
                                 {"uc", &PropertyProfile::up_contiguous, true},   {"dc", &PropertyProfile::down_contiguous, true},
                                 {"order", &PropertyProfile::transitive, false},  {"ue", &PropertyProfile::up_expanded, false},
                                 {"de", &PropertyProfile::down_expanded, false},  {"t", &PropertyProfile::t_order, false},
                                 {"dual_t", &PropertyProfile::dual_t_order, false}, {"r", &PropertyProfile::r_order, false},
                                 {"dual_r", &PropertyProfile::dual_r_order, false}};
          PropertyProfile leq = classify(builtin_rel(lc.L, Builtin::Leq));
          for (const auto& c : classes) {
            if (!(leq.*c.flag)) return failed(std::string("<= is not in class ") + c.name);
            for (std::size_t i = 0; i < refs.size(); ++i) {
              if (!(refs[i]->p.*c.flag)) continue;
              for (std::size_t j = i + 1; j < refs.size(); ++j) {
                if (!(refs[j]->p.*c.flag)) continue;
                auto [m, jn] = rel_meet_join({refs[i]->rel, refs[j]->rel});
                if (!(classify(m).*c.flag)) return failed(std::string("class ") + c.name + " not meet-closed: " + refs[i]->rel.describe() + " & " + refs[j]->rel.describe());
                if (c.joins && !(classify(jn).*c.flag))
                  return failed(std::string("class ") + c.name + " not join-closed: " + refs[i]->rel.describe() + " | " + refs[j]->rel.describe());
              }
            }
          }
          return pass();
        });
    lat("triangle-maps-are-radical", "<< -> triangle is inflationary, monotone and idempotent on Ref(Q); its fixpoints are the orders",
        [](const LatCase& lc) {
          if (!lc.exhaustive) return vacuous();
          std::vector<const RelCase*> refs;
          for (const auto& rc : lc.rels)
            if (rc.name.rfind("ref#", 0) == 0) refs.push_back(&rc);
          for (const auto* x : refs) {
            if (!x->rel.subset_of(x->tc) || !(transitive_closure(x->tc) == x->tc)) return failed(x->rel.describe() + ": triangle not inflationary or not idempotent");
            if ((x->tc == x->rel) != x->p.transitive) return failed(x->rel.describe() + ": fixed exactly when transitive fails");
            for (const auto* y : refs)
              if (x->rel.subset_of(y->rel) && !x->tc.subset_of(y->tc)) return failed("triangle not monotone: " + x->rel.describe() + " in " + y->rel.describe());
          }
          return pass();
        });
    lat("h-meet-inheritance", "<< H inside a relation S, and R & S H, imply R & << H (and the dual)", [](const LatCase& lc) {
      std::vector<const RelCase*> pool;
      for (const auto& rc : lc.rels)
        if (pool.size() < 24) pool.push_back(&rc);
      bool any = false;
      for (const auto* ll : pool)
        for (const auto* sq : pool)
          for (const auto* pr : pool) {
            if (!ll->rel.subset_of(sq->rel)) continue;
            Rel ps = rel_meet_join({pr->rel, sq->rel}).first, pl = rel_meet_join({pr->rel, ll->rel}).first;
            PropertyProfile qs = classify(ps), ql = classify(pl);
            if (ll->p.h_relation && qs.h_relation) {
              any = true;
              if (!ql.h_relation) return failed("H fails for " + pr->name + " & " + ll->name);
            }
            if (ll->p.dual_h_relation && qs.dual_h_relation) {
              any = true;
              if (!ql.dual_h_relation) return failed("dual H fails for " + pr->name + " & " + ll->name);
            }
          }
      return any ? pass() : vacuous();
    });

    // -- descent through meet-closed sets -------------------------------------
    lat("lower-set-descent",
        "dual H, G meet-closed with its join: descent from the top of G stops at one element p below every descended element and "
        "below every lower chain through the top; G is a lower set iff its meet is reached iff a lower chain runs to it",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          if (L.size() > 6) return vacuous();
          auto subsets = subsets_of(L.all());
          bool any = false;
          for (const auto& rc : lc.rels) {
            const Rel& r = rc.rel;
            for (const Bits& g : subsets) {
              if (g.none() || !meet_closed(L, g)) continue;
              int b = L.join_set(g);
              if (!g.test(b)) continue;
              Bits reach = descent(r, g, b);
              int m = L.meet_set(g);
              bool lower = lower_set(L, r, g);
              if (lower && !reach.test(m)) return failed(rc.name + ": lower set " + set_str(L, g) + " does not descend to its meet");
              if (!rc.p.dual_h_relation) continue;
              any = true;
              Bits stuck;
              reach.each([&](int x) {
                if ((r.pred(x) & g).count() == 1) stuck.set(x);
              });
              if (stuck.count() != 1) return failed(rc.name + ": descent in " + set_str(L, g) + " stops at " + set_str(L, stuck));
              int p = stuck.first();
              bool below = true;
              reach.each([&](int x) { below = below && L.leq(p, x); });
              if (!below) return failed(rc.name + ": stopping point not below the descent in " + set_str(L, g));
              bool chainTo = false;
              for (const Bits& t : subsets_of(g - Bits::single(b))) {
                Bits tb = t | Bits::single(b);
                if (!is_chain(L, tb) || !lower_set(L, r, tb)) continue;
                if (!L.leq(p, L.meet_set(tb))) return failed(rc.name + ": lower chain " + set_str(L, tb) + " dips below p");
                if (L.meet_set(tb) == m) chainTo = true;
              }
              if (lower != reach.test(m) || lower != chainTo) return failed(rc.name + ": lower-set equivalences disagree on " + set_str(L, g));
            }
          }
          return any ? pass() : vacuous();
        });
    lat("lower-set-images", "dual H: z ^ G of a meet-closed lower set is one; the meet closure of lower sets sharing a top is one", [](const LatCase& lc) {
      const Lattice& L = *lc.L;
      if (L.size() > 6) return vacuous();
      auto subsets = subsets_of(L.all());
      bool any = false;
      for (const auto& rc : lc.rels) {
        if (!rc.p.dual_h_relation) continue;
        std::vector<Bits> sets;
        for (const Bits& g : subsets)
          if (g.any() && meet_closed(L, g) && lower_set(L, rc.rel, g)) sets.push_back(g);
        for (const Bits& g : sets)
          for (int z = 0; z < L.size(); ++z) {
            any = true;
            Bits img;
            g.each([&](int x) { img.set(L.meet(z, x)); });
            if (!meet_closed(L, img) || !lower_set(L, rc.rel, img)) return failed(rc.name + ": image of " + set_str(L, g) + " under " + el(L, z) + " ^ .");
          }
        for (std::size_t i = 0; i < sets.size(); ++i)
          for (std::size_t j = i + 1; j < sets.size(); ++j) {
            int b = L.join_set(sets[i]);
            if (b != L.join_set(sets[j]) || !sets[i].test(b) || !sets[j].test(b)) continue;
            Bits u = meet_closure(L, sets[i] | sets[j]);
            if (!lower_set(L, rc.rel, u)) return failed(rc.name + ": meet closure of " + set_str(L, sets[i]) + " and " + set_str(L, sets[j]));
          }
      }
      return any ? pass() : vacuous();
    });

    // -- gaps and continuity -----------------------------------------------
    lat("gap-relation-hh-on-modular", "on a modular lattice the gap relation is an HH-relation", [](const LatCase& lc) {
      if (!lc.sp.modular) return vacuous();
      if (!classify(builtin_rel(lc.L, Builtin::Gap)).hh) return failed("gap relation not HH");
      return pass();
    });
    // H for the gap relation is upper semimodularity, dual H lower semimodularity.
    lat("gap-relation-not-hh-off-modular", "on a non-modular lattice the gap relation fails H or dual H", [](const LatCase& lc) {
      if (lc.sp.modular) return vacuous();
      if (classify(builtin_rel(lc.L, Builtin::Gap)).hh) return failed("gap relation HH on a non-modular lattice");
      return pass();
    });
    lat("continuity-collapse", "cont equals eq; no gaps iff cont = <=; cont is fixed by both triangles", [](const LatCase& lc) {
      Rel c = builtin_rel(lc.L, Builtin::Cont), e = builtin_rel(lc.L, Builtin::Eq), o = builtin_rel(lc.L, Builtin::Leq);
      if (!(c == e)) return failed("cont differs from eq: " + c.describe());
      if (lc.L->covers().empty() != (c == o)) return failed("no-gaps criterion fails");
      if (!(tri_upper(c) == c) || !(tri_lower(c) == c)) return failed("cont not fixed by triangles");
      return pass();
    });
    lat("gap-series-give-order", "the gap-dense relation of the gap relation is <=", [](const LatCase& lc) {
      if (!(gap_dense(builtin_rel(lc.L, Builtin::Gap)) == builtin_rel(lc.L, Builtin::Leq))) return failed("gap-dense closure of gaps is not <=");
      return pass();
    });
    lat("modular-gap-images", "meets and joins with z keep chains chains; on modular lattices they send a gap to a gap or a point",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          for (const auto& c : L.maximal_chains(L.bottom(), L.top(), 64))
            for (int z = 0; z < L.size(); ++z) {
              Bits m, j;
              for (int x : c) {
                m.set(L.meet(z, x));
                j.set(L.join(z, x));
              }
              if (!is_chain(L, m) || !is_chain(L, j)) return failed("image of a maximal chain under " + el(L, z) + " is not a chain");
            }
          if (!lc.sp.modular) return pass();
          for (auto [x, y] : L.covers())
            for (int z = 0; z < L.size(); ++z) {
              int a = L.meet(z, x), b = L.meet(z, y), c = L.join(z, x), e = L.join(z, y);
              if (a != b && !L.is_gap(a, b)) return failed("meet with " + el(L, z) + " stretches gap " + iv(L, x, y));
              if (c != e && !L.is_gap(c, e)) return failed("join with " + el(L, z) + " stretches gap " + iv(L, x, y));
            }
          return pass();
        });
    lat("modular-cont-is-rr", "modular: cont is an RR-order, decomposes into singletons, and equals its bar and tilde", [](const LatCase& lc) {
      if (!lc.sp.modular || !lc.sp.jidc || !lc.sp.midc) return vacuous();
      Rel c = builtin_rel(lc.L, Builtin::Cont);
      if (!classify(c).rr_order) return failed("cont not RR");
      for (auto [lo, hi] : decompose(c).blocks)
        if (lo != hi) return failed("block " + iv(*lc.L, lo, hi) + " is not a singleton");
      if (!(bar(c).fixpoint() == c) || !(tilde(c).fixpoint() == c)) return failed("cont moved by bar or tilde");
      return pass();
    });
    lat("modular-gap-closures", "modular: bar and tilde of the gap relation agree and are RR; its triangles are H/dual R and R/dual H",
        [](const LatCase& lc) {
          if (!lc.sp.modular || !lc.sp.jidc || !lc.sp.midc) return vacuous();
          Rel g = builtin_rel(lc.L, Builtin::Gap);
          Rel b = bar(g).fixpoint(), t = tilde(g).fixpoint();
          if (!(b == t) || !classify(b).rr_order) return failed("bar and tilde of gap disagree or are not RR");
          PropertyProfile p = classify(transitive_closure(g));
          if (!(p.h_relation && p.dual_r_order && p.r_order && p.dual_h_relation)) return failed("gap triangles lack H/R classes");
          return pass();
        });
    lat("chain-gap-theory", "chains: gap is HH, its triangles are H/dual R and R/dual H orders, cont is RR", [](const LatCase& lc) {
      if (!lc.chain) return vacuous();
      Rel g = builtin_rel(lc.L, Builtin::Gap);
      PropertyProfile pg = classify(g), pt = classify(transitive_closure(g));
      if (!pg.hh) return failed("gap not HH on a chain");
      if (!(pt.h_relation && pt.transitive && pt.dual_r_order && pt.r_order && pt.dual_h_relation)) return failed("gap triangles wrong on a chain");
      if (!classify(builtin_rel(lc.L, Builtin::Cont)).rr_order) return failed("cont not RR on a chain");
      return pass();
    });
    lat("distributive-shadow", "distributive: JID and MID, gap HH with RR closures, cont blocks are singletons", [](const LatCase& lc) {
      if (!lc.sp.distributive) return vacuous();
      if (!lc.sp.jid || !lc.sp.mid || !lc.sp.modular) return failed("distributive lattice lacks JID/MID/modularity");
      Rel g = builtin_rel(lc.L, Builtin::Gap);
      if (!classify(g).hh) return failed("gap not HH");
      Rel b = bar(g).fixpoint();
      if (!(b == tilde(g).fixpoint()) || !classify(b).rr_order) return failed("gap closures not RR");
      for (auto [lo, hi] : decompose(builtin_rel(lc.L, Builtin::Cont)).blocks)
        if (lo != hi) return failed("cont block " + iv(*lc.L, lo, hi) + " has gaps");
      return pass();
    });
    lat("structure-profile-consistency", "pentagon search agrees with modularity; distributive => modular; JID and MID => distributive; chain laws",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          const StructureProfile& s = lc.sp;
          if (find_pentagon(L).empty() != s.modular || modular_by_identity(L) != s.modular) return failed("modularity tests disagree");
          if (s.distributive && !s.modular) return failed("distributive but not modular");
          if (s.jid && s.mid && !s.distributive) return failed("JID and MID without distributivity");
          if (!s.jidc || !s.midc) return failed("a finite lattice failed JIDC or MIDC");
          StructureProfile d = structure_profile(L.dual());
          if (d.modular != s.modular || d.distributive != s.distributive || d.jid != s.mid || d.mid != s.jid) return failed("duality changes the profile");
          return pass();
        });

    // -- enveloping sets and maps -------------------------------------------
    lat("envelope-characterizations", "enveloping iff meet-closed with top; least majorants satisfy the join formulas (and the dual)",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          std::vector<Bits> cands;
          if (L.size() <= 6) cands = subsets_of(L.all());
          else {
            Rng rng(0xe7e7 + L.size());
            for (int k = 0; k < 48; ++k) {
              Bits s;
              for (int x = 0; x < L.size(); ++x)
                if (rng.coin()) s.set(x);
              cands.push_back(s);
              cands.push_back(meet_closure(L, s | Bits::single(L.top())));
              cands.push_back(join_closure(L, s | Bits::single(L.bottom())));
            }
          }
          for (const Bits& s : cands) {
            SubsetFamily f = envelope_check(lc.L, s);
            if (f.enveloping) {
              LatticeMap m = envelope_closure(f);
              if (m.fixpoints != s) return failed("envelope map of " + set_str(L, s) + " has other fixpoints");
            }
            if (f.inscribing && inscribe_interior(f).fixpoints != s) return failed("inscribe map of " + set_str(L, s) + " has other fixpoints");
          }
          return pass();
        });
    lat("envelope-family-operations", "intersections and meet blends of enveloping sets are enveloping; intersections and join blends of inscribing sets are inscribing",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          Rng rng(0xc32 + L.size());
          std::vector<Bits> env, ins;
          for (int k = 0; k < 24; ++k) {
            Bits s;
            for (int x = 0; x < L.size(); ++x)
              if (rng.chance(1, 3)) s.set(x);
            env.push_back(meet_closure(L, s | Bits::single(L.top())));
            ins.push_back(join_closure(L, s | Bits::single(L.bottom())));
          }
          for (std::size_t i = 0; i < env.size(); ++i)
            for (std::size_t j = i + 1; j < env.size(); ++j) {
              if (!envelope_check(lc.L, env[i] & env[j]).enveloping) return failed("intersection of enveloping sets is not enveloping");
              if (!envelope_check(lc.L, meet_blend(L, {env[i], env[j]})).enveloping) return failed("meet blend is not enveloping");
              if (!envelope_check(lc.L, ins[i] & ins[j]).inscribing) return failed("intersection of inscribing sets is not inscribing");
              if (!envelope_check(lc.L, join_blend(L, {ins[i], ins[j]})).inscribing) return failed("join blend is not inscribing");
            }
          return pass();
        });
    lat("envelope-map-bijection", "L -> f_L and g -> Fix(g) are inverse between enveloping sets and radical maps (sublattices and T-radical maps; duals)",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          if (L.size() > 4) return vacuous();
          auto maps = all_maps(lc.L);
          std::set<std::vector<int>> rad, drad, trad, dtrad;
          for (const auto& g : maps) {
            if (g.profile.radical) {
              rad.insert(g.table);
              if (!(envelope_closure(envelope_check(lc.L, g.fixpoints)) == g)) return failed("f_Fix(g) != g for " + g.describe());
            }
            if (g.profile.dual_radical) {
              drad.insert(g.table);
              if (!(inscribe_interior(envelope_check(lc.L, g.fixpoints)) == g)) return failed("g_Fix(f) != f for " + g.describe());
            }
            if (g.profile.t_radical) trad.insert(g.table);
            if (g.profile.dual_t_radical) dtrad.insert(g.table);
          }
          std::size_t nenv = 0, nins = 0, nsubE = 0, nsubI = 0;
          for (const Bits& s : subsets_of(L.all())) {
            SubsetFamily f = envelope_check(lc.L, s);
            bool sub = meet_closed(L, s) && join_closed(L, s);
            if (f.enveloping) {
              ++nenv;
              LatticeMap m = envelope_closure(f);
              if (m.fixpoints != s || !rad.count(m.table)) return failed("Fix(f_L) != L for " + set_str(L, s));
              if (sub) {
                ++nsubE;
                if (!trad.count(m.table)) return failed("enveloping sublattice " + set_str(L, s) + " gives a map that is not T-radical");
              }
            }
            if (f.inscribing) {
              ++nins;
              LatticeMap m = inscribe_interior(f);
              if (m.fixpoints != s || !drad.count(m.table)) return failed("Fix(g_N) != N for " + set_str(L, s));
              if (sub) {
                ++nsubI;
                if (!dtrad.count(m.table)) return failed("inscribing sublattice gives a map that is not dual T-radical");
              }
            }
          }
          if (nenv != rad.size() || nins != drad.size() || nsubE != trad.size() || nsubI != dtrad.size())
            return failed("class sizes differ: enveloping " + std::to_string(nenv) + " vs radical " + std::to_string(rad.size()));
          return pass();
        });
    lat("map-relation-bijection", "g -> <<^g and << -> map are inverse between (dual) pre-radical/radical maps and contiguous (dual) T/R-orders",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          if (L.size() > 4 || !lc.exhaustive) return vacuous();
          auto maps = all_maps(lc.L);
          int counts[4] = {0, 0, 0, 0};
          for (const auto& g : maps) {
            bool flags[4] = {g.profile.pre_radical, g.profile.dual_pre_radical, g.profile.radical, g.profile.dual_radical};
            if (!flags[0] && !flags[1]) continue;
            Rel r = rel_from_map_raw(g);
            PropertyProfile p = classify(r);
            bool contiguous = p.up_contiguous && p.down_contiguous;
            for (int k = 0; k < 4; ++k) {
              if (!flags[k]) continue;
              ++counts[k];
              bool upper = k % 2 == 0;
              bool cls = k < 2 ? (upper ? p.t_order : p.dual_t_order) : (upper ? p.r_order : p.dual_r_order);
              if (!contiguous || !cls) return failed("relation of " + g.describe() + " is not in the matching contiguous class");
              if ((upper ? map_upper(r) : map_lower(r)) != g.table) return failed("map of <<^g differs from g = " + g.describe());
            }
          }
          int rels[4] = {0, 0, 0, 0};
          for (const auto& rc : lc.rels) {
            if (rc.name.rfind("ref#", 0) != 0 || !(rc.p.up_contiguous && rc.p.down_contiguous)) continue;
            bool cls[4] = {rc.p.t_order, rc.p.dual_t_order, rc.p.r_order, rc.p.dual_r_order};
            for (int k = 0; k < 4; ++k)
              if (cls[k]) {
                ++rels[k];
                LatticeMap g = classify_map(lc.L, k % 2 == 0 ? map_upper(rc.rel) : map_lower(rc.rel));
                if (!(rel_from_map_raw(g) == rc.rel)) return failed(rc.rel.describe() + " is not the relation of its map");
              }
          }
          for (int k = 0; k < 4; ++k)
            if (counts[k] != rels[k]) return failed("bijection sizes differ in class " + std::to_string(k));
          return pass();
        });
    lat("topology-closure-bridge", "closure operators of topologies are exactly the T-radical maps fixing the empty set", [](const LatCase& lc) {
      const Lattice& L = *lc.L;
      if (!lc.power_set || L.size() > 8) return vacuous();
      int families = 0;
      for (const Bits& s : subsets_of(L.all())) {
        if (!is_closed_family(L, s)) continue;
        ++families;
        LatticeMap f = closure_of_topology(lc.L, s);
        if (topology_bridge(f) != s) return failed("roundtrip changes the topology " + set_str(L, s));
        std::vector<int> interior(L.size());
        Bits open;
        auto code = power_set_coords(L);
        std::vector<int> byCode(L.size());
        for (int x = 0; x < L.size(); ++x) byCode[code[x]] = x;
        const uint32_t full = code[L.top()];
        s.each([&](int x) { open.set(byCode[full & ~code[x]]); });
        for (int x = 0; x < L.size(); ++x) interior[x] = L.join_set(open & L.down(x));
        if (!classify_map(lc.L, interior).profile.dual_t_radical) return failed("interior map is not dual T-radical");
      }
      if (L.size() <= 4)
        for (const auto& g : all_maps(lc.L))
          if (g.profile.t_radical && g(L.bottom()) == L.bottom() && !is_closed_family(L, topology_bridge(g)))
            return failed("image of " + g.describe() + " is not a topology");
      return families > 0 ? pass() : vacuous();
    });
    lat("radical-map-order", "for radical f, g: g <= f iff f o g = f iff Fix(f) inside Fix(g); meets of radical maps are radical",
        [](const LatCase& lc) {
          if (lc.L->size() > 4) return vacuous();
          std::vector<LatticeMap> rad;
          for (const auto& g : all_maps(lc.L))
            if (g.profile.radical) rad.push_back(g);
          for (const auto& f : rad)
            for (const auto& g : rad) {
              bool a = leq_map(g, f), b = compose(f, g) == f, c = f.fixpoints.subset_of(g.fixpoints);
              if (a != b || b != c) return failed("order criteria disagree for " + g.describe() + " and " + f.describe());
            }
          return pass();
        });
    lat("rad-lattice-operations", "Rad: join has Fix = common fixpoints, pointwise meet has Fix = meet closure of the union; dRad mirrored",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          if (L.size() > 4) return vacuous();
          std::vector<LatticeMap> rad, drad;
          for (const auto& g : all_maps(lc.L)) {
            if (g.profile.radical) rad.push_back(g);
            if (g.profile.dual_radical) drad.push_back(g);
          }
          for (std::size_t i = 0; i < rad.size(); ++i)
            for (std::size_t j = i; j < rad.size(); ++j) {
              auto t = rad_join({rad[i], rad[j]});
              if (t.fixpoint().fixpoints != (rad[i].fixpoints & rad[j].fixpoints)) return failed("Fix of the Rad join is not the intersection");
              auto [jn, mt] = map_lattice_ops({rad[i], rad[j]});
              (void)jn;
              if (!mt.profile.radical) return failed("meet of radical maps is not radical");
              if (mt.fixpoints != meet_closure(L, rad[i].fixpoints | rad[j].fixpoints)) return failed("Fix of the meet is not the meet closure of the union");
              // least upper bound in Rad by enumeration
              for (const auto& h : rad)
                if (leq_map(rad[i], h) && leq_map(rad[j], h) && !leq_map(t.fixpoint(), h)) return failed("Rad join is not least");
            }
          for (std::size_t i = 0; i < drad.size(); ++i)
            for (std::size_t j = i; j < drad.size(); ++j) {
              LatticeMap jn = map_lattice_ops({drad[i], drad[j]}).first;
              Bits uni = drad[i].fixpoints | drad[j].fixpoints;
              if (!jn.profile.dual_radical) return failed("join of dual radical maps is not dual radical");
              if (jn.fixpoints != join_closure(L, uni) || jn.fixpoints != (uni | join_blend(L, {drad[i].fixpoints, drad[j].fixpoints})))
                return failed("Fix of the join of dual radical maps is not the join closure of the union");
              std::optional<LatticeMap> lower;
              for (const auto& k : drad)
                if (leq_map(k, drad[i]) && leq_map(k, drad[j]) && (!lower || leq_map(*lower, k))) lower = k;
              if (!lower) return failed("no common dual radical lower bound");
              for (const auto& k : drad)
                if (leq_map(k, drad[i]) && leq_map(k, drad[j]) && !leq_map(k, *lower)) return failed("dRad meet does not exist");
              if (lower->fixpoints != (drad[i].fixpoints & drad[j].fixpoints)) return failed("Fix of the dRad meet is not the intersection");
            }
          return pass();
        });
    lat("t-radical-lattice", "T-radical maps: Rad joins stay T-radical and are least; meets in T exist; the identity is in T",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          if (L.size() > 4) return vacuous();
          std::vector<LatticeMap> tr;
          for (const auto& g : all_maps(lc.L))
            if (g.profile.t_radical) tr.push_back(g);
          if (std::none_of(tr.begin(), tr.end(), [&](const LatticeMap& g) { return g == identity_map(lc.L); })) return failed("identity not T-radical");
          for (std::size_t i = 0; i < tr.size(); ++i)
            for (std::size_t j = i; j < tr.size(); ++j) {
              LatticeMap h = rad_join({tr[i], tr[j]}).fixpoint();
              if (!h.profile.t_radical) return failed("Rad join of T-radical maps is not T-radical");
              std::optional<LatticeMap> lower;
              for (const auto& k : tr)
                if (leq_map(k, tr[i]) && leq_map(k, tr[j]) && (!lower || leq_map(*lower, k))) lower = k;
              if (!lower) return failed("no common T-radical lower bound");
              for (const auto& k : tr)
                if (leq_map(k, tr[i]) && leq_map(k, tr[j]) && !leq_map(k, *lower)) return failed("T meet does not exist");
              Bits want = sublattice_closure(L, tr[i].fixpoints | tr[j].fixpoints | Bits::single(L.top()));
              if (lower->fixpoints != want) return failed("Fix of the T meet is not the generated sublattice");
            }
          return pass();
        });
    lat("superposition-fixpoint", "superposition of radical maps reaches f of the common fixpoints, below every common fixed radical map",
        [](const LatCase& lc) {
          const Lattice& L = *lc.L;
          if (L.size() > 4) return vacuous();
          std::vector<LatticeMap> rad;
          for (const auto& g : all_maps(lc.L))
            if (g.profile.radical) rad.push_back(g);
          for (std::size_t i = 0; i < rad.size(); ++i)
            for (std::size_t j = i + 1; j < rad.size(); ++j)
              for (std::size_t k = j; k < rad.size(); ++k) {
                std::vector<LatticeMap> gs{rad[i], rad[j], rad[k]};
                auto t = rad_join(gs);
                const LatticeMap& h = t.fixpoint();
                Bits common = rad[i].fixpoints & rad[j].fixpoints & rad[k].fixpoints;
                if (h.fixpoints != common) return failed("Fix of the superposition is not the common fixpoints");
                for (std::size_t s = 1; s < t.steps.size(); ++s)
                  if (!leq_map(t.steps[s - 1].second, t.steps[s].second)) return failed("superposition step decreases");
                for (const auto& f : rad) {
                  bool fixedByAll = std::all_of(gs.begin(), gs.end(), [&](const LatticeMap& g) { return compose(g, f) == f; });
                  if (fixedByAll && !leq_map(h, f)) return failed("superposition is not below a common fixed map");
                }
                for (int x = 0; x < L.size(); ++x)
                  for (int y : common.list())
                    if (L.leq(x, y) && !L.leq(h(x), y)) return failed("h(x) exceeds a fixed majorant");
              }
          return pass();
        });

    // -- subspace lattices --------------------------------------------------
    lat("subspace-modular", "subspace lattices are modular with an HH gap relation", [](const LatCase& lc) {
      if (!lc.ranked || lc.ranked->ambient == 0) return vacuous();
      if (!lc.sp.modular) return failed("subspace lattice not modular");
      if (!classify(builtin_rel(lc.L, Builtin::Gap)).hh) return failed("gap relation not HH");
      return pass();
    });
    lat("codimension-relations-hh", "codimension < n relations and complement-codimension >= n relations are HH; n = inf gives an HH-order; >= 0 is <=",
        [](const LatCase& lc) {
          if (!lc.ranked || lc.ranked->ambient == 0) return vacuous();
          const RankedLattice& R = *lc.ranked;
          for (int n = 1; n <= R.ambient + 1; ++n)
            if (!classify(rel_codim(R, Bound::of(n))).hh) return failed("codim<" + std::to_string(n) + " not HH");
          PropertyProfile inf = classify(rel_codim(R, Bound::inf()));
          if (!inf.hh || !inf.transitive) return failed("codim<inf not an HH-order");
          for (int n = 0; n <= R.ambient + 1; ++n)
            if (!classify(rel_codim_perp(R, Bound::of(n))).hh) return failed("perp>=" + std::to_string(n) + " not HH");
          if (!classify(rel_codim_perp(R, Bound::inf())).hh) return failed("perp>=inf not HH");
          if (!(rel_codim_perp(R, Bound::of(0)) == builtin_rel(lc.L, Builtin::Leq))) return failed("perp>=0 is not <=");
          return pass();
        });
    lat("rank-inequalities", "rank(M v K) - rank(L v K) and rank(M ^ K) - rank(L ^ K) are at most rank(M) - rank(L); the quotient identities hold",
        [](const LatCase& lc) {
          if (!lc.ranked || lc.ranked->ambient == 0) return vacuous();
          const Lattice& L = *lc.L;
          const auto& rk = lc.ranked->rank;
          for (auto [l, m] : lc.pairs)
            for (int k = 0; k < L.size(); ++k) {
              int n = rk[m] - rk[l];
              if (rk[L.join(m, k)] - rk[L.join(l, k)] > n || rk[L.meet(m, k)] - rk[L.meet(l, k)] > n)
                return failed("rank inequality fails at " + iv(L, l, m) + " with " + el(L, k));
              if (L.leq(k, m) && (rk[k] - rk[L.meet(l, k)] != rk[L.join(l, k)] - rk[l] || rk[k] - rk[L.meet(l, k)] > n))
                return failed("quotient identity below M fails at " + el(L, k));
              if (L.leq(l, k) && (rk[m] - rk[L.meet(m, k)] != rk[L.join(m, k)] - rk[k] || rk[m] - rk[L.meet(m, k)] > n))
                return failed("quotient identity above L fails at " + el(L, k));
            }
          return pass();
        });
    return d;
  }();
  return defs;
}

inline const CheckDef& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  fail(ErrorKind::UnknownCheck, "no check named '" + id + "'");
}

// ---------------------------------------------------------------------------
// Running.

struct TheoremReport {
  std::string check;
  std::string instance;
  Verdict verdict = Verdict::Vacuous;
  int pass = 0, vacuous = 0, fail = 0;
  std::string witness;  // first failure
  double seconds = 0;
};

inline Outcome guarded(const std::function<Outcome()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return failed(e.what());
  }
}

inline TheoremReport run_check(const CheckDef& c, const LatCase& lc) {
  auto start = std::chrono::steady_clock::now();
  TheoremReport rep{c.id, lc.name, Verdict::Vacuous, 0, 0, 0, "", 0};
  auto tally = [&](const Outcome& o, const std::string& where) {
    switch (o.verdict) {
      case Verdict::Pass: ++rep.pass; break;
      case Verdict::Vacuous: ++rep.vacuous; break;
      case Verdict::Fail:
        if (rep.fail++ == 0) rep.witness = where + o.witness;
        break;
    }
  };
  if (c.per_lattice) {
    tally(guarded([&] { return c.per_lattice(lc); }), "");
  } else {
    for (const auto& rc : lc.rels) tally(guarded([&] { return c.per_relation(lc, rc); }), rc.name + " " + rc.rel.describe() + ": ");
  }
  rep.verdict = rep.fail ? Verdict::Fail : rep.pass ? Verdict::Pass : Verdict::Vacuous;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::vector<TheoremReport> verify_suite(const std::vector<LatCase>& corpus, const std::vector<std::string>& ids) {
  std::vector<const CheckDef*> checks;
  if (ids.empty())
    for (const auto& c : registry()) checks.push_back(&c);
  else
    for (const auto& id : ids) checks.push_back(&find_check(id));
  // Jobs are (check, lattice) in canonical order; workers fill their own slots.
  const std::size_t jobs = checks.size() * corpus.size();
  std::vector<TheoremReport> out(jobs);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next++) < jobs;) out[k] = run_check(*checks[k / corpus.size()], corpus[k % corpus.size()]);
  };
  unsigned n = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

inline Json reports_to_json(const std::vector<TheoremReport>& reps, uint64_t seed, int samples, bool timing = false) {
  Json rs = Json::array();
  int np = 0, nf = 0, nv = 0;
  std::map<std::string, bool> everPassed;
  for (const auto& r : reps) {
    Json j{{"check", r.check}, {"instance", r.instance}, {"verdict", verdict_name(r.verdict)},
           {"pass", r.pass},   {"vacuous", r.vacuous},   {"fail", r.fail}};
    if (r.fail) j["witness"] = r.witness;
    if (timing) j["seconds"] = r.seconds;
    rs.push_back(j);
    np += r.verdict == Verdict::Pass;
    nf += r.verdict == Verdict::Fail;
    nv += r.verdict == Verdict::Vacuous;
    everPassed[r.check] = everPassed[r.check] || r.pass > 0;
  }
  Json vacuousEverywhere = Json::array();
  for (const auto& [id, ok] : everPassed)
    if (!ok) vacuousEverywhere.push_back(id);
  Json pre{{"seed", seed},
           {"random_relations_per_lattice", samples},
           {"finite_collapses",
            Json::array({"both triangle relations equal the reflexive-transitive closure",
                         "the continuity relation equals equality", "the gap-dense relation equals the reflexive-transitive closure",
                         "JIDC and MIDC hold on every finite lattice"})},
           {"vacuous_on_whole_corpus", vacuousEverywhere}};
  return Json{{"preamble", pre}, {"summary", {{"pass", np}, {"fail", nf}, {"vacuous", nv}}}, {"reports", rs}};
}

// ---------------------------------------------------------------------------
// Mining the example zoo.

struct MineHit {
  std::string lattice;
  Rel rel;
};

namespace detail {

inline bool target_term(const std::string& term, const Rel& r, const PropertyProfile& p) {
  for (auto [k, v] : p.fields())
    if (term == k) return v;
  const Lattice& L = r.host();
  auto allIntervals = [&](auto pred) {
    for (int a = 0; a < L.size(); ++a)
      for (int b : L.up(a).list())
        if (!pred(a, b)) return false;
    return true;
  };
  if (term == "contiguous") return p.up_contiguous && p.down_contiguous;
  if (term == "unique_radicals") return allIntervals([&](int a, int b) { return enumerate_radicals(r, a, b).radicals.count() == 1; });
  if (term == "unique_dual_radicals") return allIntervals([&](int a, int b) { return enumerate_radicals(r, a, b).dual_radicals.count() == 1; });
  if (term == "multi_radical") return !allIntervals([&](int a, int b) { return enumerate_radicals(r, a, b).radicals.count() <= 1; });
  if (term == "multi_dual_radical") return !allIntervals([&](int a, int b) { return enumerate_radicals(r, a, b).dual_radicals.count() <= 1; });
  Rel t = transitive_closure(r);
  PropertyProfile q = classify(t);
  if (term == "triangle_contiguous") return q.up_contiguous && q.down_contiguous;
  if (term == "triangle_up_expanded") return q.up_expanded;
  if (term == "triangle_down_expanded") return q.down_expanded;
  Rel b = bar(r).fixpoint();
  PropertyProfile qb = classify(b);
  if (term == "bar_contiguous") return qb.up_contiguous && qb.down_contiguous;
  fail(ErrorKind::SchemaError, "unknown target term '" + term + "'");
}

}  // namespace detail

// Target: terms joined by '&', each optionally negated with '!'. Terms are
// profile flags or one of contiguous, unique_radicals, unique_dual_radicals,
// multi_radical, multi_dual_radical, triangle_contiguous,
// triangle_up_expanded, triangle_down_expanded, bar_contiguous.
inline bool matches_target(const std::string& target, const Rel& r, const PropertyProfile& p) {
  std::stringstream ss(target);
  std::string term;
  while (std::getline(ss, term, '&')) {
    term.erase(std::remove_if(term.begin(), term.end(), ::isspace), term.end());
    if (term.empty()) continue;
    bool neg = term[0] == '!';
    if (neg) term = term.substr(1);
    if (detail::target_term(term, r, p) == neg) return false;
  }
  return true;
}

inline std::string canonical_rel(const Rel& r, const std::vector<std::vector<int>>& autos) {
  std::string best;
  for (const auto& th : autos) {
    std::vector<std::pair<int, int>> ps;
    for (auto [a, b] : r.strict_pairs()) ps.emplace_back(th[a], th[b]);
    std::sort(ps.begin(), ps.end());
    std::string s = join_str(ps, ";", [](const std::pair<int, int>& p) { return std::to_string(p.first) + "," + std::to_string(p.second); });
    if (best.empty() || s < best) best = s;
  }
  return best;
}

// All relations within the budget on each non-isomorphic lattice; keeps the
// hits with fewest strict pairs, then smallest lattice, one per automorphism class.
inline std::vector<MineHit> mine(const std::vector<std::pair<std::string, LatticePtr>>& lattices, int maxPairs, const std::string& target) {
  if (maxPairs > 6) fail(ErrorKind::BudgetExceeded, "mining budget is at most 6 strict pairs (64 relations)");
  std::vector<MineHit> hits;
  std::set<std::string> seenLattices;
  for (const auto& [name, L] : lattices) {
    if (static_cast<int>(strict_order_pairs(*L).size()) > maxPairs) continue;
    if (L->size() <= 10 && !seenLattices.insert(L->canonical_form()).second) continue;
    auto autos = L->automorphisms();
    std::set<std::string> seen;
    for (auto& r : all_relations(L, maxPairs))
      if (matches_target(target, r, classify(r)) && seen.insert(canonical_rel(r, autos)).second) hits.push_back({name, r});
  }
  if (hits.empty()) return hits;
  auto key = [](const MineHit& h) { return std::make_pair(h.rel.strict_count(), h.rel.size()); };
  auto best = key(*std::min_element(hits.begin(), hits.end(), [&](const MineHit& x, const MineHit& y) { return key(x) < key(y); }));
  std::vector<MineHit> out;
  for (auto& h : hits)
    if (key(h) == best) out.push_back(std::move(h));
  return out;
}

inline std::vector<std::pair<std::string, LatticePtr>> mining_lattices() {
  return {{"chain2", share(chain_lattice(2))}, {"chain3", share(chain_lattice(3))}, {"chain4", share(chain_lattice(4))},
          {"B2", share(diamond_lattice())},    {"M3", share(m3_lattice())},        {"N5", share(n5_lattice())}};
}

}  // namespace latrad
