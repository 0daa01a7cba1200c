#pragma once

#include <string>
#include <utility>
#include <vector>

#include "radical.hpp"

namespace latrad {

// ---------------------------------------------------------------------------
// Enveloping and inscribing subsets.

struct SubsetFamily {
  LatticePtr host;
  Bits members;
  bool enveloping = false;  // every x has a smallest majorant in members
  bool inscribing = false;  // every x has a largest minorant in members

  // A set that is both reports as enveloping; the flags keep the full answer.
  std::string kind() const {
    if (enveloping) return "enveloping";
    if (inscribing) return "inscribing";
    return "neither";
  }
};

namespace detail {

// Smallest element of s, or -1.
inline int least_of(const Lattice& L, const Bits& s) {
  int m = L.meet_set(s);
  return s.test(m) ? m : -1;
}
inline int greatest_of(const Lattice& L, const Bits& s) {
  int j = L.join_set(s);
  return s.test(j) ? j : -1;
}

inline bool meet_closed(const Lattice& L, const Bits& s) {
  auto xs = s.list();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!s.test(L.meet(xs[i], xs[j]))) return false;
  return true;
}
inline bool join_closed(const Lattice& L, const Bits& s) {
  auto xs = s.list();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!s.test(L.join(xs[i], xs[j]))) return false;
  return true;
}

}  // namespace detail

inline Bits meet_closure(const Lattice& L, Bits s) {
  for (bool grew = true; grew;) {
    grew = false;
    auto xs = s.list();
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        int m = L.meet(xs[i], xs[j]);
        if (!s.test(m)) {
          s.set(m);
          grew = true;
        }
      }
  }
  return s;
}
inline Bits join_closure(const Lattice& L, Bits s) {
  for (bool grew = true; grew;) {
    grew = false;
    auto xs = s.list();
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = i + 1; j < xs.size(); ++j) {
        int m = L.join(xs[i], xs[j]);
        if (!s.test(m)) {
          s.set(m);
          grew = true;
        }
      }
  }
  return s;
}

// {x: x majorizes every element of g} within s, and the mirrored set.
inline Bits majorants_in(const Lattice& L, const Bits& s, const Bits& g) {
  Bits out = s;
  g.each([&](int x) { out &= L.up(x); });
  return out;
}
inline Bits minorants_in(const Lattice& L, const Bits& s, const Bits& g) {
  Bits out = s;
  g.each([&](int x) { out &= L.down(x); });
  return out;
}

inline SubsetFamily envelope_check(const LatticePtr& host, const Bits& s) {
  const Lattice& L = *host;
  const int n = L.size();
  SubsetFamily f{host, s, false, false};
  bool envByDef = true, insByDef = true;
  for (int x = 0; x < n; ++x) {
    envByDef = envByDef && detail::least_of(L, s & L.up(x)) >= 0;
    insByDef = insByDef && detail::greatest_of(L, s & L.down(x)) >= 0;
  }
  bool envByClosure = s.test(L.top()) && detail::meet_closed(L, s);
  bool insByClosure = s.test(L.bottom()) && detail::join_closed(L, s);
  if (envByDef != envByClosure || insByDef != insByClosure)
    fail(ErrorKind::InternalInconsistency, "envelope definition and closure test disagree");
  f.enveloping = envByDef;
  f.inscribing = insByDef;

  // For every G: the majorants of G in s have a least element, equal to the
  // meet of those majorants and to the s-join of the envelopes of G.
  if (n <= 10) {
    auto envOf = [&](int x) { return detail::least_of(L, s & L.up(x)); };
    auto insOf = [&](int x) { return detail::greatest_of(L, s & L.down(x)); };
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      Bits g;
      for (int x = 0; x < n; ++x)
        if ((mask >> x) & 1) g.set(x);
      if (f.enveloping) {
        Bits maj = majorants_in(L, s, g);
        int m = detail::least_of(L, maj);
        Bits envs;
        g.each([&](int x) { envs.set(envOf(x)); });
        int sJoin = detail::least_of(L, majorants_in(L, s, envs));
        if (m < 0 || m != L.meet_set(maj) || m != sJoin || (g.subset_of(s) && m != detail::least_of(L, majorants_in(L, s, g))))
          fail(ErrorKind::InternalInconsistency, "least majorant identity fails for an enveloping set");
      }
      if (f.inscribing) {
        Bits mino = minorants_in(L, s, g);
        int m = detail::greatest_of(L, mino);
        Bits ins;
        g.each([&](int x) { ins.set(insOf(x)); });
        int sMeet = detail::greatest_of(L, minorants_in(L, s, ins));
        if (m < 0 || m != L.join_set(mino) || m != sMeet)
          fail(ErrorKind::InternalInconsistency, "greatest minorant identity fails for an inscribing set");
      }
    }
  }
  return f;
}

// x -> least element of s above x.
inline LatticeMap envelope_closure(const SubsetFamily& f) {
  if (!f.enveloping) fail(ErrorKind::WrongKind, "set is " + f.kind() + ", not enveloping");
  const Lattice& L = *f.host;
  std::vector<int> t(L.size());
  for (int x = 0; x < L.size(); ++x) t[x] = detail::least_of(L, f.members & L.up(x));
  LatticeMap m = classify_map(f.host, std::move(t));
  if (!m.profile.radical || m.fixpoints != f.members)
    fail(ErrorKind::InternalInconsistency, "envelope map is not a radical map with the set as fixpoints");
  return m;
}

// x -> greatest element of s below x.
inline LatticeMap inscribe_interior(const SubsetFamily& f) {
  if (!f.inscribing) fail(ErrorKind::WrongKind, "set is " + f.kind() + ", not inscribing");
  const Lattice& L = *f.host;
  std::vector<int> t(L.size());
  for (int x = 0; x < L.size(); ++x) t[x] = detail::greatest_of(L, f.members & L.down(x));
  LatticeMap m = classify_map(f.host, std::move(t));
  if (!m.profile.dual_radical || m.fixpoints != f.members)
    fail(ErrorKind::InternalInconsistency, "inscribe map is not a dual radical map with the set as fixpoints");
  return m;
}

// The closure map of an enveloping set, else the interior map of an
// inscribing one. Either way the fixpoint set is handed back unchanged.
inline LatticeMap envelope_map(const SubsetFamily& f) {
  if (f.enveloping) return envelope_closure(f);
  if (f.inscribing) return inscribe_interior(f);
  fail(ErrorKind::WrongKind, "set is neither enveloping nor inscribing");
}

// All {meet of one element from each set} for a family of sets.
inline Bits meet_blend(const Lattice& L, const std::vector<Bits>& sets) {
  Bits acc;
  if (sets.empty()) return acc;
  acc = sets[0];
  for (std::size_t k = 1; k < sets.size(); ++k) {
    Bits next;
    acc.each([&](int x) { sets[k].each([&](int y) { next.set(L.meet(x, y)); }); });
    acc = next;
  }
  return acc;
}
inline Bits join_blend(const Lattice& L, const std::vector<Bits>& sets) {
  Bits acc;
  if (sets.empty()) return acc;
  acc = sets[0];
  for (std::size_t k = 1; k < sets.size(); ++k) {
    Bits next;
    acc.each([&](int x) { sets[k].each([&](int y) { next.set(L.join(x, y)); }); });
    acc = next;
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Map(Q).

// Pointwise (join, meet).
inline std::pair<LatticeMap, LatticeMap> map_lattice_ops(const std::vector<LatticeMap>& ms) {
  if (ms.empty()) fail(ErrorKind::PreconditionFailed, "empty map list");
  const Lattice& L = *ms[0].host;
  for (std::size_t k = 1; k < ms.size(); ++k)
    if (!(ms[k].host == ms[0].host || *ms[k].host == L)) fail(ErrorKind::HostMismatch, "map " + std::to_string(k) + " lives on another lattice");
  std::vector<int> j = ms[0].table, m = ms[0].table;
  for (std::size_t k = 1; k < ms.size(); ++k)
    for (int x = 0; x < L.size(); ++x) {
      j[x] = L.join(j[x], ms[k](x));
      m[x] = L.meet(m[x], ms[k](x));
    }
  LatticeMap join = classify_map(ms[0].host, std::move(j)), meet = classify_map(ms[0].host, std::move(m));
  bool allRadical = std::all_of(ms.begin(), ms.end(), [](const LatticeMap& g) { return g.profile.radical; });
  if (allRadical) {
    if (!meet.profile.radical) fail(ErrorKind::InternalInconsistency, "meet of radical maps is not radical");
    Bits uni;
    std::vector<Bits> fixes;
    for (const auto& g : ms) {
      uni |= g.fixpoints;
      fixes.push_back(g.fixpoints);
    }
    Bits formula = uni | meet_blend(L, fixes);
    Bits smallest = meet_closure(L, uni | Bits::single(L.top()));
    if (meet.fixpoints != formula || meet.fixpoints != smallest)
      fail(ErrorKind::InternalInconsistency, "fixpoints of the meet of radical maps differ from the meet closure of their union");
  }
  return {join, meet};
}

template <class V>
struct Trace {
  std::vector<std::pair<std::string, V>> steps;  // steps[0] is the input
  bool identity_in_generators = false;
  const V& fixpoint() const { return steps.back().second; }
};

namespace detail {

// Round-robin superposition starting from `start`; stops after a full pass
// that changes nothing.
template <class V, class Apply>
Trace<V> round_robin(const V& start, const std::string& startName, const std::vector<std::string>& names, Apply apply,
                     bool reversed) {
  Trace<V> t;
  t.steps.emplace_back(startName, start);
  const int k = static_cast<int>(names.size());
  int quiet = 0;
  for (int step = 0; quiet < k; ++step) {
    int g = reversed ? k - 1 - step % k : step % k;
    V next = apply(g, t.fixpoint());
    if (next == t.fixpoint()) {
      ++quiet;
    } else {
      quiet = 0;
      t.steps.emplace_back(names[g], std::move(next));
    }
  }
  return t;
}

}  // namespace detail

// Join in Rad of radical maps, realized by the ascending superposition series.
inline Trace<LatticeMap> rad_join(const std::vector<LatticeMap>& gs) {
  if (gs.empty()) fail(ErrorKind::PreconditionFailed, "empty generator list");
  for (std::size_t k = 0; k < gs.size(); ++k)
    if (!gs[k].profile.radical) fail(ErrorKind::NotRadical, "generator " + std::to_string(k) + " is not a radical map");
  const LatticePtr& host = gs[0].host;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < gs.size(); ++k) names.push_back("g" + std::to_string(k));
  auto apply = [&](int g, const LatticeMap& h) { return compose(gs[g], h); };
  auto fwd = detail::round_robin(gs[0], names[0], names, apply, false);
  auto bwd = detail::round_robin(gs.back(), names.back(), names, apply, true);
  if (!(fwd.fixpoint() == bwd.fixpoint()))
    fail(ErrorKind::InternalInconsistency, "superposition fixpoint depends on generator order");
  Bits common = host->all();
  for (const auto& g : gs) common &= g.fixpoints;
  LatticeMap expect = envelope_closure(envelope_check(host, common));
  if (!(fwd.fixpoint() == expect))
    fail(ErrorKind::InternalInconsistency, "superposition fixpoint differs from the envelope of the common fixpoints");
  for (const auto& g : gs)
    if (!(compose(g, fwd.fixpoint()) == fwd.fixpoint()))
      fail(ErrorKind::InternalInconsistency, "superposition fixpoint is not fixed by a generator");
  LatticeMap id = identity_map(host);
  fwd.identity_in_generators = std::any_of(gs.begin(), gs.end(), [&](const LatticeMap& g) { return g == id; });
  return fwd;
}

// ---------------------------------------------------------------------------
// Closures inside Ref(Q).

// Row-wise join saturation: least up-expanded relation containing r.
inline Rel up_expand(const Rel& r) {
  const Lattice& L = r.host();
  std::vector<Bits> rows(r.size());
  for (int a = 0; a < r.size(); ++a) {
    rows[a] = join_closure(L, r.succ(a));
    if (!rows[a].test(L.join_set(rows[a]))) fail(ErrorKind::InternalInconsistency, "pairwise join saturation misses the full join");
  }
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

// Column-wise meet saturation: least down-expanded relation containing r.
inline Rel down_expand(const Rel& r) {
  const Lattice& L = r.host();
  std::vector<Bits> cols(r.size()), rows(r.size());
  for (int b = 0; b < r.size(); ++b) {
    cols[b] = meet_closure(L, r.pred(b));
    if (!cols[b].test(L.meet_set(cols[b]))) fail(ErrorKind::InternalInconsistency, "pairwise meet saturation misses the full meet");
    cols[b].each([&](int a) { rows[a].set(b); });
  }
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

// Largest H-relation inside r: a v x << b v x for all x.
inline Rel h_interior(const Rel& r) {
  const Lattice& L = r.host();
  std::vector<Bits> rows(r.size());
  for (int a = 0; a < r.size(); ++a)
    L.up(a).each([&](int b) {
      bool ok = true;
      for (int x = 0; x < r.size() && ok; ++x) ok = r.has(L.join(a, x), L.join(b, x));
      if (ok) rows[a].set(b);
    });
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

inline Rel dual_h_interior(const Rel& r) {
  const Lattice& L = r.host();
  std::vector<Bits> rows(r.size());
  for (int a = 0; a < r.size(); ++a)
    L.up(a).each([&](int b) {
      bool ok = true;
      for (int x = 0; x < r.size() && ok; ++x) ok = r.has(L.meet(a, x), L.meet(b, x));
      if (ok) rows[a].set(b);
    });
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

// Least H-relation containing r: a ~ b iff b = a v y for some x << y, x <= a.
inline Rel h_closure(const Rel& r) {
  const Lattice& L = r.host();
  std::vector<Bits> rows(r.size());
  for (auto [x, y] : r.strict_pairs())
    L.up(x).each([&](int a) { rows[a].set(L.join(a, y)); });
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

// Least dual H-relation containing r: a ~ b iff a = b ^ x for some x << y, b <= y.
inline Rel dual_h_closure(const Rel& r) {
  const Lattice& L = r.host();
  std::vector<Bits> rows(r.size());
  for (auto [x, y] : r.strict_pairs())
    L.down(y).each([&](int b) { rows[L.meet(b, x)].set(b); });
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

struct RefClosures {
  std::vector<std::pair<std::string, Rel>> items;
  const Rel& get(const std::string& name) const {
    for (const auto& [k, v] : items)
      if (k == name) return v;
    fail(ErrorKind::SchemaError, "no closure named " + name);
  }
};

inline RefClosures refspace_closures(const Rel& r) {
  auto [uc, dc] = uc_dc(r);
  RefClosures c;
  c.items = {{"upper_series", tri_upper(r)},    {"lower_series", tri_lower(r)},      {"up_contiguous", uc},
             {"down_contiguous", dc},            {"up_expanded", up_expand(r)},       {"down_expanded", down_expand(r)},
             {"order", transitive_closure(r)},   {"h_closure", h_closure(r)},         {"dual_h_closure", dual_h_closure(r)},
             {"h_interior", h_interior(r)},      {"dual_h_interior", dual_h_interior(r)}};
  for (const auto& [name, v] : c.items) {
    PropertyProfile p = classify(v);
    bool interior = name == "h_interior" || name == "dual_h_interior";
    bool bounded = interior ? v.subset_of(r) : r.subset_of(v);
    bool member = true;
    if (name == "upper_series" || name == "lower_series" || name == "order") member = p.transitive;
    if (name == "up_contiguous") member = p.up_contiguous;
    if (name == "down_contiguous") member = p.down_contiguous;
    if (name == "up_expanded") member = p.up_expanded;
    if (name == "down_expanded") member = p.down_expanded;
    if (name == "h_closure" || name == "h_interior") member = p.h_relation;
    if (name == "dual_h_closure" || name == "dual_h_interior") member = p.dual_h_relation;
    if (!bounded || !member) fail(ErrorKind::InternalInconsistency, "closure " + name + " left its class on " + r.describe());
  }
  return c;
}

// Least TT-order containing r, by round-robin over the five generating closures.
inline Trace<Rel> tilde(const Rel& r) {
  static const std::vector<std::string> names = {"up_contiguous", "down_contiguous", "up_expanded", "down_expanded", "order"};
  auto apply = [](int g, const Rel& x) -> Rel {
    switch (g) {
      case 0: return uc_dc(x).first;
      case 1: return uc_dc(x).second;
      case 2: return up_expand(x);
      case 3: return down_expand(x);
      default: return transitive_closure(x);
    }
  };
  auto t = detail::round_robin(r, "start", names, apply, false);
  if (!classify(t.fixpoint()).tt_order) fail(ErrorKind::InternalInconsistency, "tilde fixpoint is not a TT-order");
  auto back = detail::round_robin(r, "start", names, apply, true);
  if (!(back.fixpoint() == t.fixpoint())) fail(ErrorKind::InternalInconsistency, "tilde depends on closure order");
  return t;
}

// Least relation containing r fixed by both series closures.
inline Trace<Rel> bar(const Rel& r) {
  static const std::vector<std::string> names = {"upper_series", "lower_series"};
  auto apply = [](int g, const Rel& x) { return g == 0 ? tri_upper(x) : tri_lower(x); };
  auto t = detail::round_robin(r, "start", names, apply, false);
  const Rel& b = t.fixpoint();
  PropertyProfile in = classify(r);
  Rel tl = tilde(r).fixpoint();
  if (!b.subset_of(tl)) fail(ErrorKind::InternalInconsistency, "bar is not inside tilde");
  if (in.transitive && in.up_expanded && in.down_expanded && !(b == r))
    fail(ErrorKind::InternalInconsistency, "bar moves an expanded order");
  if (in.hh && (!(b == tl) || !classify(b).rr_order))
    fail(ErrorKind::InternalInconsistency, "bar of an HH-relation is not the RR-order tilde");
  return t;
}

// A <<-gap dense chain from a to b whose comparable pairs are all bar-related.
inline std::vector<int> gd_witness(const Rel& r, int a, int b) {
  Rel br = bar(r).fixpoint();
  if (!br.has(a, b)) fail(ErrorKind::NotBarRelated, r.pair_str(a, b) + " is not in the bar relation");
  auto chain = *series_between(r, a, b);
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::size_t j = i + 1; j < chain.size(); ++j)
      if (!br.has(chain[i], chain[j])) fail(ErrorKind::InternalInconsistency, "witness chain pair outside bar");
  if (!chain_is_gap_dense(r, chain)) fail(ErrorKind::InternalInconsistency, "witness chain is not gap dense");
  return chain;
}

// ---------------------------------------------------------------------------
// Topologies on a finite set as closure maps on its power set.

// Element -> set of atoms below it, when the lattice is a power set.
inline std::vector<uint32_t> power_set_coords(const Lattice& L) {
  Bits atoms = L.upper_covers(L.bottom());
  const int k = atoms.count();
  if (k > 8 || L.size() != (1 << k)) fail(ErrorKind::PreconditionFailed, "lattice is not a power set");
  auto as = atoms.list();
  std::vector<uint32_t> code(L.size());
  std::vector<bool> seen(L.size());
  for (int x = 0; x < L.size(); ++x) {
    for (int i = 0; i < k; ++i)
      if (L.leq(as[i], x)) code[x] |= 1u << i;
    if (seen[code[x]]) fail(ErrorKind::PreconditionFailed, "lattice is not a power set");
    seen[code[x]] = true;
  }
  for (int x = 0; x < L.size(); ++x)
    for (int y = 0; y < L.size(); ++y)
      if (L.leq(x, y) != ((code[x] & ~code[y]) == 0)) fail(ErrorKind::PreconditionFailed, "lattice is not a power set");
  return code;
}

inline bool is_closed_family(const Lattice& L, const Bits& closed) {
  return closed.test(L.bottom()) && closed.test(L.top()) && detail::meet_closed(L, closed) && detail::join_closed(L, closed);
}

// Closed sets {f(G)} of the topology whose closure operator is f.
inline Bits topology_bridge(const LatticeMap& f) {
  const Lattice& L = *f.host;
  power_set_coords(L);
  if (!f.profile.t_radical) fail(ErrorKind::NotTRadical, f.describe() + " is not a T-radical map");
  if (f(L.bottom()) != L.bottom()) fail(ErrorKind::EmptyNotFixed, "f moves the empty set");
  Bits closed;
  for (int x = 0; x < L.size(); ++x) closed.set(f(x));
  if (!is_closed_family(L, closed)) fail(ErrorKind::InternalInconsistency, "image of a T-radical map is not a closed-set family");
  return closed;
}

// Closure operator of a family of closed sets.
inline LatticeMap closure_of_topology(const LatticePtr& host, const Bits& closed) {
  const Lattice& L = *host;
  power_set_coords(L);
  if (!is_closed_family(L, closed)) fail(ErrorKind::PreconditionFailed, "family is not the closed sets of a topology");
  std::vector<int> t(L.size());
  for (int x = 0; x < L.size(); ++x) t[x] = detail::least_of(L, closed & L.up(x));
  LatticeMap f = classify_map(host, std::move(t));
  if (!f.profile.t_radical) fail(ErrorKind::InternalInconsistency, "closure of a topology is not T-radical");
  return f;
}

}  // namespace latrad
