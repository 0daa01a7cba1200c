#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "relation.hpp"

namespace latrad {

// a <-<< b: [a,<<] meets [a,b] only in a.
inline bool left_holds(const Rel& r, int a, int b) {
  return (r.succ(a) & r.host().interval(a, b)) == Bits::single(a);
}
// a ->>> b: [<<,b] meets [a,b] only in b.
inline bool right_holds(const Rel& r, int a, int b) {
  return (r.pred(b) & r.host().interval(a, b)) == Bits::single(b);
}

struct RadicalSets {
  Bits radicals;       // a << x and x <-<< b
  Bits dual_radicals;  // a ->>> x and x << b
};

inline RadicalSets enumerate_radicals(const Rel& r, int a, int b) {
  RadicalSets out;
  r.host().interval(a, b).each([&](int x) {
    if (r.has(a, x) && left_holds(r, x, b)) out.radicals.set(x);
    if (right_holds(r, a, x) && r.has(x, b)) out.dual_radicals.set(x);
  });
  return out;
}

// Join of the part of [a,<<] inside [a,b].
inline int unique_radical(const Rel& r, int a, int b, const PropertyProfile& p) {
  if (!p.up_expanded || !p.transitive)
    fail(ErrorKind::PreconditionFailed, "radical formula needs an up-expanded order");
  const Lattice& L = r.host();
  int rad = L.join_set(L.interval(a, b) & r.succ(a));
  if (p.t_order && enumerate_radicals(r, a, b).radicals != Bits::single(rad))
    fail(ErrorKind::InternalInconsistency, "T-order with radical set other than {" + L.id(rad) + "} in [" + L.id(a) + "," + L.id(b) + "]");
  return rad;
}
inline int unique_radical(const Rel& r, int a, int b) { return unique_radical(r, a, b, classify(r)); }

inline int unique_dual_radical(const Rel& r, int a, int b, const PropertyProfile& p) {
  if (!p.down_expanded || !p.transitive)
    fail(ErrorKind::PreconditionFailed, "dual radical formula needs a down-expanded order");
  const Lattice& L = r.host();
  int rad = L.meet_set(L.interval(a, b) & r.pred(b));
  if (p.dual_t_order && enumerate_radicals(r, a, b).dual_radicals != Bits::single(rad))
    fail(ErrorKind::InternalInconsistency, "dual T-order with dual radical set other than {" + L.id(rad) + "} in [" + L.id(a) + "," + L.id(b) + "]");
  return rad;
}
inline int unique_dual_radical(const Rel& r, int a, int b) { return unique_dual_radical(r, a, b, classify(r)); }

// ---------------------------------------------------------------------------
// Self-maps.

struct MapProfile {
  bool pre_radical = false, dual_pre_radical = false;
  bool radical = false, dual_radical = false;
  bool t_radical = false, dual_t_radical = false;

  std::vector<std::pair<const char*, bool>> fields() const {
    return {{"pre_radical", pre_radical}, {"dual_pre_radical", dual_pre_radical}, {"radical", radical},
            {"dual_radical", dual_radical}, {"t_radical", t_radical},           {"dual_t_radical", dual_t_radical}};
  }
};

struct LatticeMap {
  LatticePtr host;
  std::vector<int> table;
  MapProfile profile;
  Bits fixpoints;

  int operator()(int x) const { return table[x]; }
  friend bool operator==(const LatticeMap& f, const LatticeMap& g) { return f.table == g.table; }
  std::string describe() const {
    std::vector<int> xs(table.size());
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = static_cast<int>(i);
    return "{" + join_str(xs, ",", [&](int x) { return host->id(x) + "->" + host->id(table[x]); }) + "}";
  }
};

inline MapProfile map_profile(const Lattice& L, const std::vector<int>& g) {
  const int n = L.size();
  MapProfile p;
  bool up = true, down = true, idem = true, mono = true, joins = true, meets = true;
  for (int x = 0; x < n; ++x) {
    idem = idem && g[g[x]] == g[x];
    up = up && L.leq(x, g[x]);
    down = down && L.leq(g[x], x);
    for (int y = 0; y < n; ++y) {
      if (L.leq(x, y)) mono = mono && L.leq(g[x], g[y]);
      joins = joins && g[L.join(x, y)] == L.join(g[x], g[y]);
      meets = meets && g[L.meet(x, y)] == L.meet(g[x], g[y]);
    }
  }
  // x < y < g(x) implies g(y) = g(x), and the mirrored condition.
  bool preUp = true, preDown = true;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (L.lt(x, y) && L.lt(y, g[x]) && g[y] != g[x]) preUp = false;
      if (L.lt(g[x], y) && L.lt(y, x) && g[y] != g[x]) preDown = false;
    }
  p.pre_radical = up && idem && preUp;
  p.dual_pre_radical = down && idem && preDown;
  p.radical = up && idem && mono;
  p.dual_radical = down && idem && mono;
  p.t_radical = up && idem && joins;
  p.dual_t_radical = down && idem && meets;
  return p;
}

inline LatticeMap classify_map(const LatticePtr& host, std::vector<int> table) {
  const int n = host->size();
  if (static_cast<int>(table.size()) != n)
    fail(ErrorKind::SchemaError, "map has " + std::to_string(table.size()) + " entries, lattice has " + std::to_string(n));
  for (int v : table)
    if (v < 0 || v >= n) fail(ErrorKind::SchemaError, "map value out of range");
  LatticeMap m{host, std::move(table), {}, {}};
  m.profile = map_profile(*host, m.table);
  for (int x = 0; x < n; ++x)
    if (m.table[x] == x) m.fixpoints.set(x);
  return m;
}

inline LatticeMap identity_map(const LatticePtr& host) {
  std::vector<int> t(host->size());
  for (int x = 0; x < host->size(); ++x) t[x] = x;
  return classify_map(host, std::move(t));
}
inline LatticeMap constant_map(const LatticePtr& host, int v) {
  return classify_map(host, std::vector<int>(host->size(), v));
}

// g o f
inline LatticeMap compose(const LatticeMap& g, const LatticeMap& f) {
  std::vector<int> t(f.table.size());
  for (std::size_t x = 0; x < t.size(); ++x) t[x] = g.table[f.table[x]];
  return classify_map(f.host, std::move(t));
}

// Every self-map of a host with at most four elements.
inline std::vector<LatticeMap> all_maps(const LatticePtr& host) {
  const int n = host->size();
  if (n > 4) fail(ErrorKind::SizeLimit, "map enumeration limited to 4 elements");
  int total = 1;
  for (int i = 0; i < n; ++i) total *= n;
  std::vector<LatticeMap> out;
  out.reserve(total);
  for (int code = 0; code < total; ++code) {
    std::vector<int> t(n);
    for (int i = 0, c = code; i < n; ++i, c /= n) t[i] = c % n;
    out.push_back(classify_map(host, std::move(t)));
  }
  return out;
}

// x <<^g y iff x <= y and g(x) = g(y).
inline Rel rel_from_map_raw(const LatticeMap& g) {
  const Lattice& L = *g.host;
  std::vector<Bits> rows(L.size());
  for (int x = 0; x < L.size(); ++x)
    L.up(x).each([&](int y) {
      if (g(x) == g(y)) rows[x].set(y);
    });
  return Rel::from_rows(g.host, std::move(rows));
}

// ---------------------------------------------------------------------------
// Radical maps of a relation.

inline std::vector<int> upper_map_table(const Rel& r) {
  std::vector<int> t(r.size());
  for (int a = 0; a < r.size(); ++a) t[a] = r.host().join_set(r.succ(a));
  return t;
}
inline std::vector<int> lower_map_table(const Rel& r) {
  std::vector<int> t(r.size());
  for (int b = 0; b < r.size(); ++b) t[b] = r.host().meet_set(r.pred(b));
  return t;
}

struct RadicalMaps {
  std::optional<LatticeMap> upper;  // a -> join [a,<<], for T-orders
  std::optional<LatticeMap> lower;  // b -> meet [<<,b], for dual T-orders
};

inline RadicalMaps radical_maps(const Rel& r, const PropertyProfile& p) {
  if (!p.t_order && !p.dual_t_order)
    fail(ErrorKind::PreconditionFailed, "relation is neither a T-order nor a dual T-order");
  const Lattice& L = r.host();
  const int n = L.size();
  RadicalMaps out;
  if (p.t_order) {
    LatticeMap m = classify_map(r.host_ptr(), upper_map_table(r));
    if (!m.profile.pre_radical) fail(ErrorKind::InternalInconsistency, "upper map of a T-order is not pre-radical");
    if (p.r_order && !m.profile.radical) fail(ErrorKind::InternalInconsistency, "upper map of an R-order is not radical");
    for (int a = 0; a < n; ++a)
      for (int b : r.succ(a).list())
        if (!r.has(b, m(b)) || m(b) != m(a))
          fail(ErrorKind::InternalInconsistency, "upper map not constant along " + r.pair_str(a, b));
    out.upper = std::move(m);
  }
  if (p.dual_t_order) {
    LatticeMap m = classify_map(r.host_ptr(), lower_map_table(r));
    if (!m.profile.dual_pre_radical) fail(ErrorKind::InternalInconsistency, "lower map of a dual T-order is not dual pre-radical");
    if (p.dual_r_order && !m.profile.dual_radical) fail(ErrorKind::InternalInconsistency, "lower map of a dual R-order is not dual radical");
    for (int a = 0; a < n; ++a)
      for (int b : r.succ(a).list())
        if (m(b) != m(a) || !r.has(m(a), a))
          fail(ErrorKind::InternalInconsistency, "lower map not constant along " + r.pair_str(a, b));
    out.lower = std::move(m);
  }
  if (p.rr_order) {
    const auto &f = *out.upper, &g = *out.lower;
    for (int x = 0; x < n; ++x)
      if (g(f(x)) != g(x) || f(g(x)) != f(x))
        fail(ErrorKind::InternalInconsistency, "radical maps of an RR-order are not conjugate at " + L.id(x));
  }
  return out;
}
inline RadicalMaps radical_maps(const Rel& r) { return radical_maps(r, classify(r)); }

// <<^g, with the inverse identities asserted where they apply.
inline Rel rel_from_map(const LatticeMap& g) {
  Rel r = rel_from_map_raw(g);
  if (g.profile.dual_pre_radical || g.profile.pre_radical) {
    PropertyProfile p = classify(r);
    if (g.profile.dual_pre_radical) {
      if (!p.dual_t_order || !p.up_contiguous || !p.down_contiguous)
        fail(ErrorKind::InternalInconsistency, "relation of a dual pre-radical map is not a contiguous dual T-order");
      if (lower_map_table(r) != g.table) fail(ErrorKind::InternalInconsistency, "lower map of <<^g differs from g");
      if (g.profile.dual_radical && !p.dual_r_order)
        fail(ErrorKind::InternalInconsistency, "relation of a dual radical map is not a dual R-order");
    }
    if (g.profile.pre_radical) {
      if (!p.t_order || !p.up_contiguous || !p.down_contiguous)
        fail(ErrorKind::InternalInconsistency, "relation of a pre-radical map is not a contiguous T-order");
      if (upper_map_table(r) != g.table) fail(ErrorKind::InternalInconsistency, "upper map of <<^g differs from g");
      if (g.profile.radical && !p.r_order) fail(ErrorKind::InternalInconsistency, "relation of a radical map is not an R-order");
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Interval decomposition of TT-orders.

struct Decomposition {
  std::vector<std::pair<int, int>> blocks;  // [lower(l), l] for l fixed by the upper map
  Bits q_upper, q_lower;                    // fixpoints of the upper and lower maps
};

// The block form, found without the radical maps: Q splits into disjoint
// intervals, << is <= inside each and relates nothing across. Returns the
// blocks as (bottom, top) pairs sorted by top, or nothing.
inline std::optional<std::vector<std::pair<int, int>>> interval_partition(const Rel& r) {
  const Lattice& L = r.host();
  const int n = L.size();
  std::vector<int> comp(n);
  for (int x = 0; x < n; ++x) comp[x] = x;
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (auto [a, b] : r.strict_pairs()) comp[find(a)] = find(b);
  std::vector<Bits> members(n);
  for (int x = 0; x < n; ++x) members[find(x)].set(x);
  std::vector<std::pair<int, int>> blocks;
  for (int c = 0; c < n; ++c) {
    if (members[c].none()) continue;
    int lo = L.meet_set(members[c]), hi = L.join_set(members[c]);
    if (!members[c].test(lo) || !members[c].test(hi) || L.interval(lo, hi) != members[c]) return std::nullopt;
    bool full = true;
    members[c].each([&](int x) {
      if ((L.up(x) & members[c]) != (r.succ(x) & members[c])) full = false;
    });
    if (!full) return std::nullopt;
    blocks.emplace_back(lo, hi);
  }
  std::sort(blocks.begin(), blocks.end(), [](auto x, auto y) { return x.second < y.second; });
  return blocks;
}

inline Decomposition decompose(const Rel& r, const PropertyProfile& p) {
  if (!p.tt_order) fail(ErrorKind::NotTTOrder, r.describe() + " is not a TT-order");
  const Lattice& L = r.host();
  const int n = L.size();
  auto maps = radical_maps(r, p);
  const LatticeMap &up = *maps.upper, &lo = *maps.lower;
  Decomposition d;
  d.q_upper = up.fixpoints;
  d.q_lower = lo.fixpoints;
  Bits covered;
  std::vector<int> blockOf(n, -1);
  d.q_upper.each([&](int l) {
    Bits iv = L.interval(lo(l), l);
    if (iv.intersects(covered)) fail(ErrorKind::InternalInconsistency, "decomposition blocks overlap at " + L.id(l));
    covered |= iv;
    iv.each([&](int x) { blockOf[x] = static_cast<int>(d.blocks.size()); });
    d.blocks.emplace_back(lo(l), l);
  });
  if (covered != L.all()) fail(ErrorKind::InternalInconsistency, "decomposition blocks do not cover the lattice");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (r.has(x, y) != (L.leq(x, y) && blockOf[x] == blockOf[y]))
        fail(ErrorKind::InternalInconsistency, "relation and blocks disagree on " + r.pair_str(x, y));
  d.q_upper.each([&](int l) {
    if (!d.q_lower.test(lo(l)) || up(lo(l)) != l) fail(ErrorKind::InternalInconsistency, "radical maps are not inverse on fixpoints");
  });
  d.q_lower.each([&](int m) {
    if (!d.q_upper.test(up(m)) || lo(up(m)) != m) fail(ErrorKind::InternalInconsistency, "radical maps are not inverse on fixpoints");
  });
  return d;
}
inline Decomposition decompose(const Rel& r) { return decompose(r, classify(r)); }

// ---------------------------------------------------------------------------

// (meet [<<,a], join [a,<<]) for any relation.
inline std::pair<int, int> sigma_s(const Rel& r, int a, const PropertyProfile& p) {
  const Lattice& L = r.host();
  int sigma = L.meet_set(r.pred(a)), s = L.join_set(r.succ(a));
  if (p.h_relation || p.dual_h_relation) {
    Rel c = transitive_closure(r);
    if (p.h_relation && !L.leq(s, L.join_set(c.succ(a))))
      fail(ErrorKind::InternalInconsistency, "join of successors exceeds the series radical at " + L.id(a));
    if (p.dual_h_relation && !L.leq(L.meet_set(c.pred(a)), sigma))
      fail(ErrorKind::InternalInconsistency, "meet of predecessors falls below the series dual radical at " + L.id(a));
  }
  return {sigma, s};
}
inline std::pair<int, int> sigma_s(const Rel& r, int a) { return sigma_s(r, a, classify(r)); }

inline bool preserves(const std::vector<int>& t, const Rel& r) {
  for (int x = 0; x < r.size(); ++x)
    for (int y = 0; y < r.size(); ++y)
      if (r.has(t[x], t[y]) != r.has(x, y)) return false;
  return true;
}

struct InvarianceReport {
  int sigma = -1, s = -1;
  bool sigma_fixed = false, s_fixed = false;
  std::optional<bool> upper_fixed, lower_fixed;          // T-order / dual T-order maps
  std::optional<bool> series_upper_fixed, series_lower_fixed;  // H / dual H
  std::optional<bool> series_preserved_up, series_preserved_down;

  bool ok() const {
    auto good = [](const std::optional<bool>& b) { return !b || *b; };
    return sigma_fixed && s_fixed && good(upper_fixed) && good(lower_fixed) && good(series_upper_fixed) &&
           good(series_lower_fixed) && good(series_preserved_up) && good(series_preserved_down);
  }
};

inline InvarianceReport automorphism_invariance(const Rel& r, const std::vector<int>& theta, int a, const PropertyProfile& p) {
  const Lattice& L = r.host();
  if (!L.is_automorphism(theta)) fail(ErrorKind::NotPreserving, "map is not an automorphism of the lattice");
  if (!preserves(theta, r)) fail(ErrorKind::NotPreserving, "automorphism does not preserve " + r.describe());
  if (theta[a] != a) fail(ErrorKind::NotFixed, L.id(a) + " is moved to " + L.id(theta[a]));
  InvarianceReport rep;
  rep.sigma = L.meet_set(r.pred(a));
  rep.s = L.join_set(r.succ(a));
  rep.sigma_fixed = theta[rep.sigma] == rep.sigma;
  rep.s_fixed = theta[rep.s] == rep.s;
  if (p.t_order) {
    int v = L.join_set(r.succ(a));
    rep.upper_fixed = theta[v] == v;
  }
  if (p.dual_t_order) {
    int v = L.meet_set(r.pred(a));
    rep.lower_fixed = theta[v] == v;
  }
  if (p.h_relation || p.dual_h_relation) {
    Rel c = transitive_closure(r);
    if (p.h_relation) {
      int v = L.join_set(c.succ(a));
      rep.series_upper_fixed = theta[v] == v;
      rep.series_preserved_up = preserves(theta, c);
    }
    if (p.dual_h_relation) {
      int v = L.meet_set(c.pred(a));
      rep.series_lower_fixed = theta[v] == v;
      rep.series_preserved_down = preserves(theta, c);
    }
  }
  return rep;
}

}  // namespace latrad
