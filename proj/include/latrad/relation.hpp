#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattice.hpp"

namespace latrad {

// A reflexive relation contained in the lattice order. Row a holds [a,<<],
// column b holds [<<,b].
class Rel {
public:
  static Rel from_rows(LatticePtr host, std::vector<Bits> succ) {
    const Lattice& L = *host;
    const int n = L.size();
    succ.resize(n);
    for (int a = 0; a < n; ++a) {
      succ[a].set(a);
      Bits bad = succ[a] - L.up(a);
      if (bad.any()) {
        int b = bad.first();
        fail(ErrorKind::NotStronger, "(" + L.id(a) + "," + (b < n ? L.id(b) : std::to_string(b)) + ") is not in the order");
      }
    }
    return Rel(std::move(host), std::move(succ));
  }

  static Rel identity(LatticePtr host) { return from_rows(host, std::vector<Bits>(host->size())); }
  static Rel order(LatticePtr host) {
    std::vector<Bits> rows(host->size());
    for (int a = 0; a < host->size(); ++a) rows[a] = host->up(a);
    return Rel(std::move(host), std::move(rows));
  }

  const Lattice& host() const { return *host_; }
  const LatticePtr& host_ptr() const { return host_; }
  int size() const { return static_cast<int>(succ_.size()); }

  bool has(int a, int b) const { return succ_[a].test(b); }
  const Bits& succ(int a) const { return succ_[a]; }
  const Bits& pred(int b) const { return pred_[b]; }
  const std::vector<Bits>& rows() const { return succ_; }

  std::vector<std::pair<int, int>> strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
      succ_[a].each([&](int b) {
        if (b != a) out.emplace_back(a, b);
      });
    return out;
  }
  int strict_count() const {
    int c = 0;
    for (const auto& r : succ_) c += r.count();
    return c - size();
  }

  bool subset_of(const Rel& o) const {
    for (int a = 0; a < size(); ++a)
      if (!succ_[a].subset_of(o.succ_[a])) return false;
    return true;
  }

  friend bool operator==(const Rel& x, const Rel& y) { return x.succ_ == y.succ_; }

  std::string pair_str(int a, int b) const { return "(" + host_->id(a) + "," + host_->id(b) + ")"; }

  std::string describe() const {
    return "{" + join_str(strict_pairs(), ",", [&](const auto& p) { return pair_str(p.first, p.second); }) + "}";
  }

private:
  Rel(LatticePtr host, std::vector<Bits> succ) : host_(std::move(host)), succ_(std::move(succ)) {
    pred_.assign(succ_.size(), Bits{});
    for (int a = 0; a < size(); ++a) succ_[a].each([&](int b) { pred_[b].set(a); });
  }

  LatticePtr host_;
  std::vector<Bits> succ_, pred_;
};

inline bool same_host(const Rel& x, const Rel& y) {
  return x.host_ptr() == y.host_ptr() || x.host() == y.host();
}

inline Rel rel_from_pairs(const LatticePtr& host, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Bits> rows(host->size());
  for (auto [a, b] : pairs) {
    if (!host->leq(a, b)) fail(ErrorKind::NotStronger, "(" + host->id(a) + "," + host->id(b) + ") is not in the order");
    rows[a].set(b);
  }
  return Rel::from_rows(host, std::move(rows));
}

inline Rel rel_from_pairs(const LatticePtr& host, const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<int, int>> idx;
  for (const auto& [a, b] : pairs) idx.emplace_back(host->index(a), host->index(b));
  return rel_from_pairs(host, idx);
}

// The relation b << a on the order-dual host.
inline Rel mirror(const Rel& r, const LatticePtr& dualHost) {
  std::vector<Bits> rows(r.size());
  for (int a = 0; a < r.size(); ++a) rows[a] = r.pred(a);
  return Rel::from_rows(dualHost, std::move(rows));
}

// ---------------------------------------------------------------------------
// Chains.

// True when the chain (listed bottom-up) has no two neighbours; i.e. for all
// x<y in C some z in C lies strictly between.
inline bool chain_is_continuous(const Lattice& L, const std::vector<int>& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) {
      bool between = false;
      for (std::size_t k = 0; k < c.size() && !between; ++k)
        between = L.lt(c[i], c[k]) && L.lt(c[k], c[j]);
      if (!between) return false;
    }
  return true;
}

// A finite chain C is <<-gap dense when every z<w in C admits u<<v in [z,w]_C
// with [u,v]_C a gap of C.
inline bool chain_is_gap_dense(const Rel& r, const std::vector<int>& c) {
  const Lattice& L = r.host();
  auto gapInChain = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (L.lt(c[i], c[k]) && L.lt(c[k], c[j])) return false;
    return true;
  };
  for (std::size_t z = 0; z < c.size(); ++z)
    for (std::size_t w = 0; w < c.size(); ++w) {
      if (!L.lt(c[z], c[w])) continue;
      bool found = false;
      for (std::size_t u = 0; u < c.size() && !found; ++u)
        for (std::size_t v = 0; v < c.size() && !found; ++v)
          found = L.leq(c[z], c[u]) && L.lt(c[u], c[v]) && L.leq(c[v], c[w]) && r.has(c[u], c[v]) && gapInChain(u, v);
      if (!found) return false;
    }
  return true;
}

// ---------------------------------------------------------------------------
// Builtin relations.

enum class Builtin { Leq, Eq, Gap, Cont };

inline Builtin parse_builtin(const std::string& s) {
  if (s == "leq") return Builtin::Leq;
  if (s == "eq") return Builtin::Eq;
  if (s == "gap") return Builtin::Gap;
  if (s == "cont") return Builtin::Cont;
  fail(ErrorKind::SchemaError, "unknown builtin relation '" + s + "' (expected leq, eq, gap or cont)");
}

inline Rel builtin_rel(const LatticePtr& host, Builtin kind) {
  const Lattice& L = *host;
  const int n = L.size();
  std::vector<Bits> rows(n);
  switch (kind) {
    case Builtin::Leq:
      return Rel::order(host);
    case Builtin::Eq:
      break;
    case Builtin::Gap:
      for (auto [a, b] : L.covers()) rows[a].set(b);
      break;
    case Builtin::Cont:
      for (int a = 0; a < n; ++a)
        L.up(a).each([&](int b) {
          if (a == b) return;
          for (const auto& c : L.maximal_chains(a, b))
            if (chain_is_continuous(L, c)) {
              rows[a].set(b);
              break;
            }
        });
      break;
  }
  return Rel::from_rows(host, std::move(rows));
}

// ---------------------------------------------------------------------------
// Property predicates. Each *_violation returns a human-checkable witness when
// the property fails.

using Violation = std::optional<std::string>;

inline Violation up_contiguous_violation(const Rel& r) {
  const Lattice& L = r.host();
  for (int a = 0; a < r.size(); ++a)
    for (int b : r.succ(a).list()) {
      Bits bad = L.interval(a, b) - r.pred(b);
      if (bad.any()) return r.pair_str(a, b) + " in relation but " + r.pair_str(bad.first(), b) + " is not";
    }
  return std::nullopt;
}

inline Violation down_contiguous_violation(const Rel& r) {
  const Lattice& L = r.host();
  for (int a = 0; a < r.size(); ++a)
    for (int b : r.succ(a).list()) {
      Bits bad = L.interval(a, b) - r.succ(a);
      if (bad.any()) return r.pair_str(a, b) + " in relation but " + r.pair_str(a, bad.first()) + " is not";
    }
  return std::nullopt;
}

namespace detail {

// Pairwise closure of s under op; returns the offending pair if not closed.
template <class Op>
std::optional<std::pair<int, int>> closed_pairwise(const Bits& s, Op op) {
  auto xs = s.list();
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!s.test(op(xs[i], xs[j]))) return std::make_pair(xs[i], xs[j]);
  return std::nullopt;
}

// Closure of s under op over all nonempty subsets (|s| <= 16).
template <class Op>
bool closed_all_subsets(const Bits& s, Op op) {
  auto xs = s.list();
  const int k = static_cast<int>(xs.size());
  if (k > 16) return true;
  std::vector<int> agg(std::size_t{1} << k);
  for (uint32_t mask = 1; mask < (1u << k); ++mask) {
    uint32_t rest = mask & (mask - 1);
    int e = xs[std::countr_zero(mask)];
    agg[mask] = rest ? op(agg[rest], e) : e;
    if (!s.test(agg[mask])) return false;
  }
  return true;
}

}  // namespace detail

inline Violation up_expanded_violation(const Rel& r) {
  const Lattice& L = r.host();
  auto op = [&](int x, int y) { return L.join(x, y); };
  for (int a = 0; a < r.size(); ++a) {
    auto bad = detail::closed_pairwise(r.succ(a), op);
    if (L.size() <= 10 && detail::closed_all_subsets(r.succ(a), op) != !bad)
      fail(ErrorKind::InternalInconsistency, "pairwise and full join closure disagree");
    if (bad)
      return "[" + L.id(a) + ",<<] contains " + L.id(bad->first) + " and " + L.id(bad->second) + " but not their join " +
             L.id(L.join(bad->first, bad->second));
  }
  return std::nullopt;
}

inline Violation down_expanded_violation(const Rel& r) {
  const Lattice& L = r.host();
  auto op = [&](int x, int y) { return L.meet(x, y); };
  for (int b = 0; b < r.size(); ++b) {
    auto bad = detail::closed_pairwise(r.pred(b), op);
    if (L.size() <= 10 && detail::closed_all_subsets(r.pred(b), op) != !bad)
      fail(ErrorKind::InternalInconsistency, "pairwise and full meet closure disagree");
    if (bad)
      return "[<<," + L.id(b) + "] contains " + L.id(bad->first) + " and " + L.id(bad->second) + " but not their meet " +
             L.id(L.meet(bad->first, bad->second));
  }
  return std::nullopt;
}

inline Violation transitive_violation(const Rel& r) {
  for (int a = 0; a < r.size(); ++a)
    for (int b : r.succ(a).list()) {
      Bits bad = r.succ(b) - r.succ(a);
      if (bad.any()) return r.pair_str(a, b) + " and " + r.pair_str(b, bad.first()) + " but not " + r.pair_str(a, bad.first());
    }
  return std::nullopt;
}

// a << b implies a v x << b v x for all x.
inline Violation h_violation(const Rel& r) {
  const Lattice& L = r.host();
  for (int a = 0; a < r.size(); ++a)
    for (int b : r.succ(a).list())
      for (int x = 0; x < r.size(); ++x)
        if (!r.has(L.join(a, x), L.join(b, x)))
          return r.pair_str(a, b) + " but not " + r.pair_str(L.join(a, x), L.join(b, x)) + " (join with " + L.id(x) + ")";
  return std::nullopt;
}

// a << b implies a ^ x << b ^ x for all x.
inline Violation dual_h_violation(const Rel& r) {
  const Lattice& L = r.host();
  for (int a = 0; a < r.size(); ++a)
    for (int b : r.succ(a).list())
      for (int x = 0; x < r.size(); ++x)
        if (!r.has(L.meet(a, x), L.meet(b, x)))
          return r.pair_str(a, b) + " but not " + r.pair_str(L.meet(a, x), L.meet(b, x)) + " (meet with " + L.id(x) + ")";
  return std::nullopt;
}

// Up-contiguous, and a^b << b implies a << a v b.
inline bool h_by_contiguity(const Rel& r) {
  const Lattice& L = r.host();
  if (up_contiguous_violation(r)) return false;
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      if (r.has(L.meet(a, b), b) && !r.has(a, L.join(a, b))) return false;
  return true;
}

// a << b and a <= c imply c << b v c.
inline bool h_by_shift(const Rel& r) {
  const Lattice& L = r.host();
  for (int a = 0; a < r.size(); ++a)
    for (int b : r.succ(a).list())
      for (int c : L.up(a).list())
        if (!r.has(c, L.join(b, c))) return false;
  return true;
}

inline bool dual_h_by_contiguity(const Rel& r) {
  const Lattice& L = r.host();
  if (down_contiguous_violation(r)) return false;
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b)
      if (r.has(a, L.join(a, b)) && !r.has(L.meet(a, b), b)) return false;
  return true;
}

// a << b and c <= b imply a ^ c << c.
inline bool dual_h_by_shift(const Rel& r) {
  const Lattice& L = r.host();
  for (int a = 0; a < r.size(); ++a)
    for (int b : r.succ(a).list())
      for (int c : L.down(b).list())
        if (!r.has(L.meet(a, c), c)) return false;
  return true;
}

struct PropertyProfile {
  bool up_contiguous = false, down_contiguous = false;
  bool up_expanded = false, down_expanded = false;
  bool transitive = false;
  bool h_relation = false, dual_h_relation = false, hh = false;
  bool t_order = false, dual_t_order = false, tt_order = false;
  bool r_order = false, dual_r_order = false, rr_order = false;

  std::vector<std::pair<const char*, bool>> fields() const {
    return {{"up_contiguous", up_contiguous}, {"down_contiguous", down_contiguous},
            {"up_expanded", up_expanded},     {"down_expanded", down_expanded},
            {"transitive", transitive},       {"h_relation", h_relation},
            {"dual_h_relation", dual_h_relation}, {"hh", hh},
            {"t_order", t_order},             {"dual_t_order", dual_t_order},
            {"tt_order", tt_order},           {"r_order", r_order},
            {"dual_r_order", dual_r_order},   {"rr_order", rr_order}};
  }
  friend bool operator==(const PropertyProfile&, const PropertyProfile&) = default;
};

inline PropertyProfile classify(const Rel& r) {
  PropertyProfile p;
  p.up_contiguous = !up_contiguous_violation(r);
  p.down_contiguous = !down_contiguous_violation(r);
  p.up_expanded = !up_expanded_violation(r);
  p.down_expanded = !down_expanded_violation(r);
  p.transitive = !transitive_violation(r);
  p.h_relation = !h_violation(r);
  if (p.h_relation != h_by_contiguity(r) || p.h_relation != h_by_shift(r))
    fail(ErrorKind::InternalInconsistency, "the three join-compatibility conditions disagree on " + r.describe());
  p.dual_h_relation = !dual_h_violation(r);
  if (p.dual_h_relation != dual_h_by_contiguity(r) || p.dual_h_relation != dual_h_by_shift(r))
    fail(ErrorKind::InternalInconsistency, "the three meet-compatibility conditions disagree on " + r.describe());
  p.hh = p.h_relation && p.dual_h_relation;
  p.t_order = p.transitive && p.up_contiguous && p.up_expanded;
  p.dual_t_order = p.transitive && p.down_contiguous && p.down_expanded;
  p.tt_order = p.t_order && p.dual_t_order;
  p.r_order = p.up_expanded && p.h_relation && p.transitive;
  p.dual_r_order = p.down_expanded && p.dual_h_relation && p.transitive;
  p.rr_order = p.r_order && p.dual_r_order;
  return p;
}

// ---------------------------------------------------------------------------
// Derived relations.

// (left, right): a left b iff [a,<<] meets [a,b] only in a;
// a right b iff [<<,b] meets [a,b] only in b.
inline std::pair<Rel, Rel> complements(const Rel& r) {
  const Lattice& L = r.host();
  const int n = L.size();
  std::vector<Bits> left(n), right(n);
  for (int a = 0; a < n; ++a)
    L.up(a).each([&](int b) {
      Bits iv = L.interval(a, b);
      if ((r.succ(a) & iv) == Bits::single(a)) left[a].set(b);
      if ((r.pred(b) & iv) == Bits::single(b)) right[a].set(b);
    });
  return {Rel::from_rows(r.host_ptr(), std::move(left)), Rel::from_rows(r.host_ptr(), std::move(right))};
}

inline Rel left_complement(const Rel& r) { return complements(r).first; }
inline Rel right_complement(const Rel& r) { return complements(r).second; }

namespace detail {

inline std::pair<Rel, Rel> lo_up_raw(const Rel& r) {
  const Lattice& L = r.host();
  const int n = L.size();
  std::vector<Bits> lo(n), up(n);
  for (int a = 0; a < n; ++a)
    L.up(a).each([&](int b) {
      Bits iv = L.interval(a, b);
      bool lower = true, upper = true;
      iv.each([&](int x) {
        if (x != a && ((r.pred(x) & iv) - Bits::single(x)).none()) lower = false;
        if (x != b && ((r.succ(x) & iv) - Bits::single(x)).none()) upper = false;
      });
      if (lower) lo[a].set(b);
      if (upper) up[a].set(b);
    });
  return {Rel::from_rows(r.host_ptr(), std::move(lo)), Rel::from_rows(r.host_ptr(), std::move(up))};
}

}  // namespace detail

// (lo, up): a lo b iff [a,b] is a lower <<-set, a up b iff it is an upper <<-set.
inline std::pair<Rel, Rel> lo_up(const Rel& r) {
  auto res = detail::lo_up_raw(r);
  auto [left, right] = complements(r);
  if (!(res.first == left_complement(right)))
    fail(ErrorKind::InternalInconsistency, "lo relation differs from the complement of the complement on " + r.describe());
  if (!(res.second == right_complement(left)))
    fail(ErrorKind::InternalInconsistency, "up relation differs from the complement of the complement on " + r.describe());
  if (!(detail::lo_up_raw(res.first).first == res.first) || !(detail::lo_up_raw(res.second).second == res.second))
    fail(ErrorKind::InternalInconsistency, "lo/up is not idempotent on " + r.describe());
  return res;
}

// Reflexive-transitive closure by Warshall's algorithm.
inline Rel transitive_closure(const Rel& r) {
  std::vector<Bits> rows = r.rows();
  const int n = r.size();
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (rows[i].test(k)) rows[i] |= rows[k];
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

// Shortest chain a = x0 < x1 < ... < xk = b with consecutive pairs related,
// found breadth-first with successors visited by index.
inline std::optional<std::vector<int>> series_between(const Rel& r, int a, int b) {
  const int n = r.size();
  std::vector<int> parent(n, -1);
  std::deque<int> q{a};
  parent[a] = a;
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == b) break;
    (r.succ(x) - Bits::single(x)).each([&](int y) {
      if (parent[y] < 0) {
        parent[y] = x;
        q.push_back(y);
      }
    });
  }
  if (parent[b] < 0) return std::nullopt;
  std::vector<int> chain{b};
  while (chain.back() != a) chain.push_back(parent[chain.back()]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

// Independent oracle for the triangle relations: reachability along related
// steps, one breadth-first search per source.
inline Rel series_relation(const Rel& r) {
  const int n = r.size();
  std::vector<Bits> rows(n);
  for (int a = 0; a < n; ++a) {
    Bits seen = Bits::single(a);
    std::deque<int> q{a};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      (r.succ(x) - seen).each([&](int y) {
        seen.set(y);
        q.push_back(y);
      });
    }
    rows[a] = seen;
  }
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

struct Triangles {
  Rel lower;  // descending gap chains
  Rel upper;  // ascending gap chains
};

// On a finite lattice a complete lower (upper) <<-gap chain from a to b is a
// finite chain whose consecutive pairs are related, so both triangle
// relations coincide with the reflexive-transitive closure.
inline Triangles triangles(const Rel& r) {
  Rel c = transitive_closure(r);
  return {c, c};
}

inline Rel tri_lower(const Rel& r) { return transitive_closure(r); }
inline Rel tri_upper(const Rel& r) { return transitive_closure(r); }

inline std::vector<int> triangle_witness(const Rel& r, int a, int b) {
  auto c = series_between(r, a, b);
  if (!c) fail(ErrorKind::NoWitness, r.pair_str(a, b) + " is not joined by a chain of related steps");
  return *c;
}

// (uc, dc): a uc b iff some c << b has a in [c,b]; a dc b iff some a << c has b in [a,c].
inline std::pair<Rel, Rel> uc_dc(const Rel& r) {
  const Lattice& L = r.host();
  const int n = L.size();
  std::vector<Bits> uc(n), dc(n);
  for (int c = 0; c < n; ++c)
    r.succ(c).each([&](int b) {
      Bits iv = L.interval(c, b);
      iv.each([&](int a) { uc[a].set(b); });
      dc[c] |= iv;
    });
  return {Rel::from_rows(r.host_ptr(), std::move(uc)), Rel::from_rows(r.host_ptr(), std::move(dc))};
}

// (meet, join) of a nonempty list of relations on one host.
inline std::pair<Rel, Rel> rel_meet_join(const std::vector<Rel>& rs) {
  if (rs.empty()) fail(ErrorKind::PreconditionFailed, "empty relation list");
  std::vector<Bits> m = rs[0].rows(), j = rs[0].rows();
  for (std::size_t k = 1; k < rs.size(); ++k) {
    if (!same_host(rs[0], rs[k])) fail(ErrorKind::HostMismatch, "relation " + std::to_string(k) + " lives on another lattice");
    for (int a = 0; a < rs[0].size(); ++a) {
      m[a] &= rs[k].succ(a);
      j[a] |= rs[k].succ(a);
    }
  }
  return {Rel::from_rows(rs[0].host_ptr(), std::move(m)), Rel::from_rows(rs[0].host_ptr(), std::move(j))};
}

// a gd b iff a finite <<-gap dense chain runs from a to b. Taking neighbouring
// z<w in the density condition forces every consecutive pair of the chain to be
// related; conversely such a chain is gap dense. The search below follows
// related steps and confirms density on the chain it finds for small hosts.
inline Rel gap_dense(const Rel& r) {
  const int n = r.size();
  std::vector<Bits> rows(n);
  for (int a = 0; a < n; ++a) {
    Bits seen = Bits::single(a);
    std::vector<int> stack{a};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      (r.succ(x) - seen).each([&](int y) {
        seen.set(y);
        stack.push_back(y);
      });
    }
    rows[a] = seen;
    if (n <= 32)
      seen.each([&](int b) {
        if (!chain_is_gap_dense(r, *series_between(r, a, b)))
          fail(ErrorKind::InternalInconsistency, "series chain is not gap dense");
      });
  }
  return Rel::from_rows(r.host_ptr(), std::move(rows));
}

// ---------------------------------------------------------------------------
// Enumeration of Ref(Q).

inline std::vector<std::pair<int, int>> strict_order_pairs(const Lattice& L) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < L.size(); ++a)
    L.up(a).each([&](int b) {
      if (a != b) out.emplace_back(a, b);
    });
  return out;
}

inline Rel rel_from_mask(const LatticePtr& host, const std::vector<std::pair<int, int>>& pairs, uint64_t mask) {
  std::vector<Bits> rows(host->size());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if ((mask >> k) & 1) rows[pairs[k].first].set(pairs[k].second);
  return Rel::from_rows(host, std::move(rows));
}

// Every reflexive relation inside the order, indexed by the bitmask over the
// strict pairs (in strict_order_pairs order).
inline std::vector<Rel> all_relations(const LatticePtr& host, int maxStrictPairs = 6) {
  auto pairs = strict_order_pairs(*host);
  if (static_cast<int>(pairs.size()) > maxStrictPairs)
    fail(ErrorKind::BudgetExceeded, std::to_string(pairs.size()) + " strict pairs exceed the budget of " + std::to_string(maxStrictPairs));
  std::vector<Rel> out;
  out.reserve(std::size_t{1} << pairs.size());
  for (uint64_t m = 0; m < (uint64_t{1} << pairs.size()); ++m) out.push_back(rel_from_mask(host, pairs, m));
  return out;
}

// Seeded random relations. Densities cycle through 1/8, 1/4, 1/2, 3/4 so that
// both sparse and dense relations occur.
inline std::vector<Rel> sample_relations(const LatticePtr& host, int count, uint64_t seed) {
  static constexpr int kNum[] = {1, 2, 4, 6};
  auto pairs = strict_order_pairs(*host);
  Rng rng(seed);
  std::vector<Rel> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    std::vector<Bits> rows(host->size());
    for (auto [a, b] : pairs)
      if (rng.chance(kNum[t % 4], 8)) rows[a].set(b);
    out.push_back(Rel::from_rows(host, std::move(rows)));
  }
  return out;
}

}  // namespace latrad
