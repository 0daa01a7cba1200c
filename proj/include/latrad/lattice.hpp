#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "errors.hpp"
#include "util.hpp"

namespace latrad {

// A finite lattice. Elements are dense indices 0..n-1 with external string ids.
// Immutable after construction.
class Lattice {
public:
  static Lattice from_covers(std::vector<std::string> ids,
                             const std::vector<std::pair<std::string, std::string>>& covers) {
    auto index = make_index(ids);
    std::vector<std::pair<int, int>> idx;
    idx.reserve(covers.size());
    for (const auto& [x, y] : covers) {
      auto ix = index.find(x), iy = index.find(y);
      if (ix == index.end()) fail(ErrorKind::SchemaError, "unknown element '" + x + "' in covers");
      if (iy == index.end()) fail(ErrorKind::SchemaError, "unknown element '" + y + "' in covers");
      idx.emplace_back(ix->second, iy->second);
    }
    return from_cover_indices(std::move(ids), idx);
  }

  static Lattice from_cover_indices(std::vector<std::string> ids,
                                    const std::vector<std::pair<int, int>>& covers) {
    const int n = static_cast<int>(ids.size());
    check_size(n);
    std::vector<std::vector<int>> adj(n);
    for (auto [x, y] : covers) {
      if (x < 0 || y < 0 || x >= n || y >= n) fail(ErrorKind::SchemaError, "cover index out of range");
      if (x == y) fail(ErrorKind::NotALattice, "cover (" + ids[x] + "," + ids[x] + ") is a loop");
      adj[x].push_back(y);
    }
    // up[i] = everything reachable from i, including i.
    std::vector<Bits> up(n);
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    std::function<void(int)> dfs = [&](int v) {
      state[v] = 1;
      up[v].set(v);
      for (int w : adj[v]) {
        if (state[w] == 1) fail(ErrorKind::NotALattice, "cover graph has a cycle through " + ids[w]);
        if (state[w] == 0) dfs(w);
        up[v] |= up[w];
      }
      state[v] = 2;
    };
    for (int v = 0; v < n; ++v)
      if (state[v] == 0) dfs(v);
    return Lattice(std::move(ids), std::move(up));
  }

  // leq(i, j) must be a partial order on 0..n-1.
  static Lattice from_order(std::vector<std::string> ids, const std::function<bool(int, int)>& leq) {
    const int n = static_cast<int>(ids.size());
    check_size(n);
    std::vector<Bits> up(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (leq(i, j)) up[i].set(j);
    for (int i = 0; i < n; ++i) {
      if (!up[i].test(i)) fail(ErrorKind::NotALattice, "order is not reflexive at " + ids[i]);
      for (int j = 0; j < n; ++j) {
        if (i != j && up[i].test(j) && up[j].test(i))
          fail(ErrorKind::NotALattice, "order is not antisymmetric on (" + ids[i] + "," + ids[j] + ")");
        if (up[i].test(j) && !up[j].subset_of(up[i]))
          fail(ErrorKind::NotALattice, "order is not transitive through " + ids[j]);
      }
    }
    return Lattice(std::move(ids), std::move(up));
  }

  int size() const { return n_; }
  const std::string& id(int i) const { return ids_[i]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<int> find(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  int index(const std::string& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) fail(ErrorKind::SchemaError, "unknown element '" + s + "'");
    return it->second;
  }

  bool leq(int a, int b) const { return up_[a].test(b); }
  bool lt(int a, int b) const { return a != b && up_[a].test(b); }
  bool comparable(int a, int b) const { return leq(a, b) || leq(b, a); }
  const Bits& up(int a) const { return up_[a]; }
  const Bits& down(int a) const { return down_[a]; }
  Bits all() const { return Bits::prefix(n_); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }

  // Empty set meets to top and joins to bottom.
  int meet_set(const Bits& s) const {
    int m = top_;
    s.each([&](int x) { m = meet(m, x); });
    return m;
  }
  int join_set(const Bits& s) const {
    int j = bottom_;
    s.each([&](int x) { j = join(j, x); });
    return j;
  }

  Bits interval(int a, int b) const {
    if (!leq(a, b)) fail(ErrorKind::NotComparable, ids_[a] + " is not below " + ids_[b]);
    return up_[a] & down_[b];
  }
  bool is_gap(int a, int b) const { return a != b && interval(a, b).count() == 2; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const Bits& upper_covers(int a) const { return ucov_[a]; }
  const Bits& lower_covers(int a) const { return lcov_[a]; }

  // Elements sorted so that x < y implies x comes first.
  const std::vector<int>& linear_order() const { return linear_; }
  // Length of the longest chain from bottom to a.
  int height(int a) const { return height_[a]; }

  // All maximal chains of [a,b], each listed bottom-up. Chains are produced in
  // depth-first order with covers visited by index.
  std::vector<std::vector<int>> maximal_chains(int a, int b, std::size_t limit = 1u << 20) const {
    if (!leq(a, b)) fail(ErrorKind::NotComparable, ids_[a] + " is not below " + ids_[b]);
    std::vector<std::vector<int>> out;
    std::vector<int> cur{a};
    std::function<void(int)> go = [&](int x) {
      if (out.size() >= limit) fail(ErrorKind::SizeLimit, "too many maximal chains");
      if (x == b) {
        out.push_back(cur);
        return;
      }
      (ucov_[x] & down_[b]).each([&](int y) {
        cur.push_back(y);
        go(y);
        cur.pop_back();
      });
    };
    go(a);
    for (const auto& c : out) assert_chain_complete(c);
    return out;
  }

  // A finite chain contains meets and joins of all its nonempty subsets; check it.
  void assert_chain_complete(const std::vector<int>& c) const {
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
      if (!lt(c[i], c[i + 1])) fail(ErrorKind::InternalInconsistency, "chain out of order");
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i; j < c.size(); ++j)
        if (meet(c[i], c[j]) != c[i] || join(c[i], c[j]) != c[j])
          fail(ErrorKind::InternalInconsistency, "chain is not closed under meet/join");
  }

  Lattice dual() const {
    std::vector<Bits> up = down_;
    return Lattice(ids_, std::move(up));
  }

  bool is_automorphism(const std::vector<int>& t) const {
    if (static_cast<int>(t.size()) != n_) return false;
    Bits seen;
    for (int x : t) {
      if (x < 0 || x >= n_ || seen.test(x)) return false;
      seen.set(x);
    }
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y)
        if (leq(x, y) != leq(t[x], t[y])) return false;
    return true;
  }

  // All order automorphisms, identity first, then in lexicographic order.
  std::vector<std::vector<int>> automorphisms(int maxSize = 64) const {
    if (n_ > maxSize) fail(ErrorKind::SizeLimit, "automorphism search limited to " + std::to_string(maxSize) + " elements");
    std::vector<std::vector<int>> out;
    std::vector<int> img(n_, -1);
    Bits used;
    const auto& order = linear_;
    std::function<void(int)> go = [&](int k) {
      if (k == n_) {
        out.push_back(img);
        return;
      }
      int x = order[k];
      for (int y = 0; y < n_; ++y) {
        if (used.test(y) || signature(x) != signature(y)) continue;
        bool ok = true;
        for (int j = 0; j < k && ok; ++j) {
          int p = order[j];
          ok = leq(p, x) == leq(img[p], y) && leq(x, p) == leq(y, img[p]);
        }
        if (!ok) continue;
        img[x] = y;
        used.set(y);
        go(k + 1);
        used.reset(y);
        img[x] = -1;
      }
    };
    go(0);
    std::sort(out.begin(), out.end());
    std::vector<int> ident(n_);
    std::iota(ident.begin(), ident.end(), 0);
    auto it = std::find(out.begin(), out.end(), ident);
    if (it != out.end()) std::rotate(out.begin(), it, it + 1);
    for (const auto& t : out)
      for (int x = 0; x < n_; ++x)
        for (int y = 0; y < n_; ++y)
          if (t[join(x, y)] != join(t[x], t[y]) || t[meet(x, y)] != meet(t[x], t[y]))
            fail(ErrorKind::InternalInconsistency, "automorphism does not preserve joins");
    return out;
  }

  // Isomorphism invariant string: the lexicographically least encoding of the
  // order over all linear extensions.
  std::string canonical_form(int maxSize = 10) const {
    if (n_ > maxSize) fail(ErrorKind::SizeLimit, "canonical form limited to " + std::to_string(maxSize) + " elements");
    std::vector<uint32_t> best, cur;
    std::vector<int> pos(n_, -1);
    std::vector<int> placed;
    bool haveBest = false;
    std::function<void(bool)> go = [&](bool strictlyLess) {
      int k = static_cast<int>(placed.size());
      if (k == n_) {
        if (!haveBest || strictlyLess) {
          best = cur;
          haveBest = true;
        }
        return;
      }
      for (int x = 0; x < n_; ++x) {
        if (pos[x] >= 0 || !(down_[x] - Bits::single(x)).subset_of(placedSet(pos))) continue;
        uint32_t code = 0;
        for (int j = 0; j < k; ++j)
          if (leq(placed[j], x)) code |= 1u << j;
        bool less = strictlyLess;
        if (haveBest && !strictlyLess) {
          if (code > best[k]) continue;
          if (code < best[k]) less = true;
        }
        pos[x] = k;
        placed.push_back(x);
        cur.push_back(code);
        go(less);
        cur.pop_back();
        placed.pop_back();
        pos[x] = -1;
      }
    };
    go(false);
    std::string s = std::to_string(n_) + ":";
    for (auto c : best) s += std::to_string(c) + ",";
    return s;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.ids_ == b.ids_ && a.up_ == b.up_; }

private:
  Lattice(std::vector<std::string> ids, std::vector<Bits> up) : ids_(std::move(ids)), up_(std::move(up)) {
    n_ = static_cast<int>(ids_.size());
    check_size(n_);
    index_ = make_index(ids_);
    down_.assign(n_, Bits{});
    for (int i = 0; i < n_; ++i) up_[i].each([&](int j) { down_[j].set(i); });

    meet_.assign(static_cast<std::size_t>(n_) * n_, 0);
    join_.assign(static_cast<std::size_t>(n_) * n_, 0);
    for (int a = 0; a < n_; ++a)
      for (int b = a; b < n_; ++b) {
        int m = greatest(down_[a] & down_[b], down_);
        if (m < 0) fail(ErrorKind::NotALattice, "pair (" + ids_[a] + "," + ids_[b] + "): meet undefined");
        int j = greatest(up_[a] & up_[b], up_);
        if (j < 0) fail(ErrorKind::NotALattice, "pair (" + ids_[a] + "," + ids_[b] + "): join undefined");
        meet_[a * n_ + b] = meet_[b * n_ + a] = static_cast<uint16_t>(m);
        join_[a * n_ + b] = join_[b * n_ + a] = static_cast<uint16_t>(j);
      }
    bottom_ = top_ = -1;
    Bits everything = Bits::prefix(n_);
    for (int i = 0; i < n_; ++i) {
      if (up_[i] == everything) bottom_ = i;
      if (down_[i] == everything) top_ = i;
    }
    if (bottom_ < 0) fail(ErrorKind::NoBound, "no least element");
    if (top_ < 0) fail(ErrorKind::NoBound, "no greatest element");

    ucov_.assign(n_, Bits{});
    lcov_.assign(n_, Bits{});
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (a != b && up_[a].test(b) && (up_[a] & down_[b]).count() == 2) {
          covers_.emplace_back(a, b);
          ucov_[a].set(b);
          lcov_[b].set(a);
        }

    linear_.resize(n_);
    std::iota(linear_.begin(), linear_.end(), 0);
    std::stable_sort(linear_.begin(), linear_.end(),
                     [&](int x, int y) { return down_[x].count() < down_[y].count(); });
    height_.assign(n_, 0);
    for (int x : linear_)
      lcov_[x].each([&](int p) { height_[x] = std::max(height_[x], height_[p] + 1); });
  }

  // Element g of s with family[g] == s (the unique "greatest" in the sense of
  // the given down/up family), or -1.
  int greatest(const Bits& s, const std::vector<Bits>& family) const {
    int best = -1, bestCount = -1;
    s.each([&](int x) {
      int c = family[x].count();
      if (c > bestCount) {
        bestCount = c;
        best = x;
      }
    });
    if (best < 0 || family[best] != s) return -1;
    return best;
  }

  Bits placedSet(const std::vector<int>& pos) const {
    Bits b;
    for (int x = 0; x < n_; ++x)
      if (pos[x] >= 0) b.set(x);
    return b;
  }

  std::array<int, 5> signature(int x) const {
    return {height_[x], up_[x].count(), down_[x].count(), ucov_[x].count(), lcov_[x].count()};
  }

  static void check_size(int n) {
    if (n == 0) fail(ErrorKind::NotALattice, "no elements");
    if (n > kMaxElems) fail(ErrorKind::SizeLimit, "lattice has " + std::to_string(n) + " elements, limit is " + std::to_string(kMaxElems));
  }

  static std::unordered_map<std::string, int> make_index(const std::vector<std::string>& ids) {
    std::unordered_map<std::string, int> m;
    for (int i = 0; i < static_cast<int>(ids.size()); ++i)
      if (!m.emplace(ids[i], i).second) fail(ErrorKind::SchemaError, "duplicate element id '" + ids[i] + "'");
    return m;
  }

  int n_ = 0;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bits> up_, down_, ucov_, lcov_;
  std::vector<uint16_t> meet_, join_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<int> linear_, height_;
  int bottom_ = -1, top_ = -1;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr share(Lattice l) { return std::make_shared<const Lattice>(std::move(l)); }

struct StructureProfile {
  bool modular = false;
  bool distributive = false;
  bool jid = false, mid = false;
  bool jidc = false, midc = false;
  bool graded = false;
  std::vector<int> rank;  // filled when graded
};

namespace detail {

// z v (meet G) == meet {z v x : x in G} for every nonempty G drawn from `pool`,
// enumerating all subsets of the pool (pool size <= 20).
inline bool distributes_over_all_subsets(const Lattice& L, const std::vector<int>& pool, bool joinOverMeet) {
  const int k = static_cast<int>(pool.size());
  const uint32_t full = (k == 32) ? ~0u : ((1u << k) - 1);
  std::vector<uint16_t> agg(std::size_t{1} << k), img(std::size_t{1} << k);
  auto outer = [&](int a, int b) { return joinOverMeet ? L.join(a, b) : L.meet(a, b); };
  auto inner = [&](int a, int b) { return joinOverMeet ? L.meet(a, b) : L.join(a, b); };
  for (int z = 0; z < L.size(); ++z) {
    for (uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
      int low = std::countr_zero(mask);
      uint32_t rest = mask & (mask - 1);
      int e = pool[low];
      agg[mask] = static_cast<uint16_t>(rest ? inner(agg[rest], e) : e);
      int ze = outer(z, e);
      img[mask] = static_cast<uint16_t>(rest ? inner(img[rest], ze) : ze);
      if (outer(z, agg[mask]) != img[mask]) return false;
      if (mask == full) break;
    }
  }
  return true;
}

inline bool distributes_over(const Lattice& L, const Bits& g, bool joinOverMeet) {
  auto outer = [&](int a, int b) { return joinOverMeet ? L.join(a, b) : L.meet(a, b); };
  auto inner = [&](int a, int b) { return joinOverMeet ? L.meet(a, b) : L.join(a, b); };
  for (int z = 0; z < L.size(); ++z) {
    int agg = -1, img = -1;
    g.each([&](int x) {
      agg = agg < 0 ? x : inner(agg, x);
      int zx = outer(z, x);
      img = img < 0 ? zx : inner(img, zx);
    });
    if (agg >= 0 && outer(z, agg) != img) return false;
  }
  return true;
}

}  // namespace detail

// The modular law a v (b ^ z) = b ^ (a v z) for all a <= b and all z.
inline bool modular_by_identity(const Lattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!L.leq(a, b)) continue;
      for (int z = 0; z < n; ++z)
        if (L.join(a, L.meet(b, z)) != L.meet(b, L.join(a, z))) return false;
    }
  return true;
}

// Searches for a pentagon sublattice a<b<c<d, a<e<d with b v e = d and
// c ^ e = a. Returns {a,b,c,d,e} or an empty vector.
inline std::vector<int> find_pentagon(const Lattice& L) {
  const int n = L.size();
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c) {
      if (!L.lt(b, c)) continue;
      for (int e = 0; e < n; ++e) {
        int a = L.meet(c, e), d = L.join(b, e);
        if (L.lt(a, b) && L.lt(c, d) && L.lt(a, e) && L.lt(e, d) && L.join(b, e) == d && L.meet(c, e) == a)
          return {a, b, c, d, e};
      }
    }
  return {};
}

inline StructureProfile structure_profile(const Lattice& L, uint64_t seed = 0x5eed) {
  StructureProfile p;
  const int n = L.size();
  p.modular = modular_by_identity(L);
  bool pentagon = !find_pentagon(L).empty();
  if (p.modular == pentagon)
    fail(ErrorKind::InternalInconsistency, "modular identity and pentagon search disagree");

  p.distributive = true;
  for (int x = 0; x < n && p.distributive; ++x)
    for (int y = 0; y < n && p.distributive; ++y)
      for (int z = 0; z < n; ++z)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
          p.distributive = false;
          break;
        }

  if (n <= 12) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    p.jid = detail::distributes_over_all_subsets(L, pool, true);
    p.mid = detail::distributes_over_all_subsets(L, pool, false);
  } else {
    p.jid = p.mid = true;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        Bits g = Bits::single(x) | Bits::single(y);
        p.jid = p.jid && detail::distributes_over(L, g, true);
        p.mid = p.mid && detail::distributes_over(L, g, false);
      }
    Rng rng(seed);
    for (int t = 0; t < 10000 && (p.jid || p.mid); ++t) {
      Bits g;
      for (int x = 0; x < n; ++x)
        if (rng.coin()) g.set(x);
      if (g.none()) continue;
      p.jid = p.jid && detail::distributes_over(L, g, true);
      p.mid = p.mid && detail::distributes_over(L, g, false);
    }
  }

  // Every chain is a subset of a maximal chain of [0,1].
  p.jidc = p.midc = true;
  for (const auto& c : L.maximal_chains(L.bottom(), L.top())) {
    p.jidc = p.jidc && detail::distributes_over_all_subsets(L, c, true);
    p.midc = p.midc && detail::distributes_over_all_subsets(L, c, false);
  }

  p.graded = true;
  for (auto [x, y] : L.covers())
    if (L.height(y) != L.height(x) + 1) p.graded = false;
  if (p.graded) {
    p.rank.resize(n);
    for (int x = 0; x < n; ++x) p.rank[x] = L.height(x);
  }
  return p;
}

}  // namespace latrad
