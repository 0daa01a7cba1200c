#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relation.hpp"
#include "util.hpp"

namespace latrad {

// ---------------------------------------------------------------------------
// Named lattices.

inline Lattice chain_lattice(int n) {
  if (n < 1) fail(ErrorKind::PreconditionFailed, "chain needs at least one element");
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return Lattice::from_order(std::move(ids), [](int i, int j) { return i <= j; });
}

inline std::string subset_id(uint32_t mask, int k) {
  std::vector<int> xs;
  for (int i = 0; i < k; ++i)
    if ((mask >> i) & 1) xs.push_back(i + 1);
  return "{" + join_str(xs, ",", [](int x) { return std::to_string(x); }) + "}";
}

// Subsets of {1..n}; element i is the subset with bitmask i.
inline Lattice boolean_lattice(int n) {
  if (n < 0 || n > 8) fail(ErrorKind::SizeLimit, "boolean lattice limited to 8 generators");
  std::vector<std::string> ids;
  for (uint32_t m = 0; m < (1u << n); ++m) ids.push_back(subset_id(m, n));
  return Lattice::from_order(std::move(ids), [](int i, int j) { return (i & ~j) == 0; });
}

// The four-element Boolean lattice with ids 0, a, b, 1.
inline Lattice diamond_lattice() {
  return Lattice::from_covers({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

inline Lattice m3_lattice() {
  return Lattice::from_covers({"0", "a", "b", "c", "1"},
                              {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

// a < b < c < d and a < e < d.
inline Lattice n5_lattice() {
  return Lattice::from_covers({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "e"}, {"e", "d"}});
}

inline Lattice divisor_lattice(int n) {
  if (n < 1) fail(ErrorKind::PreconditionFailed, "divisor lattice needs n >= 1");
  std::vector<int> ds;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) ds.push_back(d);
  if (ds.size() > static_cast<std::size_t>(kMaxElems)) fail(ErrorKind::SizeLimit, "too many divisors");
  std::vector<std::string> ids;
  for (int d : ds) ids.push_back(std::to_string(d));
  return Lattice::from_order(std::move(ids), [&](int i, int j) { return ds[j] % ds[i] == 0; });
}

// Divisibility on the chain 1 < 2 < ... < n: a relation inside the usual order.
inline Rel divisibility_on_chain(int n) {
  if (n < 1) fail(ErrorKind::PreconditionFailed, "divisibility needs n >= 1");
  std::vector<std::string> ids;
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  auto host = share(Lattice::from_order(std::move(ids), [](int i, int j) { return i <= j; }));
  std::vector<Bits> rows(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if ((j + 1) % (i + 1) == 0) rows[i].set(j);
  return Rel::from_rows(host, std::move(rows));
}

// Set partitions of {1..n} under refinement. Ids list blocks, e.g. "12|3".
inline Lattice partition_lattice(int n) {
  if (n < 1) fail(ErrorKind::PreconditionFailed, "partition lattice needs n >= 1");
  if (n > 4) fail(ErrorKind::SizeLimit, "partition lattice capped at n = 4");
  // Restricted growth strings.
  std::vector<std::vector<int>> parts;
  std::vector<int> a(n, 0);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      parts.push_back(a);
      return;
    }
    for (int v = 0; v <= mx + 1; ++v) {
      a[i] = v;
      self(self, i + 1, std::max(mx, v));
    }
  };
  a[0] = 0;
  rec(rec, 1, 0);
  std::vector<std::string> ids;
  for (const auto& p : parts) {
    int k = *std::max_element(p.begin(), p.end()) + 1;
    std::vector<std::string> blocks(k);
    for (int i = 0; i < n; ++i) blocks[p[i]] += std::to_string(i + 1);
    ids.push_back(join_str(blocks, "|", [](const std::string& s) { return s; }));
  }
  // p <= q iff same block in p implies same block in q.
  return Lattice::from_order(std::move(ids), [&](int i, int j) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (parts[i][x] == parts[i][y] && parts[j][x] != parts[j][y]) return false;
    return true;
  });
}

inline Lattice product_lattice(const Lattice& a, const Lattice& b) {
  const int na = a.size(), nb = b.size();
  if (static_cast<long>(na) * nb > kMaxElems) fail(ErrorKind::SizeLimit, "product exceeds the element cap");
  std::vector<std::string> ids;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) ids.push_back("(" + a.id(i) + "," + b.id(j) + ")");
  return Lattice::from_order(std::move(ids), [&](int x, int y) { return a.leq(x / nb, y / nb) && b.leq(x % nb, y % nb); });
}

// ---------------------------------------------------------------------------
// Ranked lattices and subspace lattices.

struct RankedLattice {
  LatticePtr lattice;
  std::vector<int> rank;
  int ambient = 0;  // dimension of the vector space, 0 when not a subspace lattice
  int q = 0;
};

// Rank by height, for graded lattices.
inline RankedLattice ranked(const LatticePtr& L) {
  StructureProfile p = structure_profile(*L);
  if (!p.graded) fail(ErrorKind::PreconditionFailed, "lattice is not graded");
  return {L, p.rank, 0, 0};
}

namespace detail {

struct Field {
  int q;
  int add(int x, int y) const { return q == 4 ? (x ^ y) : (x + y) % q; }
  int neg(int x) const { return q == 4 ? x : (q - x) % q; }
  int mul(int x, int y) const {
    if (q != 4) return x * y % q;
    // Carryless product reduced by x^2 + x + 1.
    int r = 0;
    for (int i = 0; i < 2; ++i)
      if ((y >> i) & 1) r ^= x << i;
    if (r & 4) r ^= 0b111;
    return r;
  }
  int inv(int x) const {
    for (int y = 1; y < q; ++y)
      if (mul(x, y) == 1) return y;
    fail(ErrorKind::InternalInconsistency, "zero has no inverse");
  }
};

inline long gaussian_count(int q, int d) {
  // sum_k [d choose k]_q
  long total = 0;
  for (int k = 0; k <= d; ++k) {
    long num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      long a = 1, b = 1;
      for (int t = 0; t < d - i; ++t) a *= q;
      for (int t = 0; t < i + 1; ++t) b *= q;
      num *= a - 1;
      den *= b - 1;
    }
    total += num / den;
  }
  return total;
}

inline std::vector<int> digits(int code, int q, int d) {
  std::vector<int> v(d);
  for (int i = d - 1; i >= 0; --i, code /= q) v[i] = code % q;
  return v;
}
inline int encode(const std::vector<int>& v, int q) {
  int c = 0;
  for (int x : v) c = c * q + x;
  return c;
}

// Reduced row echelon basis of the span of `vecs`.
inline std::vector<std::vector<int>> rref(std::vector<std::vector<int>> m, const Field& F, int d) {
  int row = 0;
  for (int col = 0; col < d && row < static_cast<int>(m.size()); ++col) {
    int piv = -1;
    for (int r = row; r < static_cast<int>(m.size()); ++r)
      if (m[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    int inv = F.inv(m[row][col]);
    for (auto& x : m[row]) x = F.mul(x, inv);
    for (int r = 0; r < static_cast<int>(m.size()); ++r)
      if (r != row && m[r][col]) {
        int f = F.neg(m[r][col]);
        for (int c = 0; c < d; ++c) m[r][c] = F.add(m[r][c], F.mul(f, m[row][c]));
      }
    ++row;
  }
  m.resize(row);
  return m;
}

}  // namespace detail

// All subspaces of GF(q)^d. Each subspace is held as the set of its vectors
// (base-q codes); ids show the reduced row echelon basis, "<>" for zero.
inline RankedLattice subspace_lattice(int q, int d) {
  if (q != 2 && q != 3 && q != 4 && q != 5) fail(ErrorKind::PreconditionFailed, "field size must be 2, 3, 4 or 5");
  if (d < 1 || d > 4) fail(ErrorKind::SizeLimit, "dimension must be between 1 and 4");
  long count = detail::gaussian_count(q, d);
  if (count > kMaxElems)
    fail(ErrorKind::SizeLimit, "GF(" + std::to_string(q) + ")^" + std::to_string(d) + " has " + std::to_string(count) + " subspaces");
  detail::Field F{q};
  int nv = 1;
  for (int i = 0; i < d; ++i) nv *= q;
  std::vector<std::vector<int>> vec(nv);
  for (int c = 0; c < nv; ++c) vec[c] = detail::digits(c, q, d);
  auto addv = [&](int x, int y) {
    std::vector<int> s(d);
    for (int i = 0; i < d; ++i) s[i] = F.add(vec[x][i], vec[y][i]);
    return detail::encode(s, q);
  };
  auto scale = [&](int c, int x) {
    std::vector<int> s(d);
    for (int i = 0; i < d; ++i) s[i] = F.mul(c, vec[x][i]);
    return detail::encode(s, q);
  };
  auto span_with = [&](const Bits& s, int v) {
    Bits out;
    s.each([&](int x) {
      for (int c = 0; c < q; ++c) out.set(addv(x, scale(c, v)));
    });
    return out;
  };

  std::vector<Bits> spaces{Bits::single(0)};
  std::set<Bits> seen{spaces[0]};
  for (std::size_t i = 0; i < spaces.size(); ++i)
    for (int v = 1; v < nv; ++v)
      if (!spaces[i].test(v)) {
        Bits t = span_with(spaces[i], v);
        if (seen.insert(t).second) spaces.push_back(t);
      }
  if (static_cast<long>(spaces.size()) != count) fail(ErrorKind::InternalInconsistency, "subspace count differs from the Gaussian sum");
  // Sort by dimension, then by vector set, for stable indices.
  std::sort(spaces.begin(), spaces.end(), [](const Bits& x, const Bits& y) {
    return x.count() != y.count() ? x.count() < y.count() : x < y;
  });

  std::vector<std::string> ids;
  std::vector<int> rank;
  for (const Bits& s : spaces) {
    std::vector<std::vector<int>> rows;
    s.each([&](int x) { rows.push_back(vec[x]); });
    auto basis = detail::rref(rows, F, d);
    ids.push_back("<" + join_str(basis, ",", [](const std::vector<int>& r) {
                    return join_str(r, "", [](int x) { return std::to_string(x); });
                  }) + ">");
    int dim = 0;
    for (int size = 1; size < s.count(); size *= q) ++dim;
    if (dim != static_cast<int>(basis.size())) fail(ErrorKind::InternalInconsistency, "dimension mismatch in subspace " + ids.back());
    rank.push_back(dim);
  }
  auto L = share(Lattice::from_order(ids, [&](int i, int j) { return spaces[i].subset_of(spaces[j]); }));
  const int n = L->size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int m = L->meet(i, j), jn = L->join(i, j);
      Bits sum = spaces[i];
      spaces[j].each([&](int v) {
        if (!sum.test(v)) sum = span_with(sum, v);
      });
      if (spaces[m] != (spaces[i] & spaces[j]) || spaces[jn] != sum || rank[i] + rank[j] != rank[m] + rank[jn])
        fail(ErrorKind::InternalInconsistency, "subspace lattice operations disagree with linear algebra");
    }
  return {L, rank, d, q};
}

// ---------------------------------------------------------------------------
// Posets.

struct Poset {
  std::vector<std::string> names;
  std::vector<Bits> up;  // up[i] = {j : i <= j}
  int size() const { return static_cast<int>(names.size()); }
  bool leq(int i, int j) const { return up[i].test(j); }
};

// From strict relations i < j; closes transitively.
inline Poset make_poset(std::vector<std::string> names, const std::vector<std::pair<int, int>>& lt) {
  const int n = static_cast<int>(names.size());
  std::vector<Bits> up(n);
  for (int i = 0; i < n; ++i) up[i].set(i);
  for (auto [i, j] : lt) up[i].set(j);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && up[i].test(j) && up[j].test(i)) fail(ErrorKind::PreconditionFailed, "poset relation has a cycle");
  return {std::move(names), std::move(up)};
}

inline Poset poset_of(const Lattice& L) {
  Poset p{L.ids(), {}};
  for (int i = 0; i < L.size(); ++i) p.up.push_back(L.up(i));
  return p;
}

inline std::string name_set(const Poset& P, uint32_t mask) {
  std::vector<std::string> xs;
  for (int i = 0; i < P.size(); ++i)
    if ((mask >> i) & 1) xs.push_back(P.names[i]);
  return "{" + join_str(xs, ",", [](const std::string& s) { return s; }) + "}";
}

// Down-closed subsets of P under inclusion.
inline Lattice downset_lattice(const Poset& P) {
  const int n = P.size();
  if (n > 6) fail(ErrorKind::SizeLimit, "downset lattice limited to 6 poset elements");
  std::vector<uint32_t> downs;
  for (uint32_t m = 0; m < (1u << n); ++m) {
    bool closed = true;
    for (int i = 0; i < n && closed; ++i)
      if ((m >> i) & 1)
        for (int j = 0; j < n; ++j)
          if (P.leq(j, i) && !((m >> j) & 1)) closed = false;
    if (closed) downs.push_back(m);
  }
  std::vector<std::string> ids;
  for (uint32_t m : downs) ids.push_back(name_set(P, m));
  return Lattice::from_order(std::move(ids), [&](int i, int j) { return (downs[i] & ~downs[j]) == 0; });
}

// Dedekind-MacNeille completion: the sets A = lower(upper(A)) under inclusion.
// A cut that is the principal downset of p takes the name of p.
inline Lattice dm_completion(const Poset& P) {
  const int n = P.size();
  if (n > 8) fail(ErrorKind::SizeLimit, "completion limited to 8 poset elements");
  auto uppers = [&](uint32_t a) {
    uint32_t u = 0;
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if ((a >> i) & 1) ok = P.leq(i, j);
      if (ok) u |= 1u << j;
    }
    return u;
  };
  auto lowers = [&](uint32_t a) {
    uint32_t l = 0;
    for (int j = 0; j < n; ++j) {
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        if ((a >> i) & 1) ok = P.leq(j, i);
      if (ok) l |= 1u << j;
    }
    return l;
  };
  std::set<uint32_t> cuts;
  for (uint32_t a = 0; a < (1u << n); ++a) cuts.insert(lowers(uppers(a)));
  std::vector<uint32_t> cs(cuts.begin(), cuts.end());
  std::vector<std::string> ids;
  for (uint32_t c : cs) {
    std::string id = name_set(P, c);
    for (int p = 0; p < n; ++p)
      if (lowers(1u << p) == c) id = P.names[p];
    ids.push_back(id);
  }
  return Lattice::from_order(std::move(ids), [&](int i, int j) { return (cs[i] & ~cs[j]) == 0; });
}

inline Poset random_poset(int n, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> lt;
  for (int i = 0; i < n; ++i) names.push_back("p" + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(1, 3)) lt.emplace_back(i, j);
  return make_poset(std::move(names), lt);
}

// The 16 posets on four points up to isomorphism, in a fixed order.
inline std::vector<Poset> four_element_posets() {
  constexpr int n = 4;
  std::vector<std::pair<int, int>> offdiag;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{0, 1, 2, 3};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  std::set<uint32_t> canon;
  std::vector<Poset> out;
  for (uint32_t m = 0; m < (1u << offdiag.size()); ++m) {
    bool rel[n][n] = {};
    for (int i = 0; i < n; ++i) rel[i][i] = true;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if ((m >> k) & 1) rel[offdiag[k].first][offdiag[k].second] = true;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && rel[i][j] && rel[j][i]) ok = false;
        for (int k = 0; k < n && ok; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) ok = false;
      }
    if (!ok) continue;
    uint32_t best = ~0u;
    for (const auto& pm : perms) {
      uint32_t code = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (rel[i][j]) code |= 1u << (pm[i] * n + pm[j]);
      best = std::min(best, code);
    }
    if (!canon.insert(best).second) continue;
    std::vector<std::pair<int, int>> lt;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rel[i][j]) lt.emplace_back(i, j);
    out.push_back(make_poset({"w", "x", "y", "z"}, lt));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Codimension relations.

struct Bound {
  bool infinite = false;
  int n = 0;
  static Bound inf() { return {true, 0}; }
  static Bound of(int n) { return {false, n}; }
  std::string str() const { return infinite ? "inf" : std::to_string(n); }
};

// L << M iff L <= M and rank(M) - rank(L) < n.
inline Rel rel_codim(const RankedLattice& R, Bound n) {
  const Lattice& L = *R.lattice;
  std::vector<Bits> rows(L.size());
  for (int a = 0; a < L.size(); ++a)
    L.up(a).each([&](int b) {
      if (n.infinite || R.rank[b] - R.rank[a] < n.n) rows[a].set(b);
    });
  Rel r = Rel::from_rows(R.lattice, std::move(rows));
  if (R.ambient > 0) {
    PropertyProfile p = classify(r);
    if (!p.hh || (n.infinite && !p.transitive))
      fail(ErrorKind::InternalInconsistency, "codimension relation " + n.str() + " is not HH on a subspace lattice");
  }
  return r;
}

// L << M iff L <= M and d - (rank(M) - rank(L)) >= n.
inline Rel rel_codim_perp(const RankedLattice& R, Bound n) {
  if (R.ambient <= 0) fail(ErrorKind::PreconditionFailed, "complement codimension needs a subspace lattice");
  const Lattice& L = *R.lattice;
  std::vector<Bits> rows(L.size());
  for (int a = 0; a < L.size(); ++a)
    L.up(a).each([&](int b) {
      if (!n.infinite && R.ambient - (R.rank[b] - R.rank[a]) >= n.n) rows[a].set(b);
    });
  Rel r = Rel::from_rows(R.lattice, std::move(rows));
  if (!classify(r).hh) fail(ErrorKind::InternalInconsistency, "complement codimension relation " + n.str() + " is not HH");
  return r;
}

// ---------------------------------------------------------------------------
// Factory by name.

struct Named {
  LatticePtr lattice;
  std::optional<Rel> relation;  // divisibility on the chain 1..n for "divisor"
  std::optional<RankedLattice> ranked;
};

// kind: chain N | boolean N | diamond | divisor N | partition N | m3 | n5 |
// subspace Q D | dm-random N SEED
inline Named make_named(const std::string& kind, const std::vector<int>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      fail(ErrorKind::PreconditionFailed, kind + " takes " + std::to_string(k) + " integer parameter(s)");
  };
  if (kind == "chain") return need(1), Named{share(chain_lattice(params[0])), {}, {}};
  if (kind == "boolean") return need(1), Named{share(boolean_lattice(params[0])), {}, {}};
  if (kind == "diamond") return need(0), Named{share(diamond_lattice()), {}, {}};
  if (kind == "m3") return need(0), Named{share(m3_lattice()), {}, {}};
  if (kind == "n5") return need(0), Named{share(n5_lattice()), {}, {}};
  if (kind == "partition") return need(1), Named{share(partition_lattice(params[0])), {}, {}};
  if (kind == "divisor") {
    need(1);
    return Named{share(divisor_lattice(params[0])), divisibility_on_chain(params[0]), {}};
  }
  if (kind == "subspace") {
    need(2);
    RankedLattice R = subspace_lattice(params[0], params[1]);
    return Named{R.lattice, {}, R};
  }
  if (kind == "dm-random") {
    need(2);
    return Named{share(dm_completion(random_poset(params[0], static_cast<uint64_t>(params[1])))), {}, {}};
  }
  fail(ErrorKind::PreconditionFailed, "unknown lattice kind '" + kind + "'");
}

}  // namespace latrad
