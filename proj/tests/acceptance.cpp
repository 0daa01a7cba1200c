// One line per acceptance criterion. Usage: acceptance <latrad-cli> <scratch-dir>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "latrad/theorems.hpp"
#include "oracle.hpp"

using namespace latrad;

namespace {

struct Result {
  bool ok = true;
  std::string note;
  void fail(const std::string& why) {
    if (ok) note = why;
    ok = false;
  }
};

std::vector<std::pair<std::string, LatticePtr>> four_element_hosts() {
  return {{"B2", share(diamond_lattice())}, {"chain4", share(chain_lattice(4))}};
}

std::vector<LatticePtr> hosts_up_to_four() {
  return {share(chain_lattice(1)), share(chain_lattice(2)), share(chain_lattice(3)), share(chain_lattice(4)), share(diamond_lattice())};
}

std::vector<LatCase>& corpus() {
  static std::vector<LatCase> c = default_corpus(CorpusOptions{});
  return c;
}

oracle::Rel mat(const Rel& r) {
  oracle::Rel m(r.size(), std::vector<bool>(r.size()));
  for (int a = 0; a < r.size(); ++a)
    for (int b = 0; b < r.size(); ++b) m[a][b] = r.has(a, b);
  return m;
}

Result radical_uniqueness() {
  Result res;
  int tOrders = 0;
  for (auto& [name, L] : four_element_hosts())
    for (const Rel& r : all_relations(L)) {
      auto p = classify(r);
      if (!p.t_order) continue;
      ++tOrders;
      for (int a = 0; a < L->size(); ++a)
        for (int b : L->up(a).list()) {
          Bits rs = enumerate_radicals(r, a, b).radicals;
          int want = L->join_set(L->interval(a, b) & r.succ(a));
          if (rs != Bits::single(want)) res.fail(name + " " + r.describe() + " on [" + L->id(a) + "," + L->id(b) + "]");
        }
    }
  res.note = res.ok ? std::to_string(tOrders) + " T-orders" : res.note;
  return res;
}

Result decomposition_biconditional() {
  Result res;
  int tt = 0, total = 0;
  for (auto& [name, L] : four_element_hosts())
    for (const Rel& r : all_relations(L)) {
      ++total;
      bool isTT = classify(r).tt_order;
      auto part = interval_partition(r);
      tt += isTT;
      if (isTT != part.has_value()) res.fail(name + " " + r.describe() + (isTT ? ": TT without blocks" : ": blocks without TT"));
      else if (isTT && decompose(r).blocks != *part) res.fail(name + " " + r.describe() + ": block lists differ");
    }
  if (res.ok) res.note = std::to_string(tt) + " of " + std::to_string(total) + " relations are TT";
  return res;
}

Result triangle_theory() {
  Result res;
  int n = 0;
  for (const LatCase& lc : corpus())
    for (const RelCase& rc : lc.rels) {
      ++n;
      const Rel& r = rc.rel;
      Rel lower = tri_lower(r), upper = tri_upper(r);
      std::string where = lc.name + " " + rc.name;
      if (!(tri_lower(lower) == lower) || !(tri_upper(upper) == upper)) res.fail(where + ": triangle not idempotent");
      if (mat(upper) != oracle::closure(mat(r)) || !(lower == upper)) res.fail(where + ": triangle differs from the transitive closure");
      auto [lo, up] = lo_up(r);
      if (rc.p.dual_h_relation) {
        if (!(lower == lo) || !classify(lower).dual_r_order) res.fail(where + ": lower triangle is not lo or not a dual R-order");
        for (auto [a, b] : lc.pairs)
          if (enumerate_radicals(lower, a, b).dual_radicals.count() != 1) res.fail(where + ": dual radical not unique");
      }
      if (rc.p.h_relation && !(upper == up)) res.fail(where + ": upper triangle is not up");
    }
  if (res.ok) res.note = std::to_string(n) + " corpus relations";
  return res;
}

Result bijections() {
  Result res;
  int sets = 0, maps = 0;
  for (const LatticePtr& L : hosts_up_to_four()) {
    const int n = L->size();
    for (uint32_t m = 0; m < (1u << n); ++m) {
      Bits s;
      for (int i = 0; i < n; ++i)
        if ((m >> i) & 1) s.set(i);
      auto f = envelope_check(L, s);
      if (f.enveloping && envelope_closure(f).fixpoints != s) res.fail("enveloping set not recovered");
      if (f.inscribing && inscribe_interior(f).fixpoints != s) res.fail("inscribing set not recovered");
      sets += f.enveloping + f.inscribing;
    }
    for (const auto& g : all_maps(L)) {
      if (g.profile.radical && !(envelope_closure(envelope_check(L, g.fixpoints)) == g)) res.fail("radical map not recovered");
      if (g.profile.dual_radical && !(inscribe_interior(envelope_check(L, g.fixpoints)) == g)) res.fail("dual radical map not recovered");
      if (g.profile.pre_radical && upper_map_table(rel_from_map(g)) != g.table) res.fail("pre-radical map not recovered");
      if (g.profile.dual_pre_radical && lower_map_table(rel_from_map(g)) != g.table) res.fail("dual pre-radical map not recovered");
      maps += g.profile.radical + g.profile.dual_radical + g.profile.pre_radical + g.profile.dual_pre_radical;
    }
  }
  if (res.ok) res.note = std::to_string(sets) + " sets, " + std::to_string(maps) + " map roundtrips";
  return res;
}

Result superposition() {
  Result res;
  int minimal = 0, modular = 0;
  for (const LatCase& lc : corpus()) {
    if (lc.exhaustive) {
      std::vector<const Rel*> tt;
      for (const RelCase& rc : lc.rels)
        if (rc.p.tt_order) tt.push_back(&rc.rel);
      for (const RelCase& rc : lc.rels) {
        Rel t = tilde(rc.rel).fixpoint();
        if (!classify(t).tt_order) res.fail(lc.name + " " + rc.name + ": tilde is not TT");
        for (const Rel* x : tt)
          if (rc.rel.subset_of(*x) && !t.subset_of(*x)) res.fail(lc.name + " " + rc.name + ": tilde not minimal");
        ++minimal;
      }
    }
    for (const RelCase& rc : lc.rels) {
      Rel b = bar(rc.rel).fixpoint(), t = tilde(rc.rel).fixpoint();
      if (!b.subset_of(t)) res.fail(lc.name + " " + rc.name + ": bar outside tilde");
      if (lc.sp.modular && rc.p.hh) {
        ++modular;
        if (!(b == t) || !classify(b).rr_order) res.fail(lc.name + " " + rc.name + ": bar differs from tilde or is not RR");
      }
    }
  }
  if (res.ok) res.note = std::to_string(minimal) + " minimality checks, " + std::to_string(modular) + " HH relations on modular hosts";
  return res;
}

Result gap_continuity() {
  Result res;
  int mod = 0, non = 0;
  for (const LatCase& lc : corpus()) {
    const auto& L = lc.L;
    Rel gap = builtin_rel(L, Builtin::Gap), le = builtin_rel(L, Builtin::Leq);
    bool hh = classify(gap).hh;
    bool hasPentagon = !find_pentagon(*L).empty();
    if (hasPentagon == lc.sp.modular) res.fail(lc.name + ": pentagon search disagrees with modularity");
    if (lc.sp.modular && !hh) res.fail(lc.name + ": gap relation not HH on a modular lattice");
    if (!lc.sp.modular && hh) res.fail(lc.name + ": gap relation HH on a non-modular lattice");
    (lc.sp.modular ? mod : non)++;
    if (!(builtin_rel(L, Builtin::Cont) == Rel::identity(L))) res.fail(lc.name + ": continuity relation is not equality");
    if (!(gap_dense(gap) == le)) res.fail(lc.name + ": gap-dense closure of gap is not <=");
  }
  if (res.ok) res.note = std::to_string(mod) + " modular, " + std::to_string(non) + " non-modular lattices";
  return res;
}

Result subspace_analogs() {
  Result res;
  int rels = 0;
  for (int q : {2, 3})
    for (int d = 1; d <= 3; ++d) {
      auto R = subspace_lattice(q, d);
      std::string name = std::to_string(q) + "^" + std::to_string(d);
      if (!structure_profile(*R.lattice).modular) res.fail(name + " not modular");
      std::vector<Bound> bounds;
      for (int n = 0; n <= d + 1; ++n) bounds.push_back(Bound::of(n));
      bounds.push_back(Bound::inf());
      for (Bound b : bounds) {
        if (!classify(rel_codim(R, b)).hh) res.fail(name + " codim<" + b.str() + " not HH");
        if (!classify(rel_codim_perp(R, b)).hh) res.fail(name + " perp>=" + b.str() + " not HH");
        rels += 2;
      }
    }
  auto R = subspace_lattice(2, 3);
  const Lattice& L = *R.lattice;
  const auto& rk = R.rank;
  long triples = 0;
  for (int a = 0; a < L.size(); ++a)
    for (int b : L.up(a).list())
      for (int k = 0; k < L.size(); ++k) {
        ++triples;
        if (rk[L.join(b, k)] - rk[L.join(a, k)] > rk[b] - rk[a]) res.fail("join rank inequality");
        if (rk[L.meet(b, k)] - rk[L.meet(a, k)] > rk[b] - rk[a]) res.fail("meet rank inequality");
      }
  if (res.ok) res.note = std::to_string(rels) + " relations HH, " + std::to_string(triples) + " rank triples";
  return res;
}

Result zoo() {
  Result res;
  struct Want {
    std::string target, lattice;
    std::vector<std::pair<std::string, std::string>> pairs;
  };
  const std::vector<Want> wants = {
      {"multi_radical & !up_expanded", "B2", {{"0", "a"}, {"0", "b"}}},
      {"t_order & !r_order", "B2", {{"0", "a"}}},
      {"contiguous & !triangle_contiguous", "B2", {{"0", "a"}, {"a", "1"}}},
      {"!dual_h_relation & !triangle_down_expanded", "B2", {{"a", "1"}, {"b", "1"}}},
      {"unique_radicals & !up_contiguous", "chain3", {{"0", "2"}}},
  };
  for (const auto& w : wants) {
    auto hits = mine(mining_lattices(), 5, w.target);
    if (hits.size() != 1 || hits[0].lattice != w.lattice) {
      res.fail(w.target + ": " + std::to_string(hits.size()) + " minimal hits");
      continue;
    }
    const Rel& h = hits[0].rel;
    Rel want = rel_from_pairs(h.host_ptr(), w.pairs);
    bool found = false;
    for (const auto& t : h.host().automorphisms()) {
      bool same = true;
      for (int a = 0; a < h.size(); ++a)
        for (int b = 0; b < h.size(); ++b) same = same && h.has(a, b) == want.has(t[a], t[b]);
      found = found || same;
    }
    if (!found) res.fail(w.target + ": found " + h.describe());
  }
  if (res.ok) res.note = std::to_string(wants.size()) + " examples rediscovered";
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Result determinism(const std::string& cli, const std::string& dir) {
  Result res;
  std::string a = dir + "/verify_a.json", b = dir + "/verify_b.json";
  for (const auto& out : {a, b}) {
    std::remove(out.c_str());
    std::string cmd = "\"" + cli + "\" verify --seed 7 -o \"" + out + "\" 2>/dev/null";
    int rc = std::system(cmd.c_str());
    if (rc != 0) res.fail("verify exited with status " + std::to_string(rc));
  }
  std::string x = slurp(a), y = slurp(b);
  if (x.empty()) res.fail("empty report");
  else if (x != y) res.fail("reports differ");
  if (res.ok) res.note = std::to_string(x.size()) + " identical bytes";
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <latrad-cli> <scratch-dir>\n";
    return 2;
  }
  std::string cli = argv[1], dir = argv[2];
  struct Criterion {
    int id;
    const char* name;
    double limit;  // seconds; 0 = no limit
    std::function<Result()> run;
  };
  // Corpus construction is shared; charge it to no single criterion.
  corpus();
  const std::vector<Criterion> cs = {
      {1, "radical uniqueness on T-orders", 1.0, radical_uniqueness},
      {2, "TT-order iff interval partition", 5.0, decomposition_biconditional},
      {3, "triangle theory", 10.0, triangle_theory},
      {4, "bijection roundtrips", 10.0, bijections},
      {5, "superposition fixpoints", 30.0, superposition},
      {6, "gap and continuity relations", 5.0, gap_continuity},
      {7, "subspace lattice analogs", 20.0, subspace_analogs},
      {8, "example zoo rediscovery", 60.0, zoo},
      {9, "verify report determinism", 0.0, [&] { return determinism(cli, dir); }},
  };
  int failures = 0;
  for (const auto& c : cs) {
    auto start = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const Error& e) {
      r.fail(e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) r.fail("took " + std::to_string(secs) + " s");
    failures += !r.ok;
    char timing[64];
    if (c.limit > 0) std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", secs, c.limit);
    else std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << ": " << (r.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << r.note << "; " << timing << ")\n";
  }
  return failures ? 1 : 0;
}
