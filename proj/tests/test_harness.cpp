#include <gtest/gtest.h>

#include <regex>

#include "latrad/theorems.hpp"

using namespace latrad;

namespace {

LatticePtr B2() { return share(diamond_lattice()); }
Rel on(const LatticePtr& L, std::vector<std::pair<std::string, std::string>> ps) { return rel_from_pairs(L, ps); }

Error error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorKind::InternalInconsistency, "no error raised");
}

int count(const std::string& text, const std::string& re) {
  std::regex r(re);
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), r), std::sregex_iterator()));
}

// A one-lattice corpus holding just the named relations.
LatCase single_case(const std::string& name, const LatticePtr& L, std::vector<std::pair<std::string, Rel>> rels) {
  CorpusOptions opt;
  opt.samples = 0;
  opt.exhaustive_pairs = 0;
  LatCase c = make_lat_case(name, L, std::nullopt, opt, 0);
  c.rels.clear();
  for (auto& [n, r] : rels) c.rels.push_back(make_rel_case(n, r));
  return c;
}

bool same_up_to_automorphism(const Rel& x, const Rel& y) {
  for (const auto& t : x.host().automorphisms()) {
    bool eq = true;
    for (int a = 0; a < x.size() && eq; ++a)
      for (int b = 0; b < x.size() && eq; ++b) eq = x.has(a, b) == y.has(t[a], t[b]);
    if (eq) return true;
  }
  return false;
}

}  // namespace

TEST(Io, LatticeRoundtrip) {
  for (const Lattice& L : {diamond_lattice(), n5_lattice(), partition_lattice(4)}) {
    Json j = lattice_to_json(L);
    auto back = lattice_from_json(parse_json_text(j.dump(), "mem"));
    EXPECT_EQ(back.lattice->ids(), L.ids());
    EXPECT_TRUE(*back.lattice == L);
    EXPECT_FALSE(back.rank);
  }
}

TEST(Io, RankRoundtrip) {
  auto R = subspace_lattice(2, 2);
  auto back = lattice_from_json(lattice_to_json(*R.lattice, &R.rank));
  ASSERT_TRUE(back.rank);
  EXPECT_EQ(*back.rank, R.rank);
}

TEST(Io, RelationRoundtrip) {
  auto L = B2();
  Rel r = on(L, {{"0", "a"}, {"a", "1"}});
  EXPECT_TRUE(rel_from_json(L, rel_to_json(r)) == r);
  EXPECT_TRUE(load_relation(L, "builtin:gap") == builtin_rel(L, Builtin::Gap));
}

TEST(Io, SchemaErrorsNameThePath) {
  auto e = error_of([] { lattice_from_json(Json::parse(R"({"elements":["0","1"],"covers":[["0","1"],["0"]]})")); });
  EXPECT_EQ(e.kind(), ErrorKind::SchemaError);
  EXPECT_NE(std::string(e.what()).find("$.covers[1]"), std::string::npos) << e.what();
  auto m = error_of([] { lattice_from_json(Json::parse(R"({"elements":["0","1"]})")); });
  EXPECT_NE(std::string(m.what()).find("$.covers is missing"), std::string::npos) << m.what();
  auto L = B2();
  auto u = error_of([&] { rel_from_json(L, Json::parse(R"({"pairs":[["0","zz"]]})")); });
  EXPECT_EQ(u.kind(), ErrorKind::SchemaError);
  EXPECT_NE(std::string(u.what()).find("'zz'"), std::string::npos) << u.what();
}

TEST(Io, OtherErrors) {
  EXPECT_EQ(error_of([] { parse_json_text("{", "mem"); }).kind(), ErrorKind::ParseError);
  EXPECT_EQ(error_of([] { read_json_file("/nonexistent/x.json"); }).kind(), ErrorKind::ParseError);
  EXPECT_EQ(error_of([] { lattice_from_json(Json::parse(R"({"elements":["x","y","z"],"covers":[["x","y"],["x","z"]]})")); }).kind(),
            ErrorKind::NotALattice);
  auto L = B2();
  EXPECT_EQ(error_of([&] { rel_from_json(L, Json::parse(R"({"pairs":[["a","b"]]})")); }).kind(), ErrorKind::NotStronger);
  EXPECT_EQ(error_of([&] { load_relation(L, "builtin:nope"); }).kind(), ErrorKind::SchemaError);
}

TEST(Dot, Examples) {
  std::string two = export_dot(chain_lattice(2));
  EXPECT_EQ(count(two, R"(\[label=)"), 2);
  EXPECT_EQ(count(two, "->"), 1);
  auto L = B2();
  std::string gap = export_dot(*L, {builtin_rel(L, Builtin::Gap)});
  EXPECT_EQ(count(gap, R"(\[label=)"), 4);
  EXPECT_EQ(count(gap, "->"), 4);
  EXPECT_EQ(count(gap, "dashed"), 0);
  Rel b = bar(on(L, {{"0", "a"}, {"a", "1"}})).fixpoint();
  std::string withBar = export_dot(*L, {b});
  EXPECT_EQ(count(withBar, "dashed"), 1);
  EXPECT_EQ(count(withBar, "n0 -> n3 \\[style=dashed"), 1);
  EXPECT_EQ(export_dot(*L, {b}), withBar);
}

TEST(VerifySuite, GapOnModularHost) {
  auto L = B2();
  auto reps = verify_suite({single_case("B2", L, {{"gap", builtin_rel(L, Builtin::Gap)}})}, {"gap-relation-hh-on-modular"});
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0].verdict, Verdict::Pass);
}

TEST(VerifySuite, GapOnPentagonIsVacuous) {
  auto N = share(n5_lattice());
  auto reps = verify_suite({single_case("N5", N, {{"gap", builtin_rel(N, Builtin::Gap)}})}, {"gap-relation-hh-on-modular"});
  EXPECT_EQ(reps[0].verdict, Verdict::Vacuous);
  auto off = verify_suite({single_case("N5", N, {{"gap", builtin_rel(N, Builtin::Gap)}})}, {"gap-relation-not-hh-off-modular"});
  EXPECT_EQ(off[0].verdict, Verdict::Pass);
}

TEST(VerifySuite, DiamondDecomposition) {
  auto L = B2();
  Rel r = on(L, {{"0", "a"}});
  auto reps = verify_suite({single_case("B2", L, {{"t", r}})}, {"tt-decomposition"});
  EXPECT_EQ(reps[0].verdict, Verdict::Pass);
  EXPECT_EQ(decompose(r).blocks.size(), 3u);
}

TEST(VerifySuite, UnknownCheck) {
  auto L = B2();
  EXPECT_EQ(error_of([&] { verify_suite({single_case("B2", L, {})}, {"no-such-check"}); }).kind(), ErrorKind::UnknownCheck);
}

TEST(VerifySuite, RegistryIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_TRUE(static_cast<bool>(c.per_relation) != static_cast<bool>(c.per_lattice)) << c.id;
  }
  EXPECT_GE(ids.size(), 40u);
}

TEST(VerifySuite, SmallCorpusHasNoFailuresAndIsDeterministic) {
  CorpusOptions opt;
  opt.small = true;
  opt.samples = 20;
  auto corpus = default_corpus(opt);
  auto a = verify_suite(corpus, {});
  for (const auto& r : a) EXPECT_NE(r.verdict, Verdict::Fail) << r.check << " on " << r.instance << ": " << r.witness;
  auto b = verify_suite(default_corpus(opt), {});
  EXPECT_EQ(reports_to_json(a, opt.seed, opt.samples).dump(), reports_to_json(b, opt.seed, opt.samples).dump());
  Json j = reports_to_json(a, opt.seed, opt.samples);
  EXPECT_EQ(j["preamble"]["seed"], 7);
  EXPECT_FALSE(j["reports"][0].contains("seconds"));
}

TEST(VerifySuite, VacuousNeverHidesFailure) {
  CheckDef broken{"broken", "always fails on leq", [](const LatCase&, const RelCase& rc) {
                    return rc.name == "leq" ? failed("boom") : vacuous();
                  },
                  nullptr};
  auto L = B2();
  auto c = single_case("B2", L, {{"eq", Rel::identity(L)}, {"leq", builtin_rel(L, Builtin::Leq)}});
  auto rep = run_check(broken, c);
  EXPECT_EQ(rep.verdict, Verdict::Fail);
  EXPECT_EQ(rep.vacuous, 1);
  EXPECT_NE(rep.witness.find("boom"), std::string::npos);
}

TEST(Mine, TOrderNotROrder) {
  auto hits = mine(mining_lattices(), 5, "t_order & !r_order");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].lattice, "B2");
  EXPECT_TRUE(same_up_to_automorphism(hits[0].rel, on(hits[0].rel.host_ptr(), {{"0", "a"}})));
}

TEST(Mine, TwoRadicals) {
  auto hits = mine(mining_lattices(), 5, "multi_radical & !up_expanded");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].lattice, "B2");
  EXPECT_TRUE(same_up_to_automorphism(hits[0].rel, on(hits[0].rel.host_ptr(), {{"0", "a"}, {"0", "b"}})));
}

TEST(Mine, UniqueRadicalsWithoutContiguity) {
  auto hits = mine(mining_lattices(), 5, "unique_radicals & !up_contiguous");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].lattice, "chain3");
  EXPECT_TRUE(hits[0].rel == rel_from_pairs(hits[0].rel.host_ptr(), std::vector<std::pair<int, int>>{{0, 2}}));
}

TEST(Mine, ContiguousWithNonContiguousTriangle) {
  auto hits = mine(mining_lattices(), 5, "contiguous & !triangle_contiguous");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].lattice, "B2");
  EXPECT_TRUE(same_up_to_automorphism(hits[0].rel, on(hits[0].rel.host_ptr(), {{"0", "a"}, {"a", "1"}})));
}

TEST(Mine, TriangleNotDownExpanded) {
  auto hits = mine(mining_lattices(), 5, "!dual_h_relation & !triangle_down_expanded");
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].lattice, "B2");
  EXPECT_TRUE(hits[0].rel == on(hits[0].rel.host_ptr(), {{"a", "1"}, {"b", "1"}}));
}

TEST(Mine, Errors) {
  EXPECT_EQ(error_of([] { mine(mining_lattices(), 7, "t_order"); }).kind(), ErrorKind::BudgetExceeded);
  EXPECT_EQ(error_of([] { mine(mining_lattices(), 3, "purple"); }).kind(), ErrorKind::SchemaError);
  EXPECT_TRUE(mine(mining_lattices(), 5, "t_order & !t_order").empty());
}
