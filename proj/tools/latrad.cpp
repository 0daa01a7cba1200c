#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "latrad/theorems.hpp"

using namespace latrad;

namespace {

struct Common {
  std::string lattice;
  std::string relation;
  bool json = false;
  bool dot = false;
  std::string out;
};

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) std::cout << text;
  else write_text_file(c.out, text);
}

LatticePtr load_host(const Common& c) {
  if (!c.lattice.empty()) return load_lattice(c.lattice).lattice;
  // a relation file may carry its own host
  if (!c.relation.empty() && c.relation.rfind("builtin:", 0) != 0) {
    Json j = read_json_file(c.relation);
    if (j.contains("host")) return lattice_from_json(j["host"]).lattice;
  }
  fail(ErrorKind::SchemaError, "--lattice is required");
}

Rel load_rel(const Common& c, const LatticePtr& L) {
  if (c.relation.empty()) fail(ErrorKind::SchemaError, "--relation is required");
  return load_relation(L, c.relation);
}

std::string text_profile(const PropertyProfile& p) {
  std::string s;
  for (auto [k, v] : p.fields()) s += std::string(k) + ": " + (v ? "yes" : "no") + "\n";
  return s;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void add_common(CLI::App* sub, Common& c, bool needRel) {
  sub->add_option("--lattice", c.lattice, "lattice JSON file");
  if (needRel) sub->add_option("--relation", c.relation, "relation JSON file or builtin:leq|eq|gap|cont");
  sub->add_flag("--json", c.json, "JSON output");
  sub->add_option("-o,--output", c.out, "write output to a file");
}

std::pair<int, int> parse_interval(const Lattice& L, const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) fail(ErrorKind::SchemaError, "--interval expects a,b");
  int a = L.index(s.substr(0, comma)), b = L.index(s.substr(comma + 1));
  if (!L.leq(a, b)) fail(ErrorKind::NotComparable, s + " is not an interval");
  return {a, b};
}

Rel construct(const std::string& name, const Rel& r, std::optional<Json>& trace) {
  if (name == "left-complement") return complements(r).first;
  if (name == "right-complement") return complements(r).second;
  if (name == "lo") return lo_up(r).first;
  if (name == "up") return lo_up(r).second;
  if (name == "upper-triangle") return tri_upper(r);
  if (name == "lower-triangle") return tri_lower(r);
  if (name == "gap-dense") return gap_dense(r);
  if (name == "tilde" || name == "bar") {
    Trace<Rel> t = name == "tilde" ? tilde(r) : bar(r);
    trace = rel_trace_to_json(t);
    return t.fixpoint();
  }
  static const std::map<std::string, std::string> closures = {
      {"uc", "up_contiguous"},          {"dc", "down_contiguous"},        {"ue", "up_expanded"},
      {"de", "down_expanded"},          {"order", "order"},               {"h-closure", "h_closure"},
      {"dual-h-closure", "dual_h_closure"}, {"h-interior", "h_interior"}, {"dual-h-interior", "dual_h_interior"}};
  auto it = closures.find(name);
  if (it == closures.end()) fail(ErrorKind::SchemaError, "unknown construction '" + name + "'");
  return refspace_closures(r).get(it->second);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Radicals, relations and closures on finite lattices"};
  app.require_subcommand(1);
  Common c;

  auto* gen = app.add_subcommand("generate", "write a named lattice as JSON");
  std::string kind;
  std::vector<int> params;
  std::string relOut;
  gen->add_option("kind", kind, "chain|boolean|diamond|m3|n5|partition|divisor|subspace|dm-random")->required();
  gen->add_option("params", params, "integer parameters");
  gen->add_option("-o,--output", c.out, "output file");
  gen->add_option("--relation-out", relOut, "also write the kind's relation (divisor) with its host");

  auto* cls = app.add_subcommand("classify", "classify a relation");
  add_common(cls, c, true);

  auto* con = app.add_subcommand("construct", "build a derived relation");
  std::string what;
  bool showTrace = false;
  con->add_option("name", what,
                  "left-complement|right-complement|lo|up|upper-triangle|lower-triangle|gap-dense|uc|dc|ue|de|order|"
                  "h-closure|dual-h-closure|h-interior|dual-h-interior|tilde|bar")
      ->required();
  add_common(con, c, true);
  con->add_flag("--dot", c.dot, "DOT output with the result overlaid");
  con->add_flag("--show-trace", showTrace, "print superposition steps");

  auto* rad = app.add_subcommand("radical", "radicals of an interval, or the radical maps");
  std::string interval;
  add_common(rad, c, true);
  rad->add_option("--interval", interval, "a,b");

  auto* dec = app.add_subcommand("decompose", "block decomposition of a TT-order");
  add_common(dec, c, true);

  auto* ver = app.add_subcommand("verify", "run the property suite on the corpus");
  CorpusOptions opt;
  std::vector<std::string> checks;
  bool timing = false, list = false;
  ver->add_option("--seed", opt.seed, "sampling seed");
  ver->add_option("--samples", opt.samples, "random relations per lattice");
  ver->add_option("--check", checks, "restrict to these checks");
  ver->add_flag("--small", opt.small, "reduced corpus");
  ver->add_flag("--timing", timing, "include timings (breaks byte-identical reports)");
  ver->add_flag("--list", list, "list checks and exit");
  ver->add_option("-o,--output", c.out, "report file");

  auto* min = app.add_subcommand("mine", "smallest relations with a property combination");
  std::string target;
  int budget = 5;
  min->add_option("--target", target, "terms joined by &, each optionally negated with !")->required();
  min->add_option("--budget", budget, "maximum strict pairs per lattice");
  min->add_flag("--json", c.json, "JSON output");

  auto* exp = app.add_subcommand("export", "Hasse diagram in DOT");
  std::vector<std::string> overlays;
  exp->add_option("--lattice", c.lattice, "lattice JSON file")->required();
  exp->add_option("--relation", overlays, "relations to overlay");
  exp->add_flag("--dot", c.dot, "DOT output (the default)");
  exp->add_option("-o,--output", c.out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*gen) {
      Named nm = make_named(kind, params);
      const std::vector<int>* rank = nm.ranked ? &nm.ranked->rank : nullptr;
      emit(c, dump(lattice_to_json(*nm.lattice, rank)));
      if (!relOut.empty()) {
        if (!nm.relation) fail(ErrorKind::PreconditionFailed, kind + " has no associated relation");
        Json j = rel_to_json(*nm.relation);
        j["host"] = lattice_to_json(nm.relation->host());
        write_text_file(relOut, dump(j));
      }
      return 0;
    }
    if (*cls) {
      auto L = load_host(c);
      Rel r = load_rel(c, L);
      PropertyProfile p = classify(r);
      emit(c, c.json ? dump(Json{{"relation", rel_to_json(r)["pairs"]}, {"profile", profile_to_json(p)}}) : text_profile(p));
      return 0;
    }
    if (*con) {
      auto L = load_host(c);
      Rel r = load_rel(c, L);
      std::optional<Json> trace;
      Rel out = construct(what, r, trace);
      if (c.dot) emit(c, export_dot(*L, {out}));
      else if (c.json) {
        Json j = rel_to_json(out);
        j["profile"] = profile_to_json(classify(out));
        if (showTrace && trace) j["trace"] = *trace;
        emit(c, dump(j));
      } else {
        std::string s = out.describe() + "\n";
        if (showTrace && trace)
          for (const auto& st : *trace) s += "  " + st["step"].get<std::string>() + " added " + st["added"].dump() + "\n";
        emit(c, s);
      }
      return 0;
    }
    if (*rad) {
      auto L = load_host(c);
      Rel r = load_rel(c, L);
      if (!interval.empty()) {
        auto [a, b] = parse_interval(*L, interval);
        RadicalSets s = enumerate_radicals(r, a, b);
        auto ids = [&](const Bits& x) {
          Json arr = Json::array();
          for (int e : x.list()) arr.push_back(L->id(e));
          return arr;
        };
        Json j{{"interval", {L->id(a), L->id(b)}}, {"radicals", ids(s.radicals)}, {"dual_radicals", ids(s.dual_radicals)}};
        emit(c, c.json ? dump(j) : "radicals " + j["radicals"].dump() + "\ndual radicals " + j["dual_radicals"].dump() + "\n");
        return 0;
      }
      RadicalMaps m = radical_maps(r, classify(r));
      Json j = Json::object();
      if (m.upper) j["upper"] = map_to_json(*m.upper);
      if (m.lower) j["lower"] = map_to_json(*m.lower);
      if (c.json) emit(c, dump(j));
      else emit(c, (m.upper ? "upper " + m.upper->describe() + "\n" : "") + (m.lower ? "lower " + m.lower->describe() + "\n" : ""));
      return 0;
    }
    if (*dec) {
      auto L = load_host(c);
      Rel r = load_rel(c, L);
      Decomposition d = decompose(r);
      if (c.json) emit(c, dump(decomposition_to_json(d, *L)));
      else {
        std::string s;
        for (auto [lo, hi] : d.blocks) s += "[" + L->id(lo) + "," + L->id(hi) + "]\n";
        emit(c, s);
      }
      return 0;
    }
    if (*ver) {
      if (list) {
        for (const auto& d : registry()) std::cout << d.id << "  " << d.summary << "\n";
        return 0;
      }
      auto corpus = default_corpus(opt);
      auto reps = verify_suite(corpus, checks);
      Json j = reports_to_json(reps, opt.seed, opt.samples, timing);
      emit(c, dump(j));
      const auto& sm = j["summary"];
      std::cerr << "pass " << sm["pass"] << ", fail " << sm["fail"] << ", vacuous " << sm["vacuous"] << "\n";
      return sm["fail"].get<int>() == 0 ? 0 : 1;
    }
    if (*min) {
      auto hits = mine(mining_lattices(), budget, target);
      if (c.json) {
        Json arr = Json::array();
        for (const auto& h : hits) arr.push_back(Json{{"lattice", h.lattice}, {"relation", rel_to_json(h.rel)["pairs"]}});
        std::cout << dump(Json{{"target", target}, {"budget", budget}, {"hits", arr}});
      } else {
        if (hits.empty()) std::cout << "no relation within the budget\n";
        for (const auto& h : hits) std::cout << h.lattice << " " << h.rel.describe() << "\n";
      }
      return 0;
    }
    if (*exp) {
      auto L = load_lattice(c.lattice).lattice;
      std::vector<Rel> rs;
      for (const auto& o : overlays) rs.push_back(load_relation(L, o));
      emit(c, export_dot(*L, rs));
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
