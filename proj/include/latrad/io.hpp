#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "closure.hpp"
#include "generators.hpp"

namespace latrad {

using Json = nlohmann::ordered_json;

// Lattice file:  {"elements": [ids], "covers": [[x, y], ...], "rank": {id: int}}
// Relation file: {"pairs": [[x, y], ...]}; reflexive pairs are implied.

inline Json lattice_to_json(const Lattice& L, const std::vector<int>* rank = nullptr) {
  Json j;
  j["elements"] = L.ids();
  Json covers = Json::array();
  for (auto [x, y] : L.covers()) covers.push_back({L.id(x), L.id(y)});
  j["covers"] = covers;
  if (rank) {
    Json r = Json::object();
    for (int x = 0; x < L.size(); ++x) r[L.id(x)] = (*rank)[x];
    j["rank"] = r;
  }
  return j;
}

namespace detail {

inline const Json& require(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(ErrorKind::SchemaError, path + " must be an object");
  auto it = j.find(key);
  if (it == j.end()) fail(ErrorKind::SchemaError, path + "." + key + " is missing");
  return *it;
}

inline std::pair<std::string, std::string> id_pair(const Json& e, const std::string& path) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
    fail(ErrorKind::SchemaError, path + " must be a pair of element ids");
  return {e[0].get<std::string>(), e[1].get<std::string>()};
}

}  // namespace detail

inline Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

struct LoadedLattice {
  LatticePtr lattice;
  std::optional<std::vector<int>> rank;
};

inline LoadedLattice lattice_from_json(const Json& j) {
  const Json& els = detail::require(j, "elements", "$");
  if (!els.is_array()) fail(ErrorKind::SchemaError, "$.elements must be an array");
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < els.size(); ++i) {
    if (!els[i].is_string()) fail(ErrorKind::SchemaError, "$.elements[" + std::to_string(i) + "] must be a string");
    ids.push_back(els[i].get<std::string>());
  }
  const Json& cov = detail::require(j, "covers", "$");
  if (!cov.is_array()) fail(ErrorKind::SchemaError, "$.covers must be an array");
  std::vector<std::pair<std::string, std::string>> covers;
  for (std::size_t i = 0; i < cov.size(); ++i) {
    std::string path = "$.covers[" + std::to_string(i) + "]";
    auto p = detail::id_pair(cov[i], path);
    for (const auto& id : {p.first, p.second})
      if (std::find(ids.begin(), ids.end(), id) == ids.end()) fail(ErrorKind::SchemaError, path + " names unknown element '" + id + "'");
    covers.push_back(p);
  }
  LoadedLattice out{share(Lattice::from_covers(ids, covers)), std::nullopt};
  if (j.contains("rank")) {
    const Json& r = j["rank"];
    if (!r.is_object()) fail(ErrorKind::SchemaError, "$.rank must be an object");
    std::vector<int> rank(ids.size(), -1);
    for (auto it = r.begin(); it != r.end(); ++it) {
      auto idx = out.lattice->find(it.key());
      if (!idx) fail(ErrorKind::SchemaError, "$.rank names unknown element '" + it.key() + "'");
      if (!it.value().is_number_integer() || it.value().get<int>() < 0)
        fail(ErrorKind::SchemaError, "$.rank." + it.key() + " must be a nonnegative integer");
      rank[*idx] = it.value().get<int>();
    }
    for (std::size_t i = 0; i < ids.size(); ++i)
      if (rank[i] < 0) fail(ErrorKind::SchemaError, "$.rank is missing element '" + ids[i] + "'");
    out.rank = rank;
  }
  return out;
}

inline LoadedLattice load_lattice(const std::string& path) { return lattice_from_json(read_json_file(path)); }

inline Json rel_to_json(const Rel& r) {
  Json pairs = Json::array();
  for (auto [a, b] : r.strict_pairs()) pairs.push_back({r.host().id(a), r.host().id(b)});
  return Json{{"pairs", pairs}};
}

inline Rel rel_from_json(const LatticePtr& host, const Json& j) {
  const Json& ps = detail::require(j, "pairs", "$");
  if (!ps.is_array()) fail(ErrorKind::SchemaError, "$.pairs must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    std::string path = "$.pairs[" + std::to_string(i) + "]";
    auto [x, y] = detail::id_pair(ps[i], path);
    auto ix = host->find(x), iy = host->find(y);
    if (!ix) fail(ErrorKind::SchemaError, path + " names unknown element '" + x + "'");
    if (!iy) fail(ErrorKind::SchemaError, path + " names unknown element '" + y + "'");
    pairs.emplace_back(*ix, *iy);
  }
  return rel_from_pairs(host, pairs);
}

// "builtin:leq" and friends, or a relation file.
inline Rel load_relation(const LatticePtr& host, const std::string& spec) {
  const std::string prefix = "builtin:";
  if (spec.rfind(prefix, 0) == 0) return builtin_rel(host, parse_builtin(spec.substr(prefix.size())));
  return rel_from_json(host, read_json_file(spec));
}

inline Json profile_to_json(const PropertyProfile& p) {
  Json j = Json::object();
  for (auto [k, v] : p.fields()) j[k] = v;
  return j;
}

inline Json map_profile_to_json(const MapProfile& p) {
  Json j = Json::object();
  for (auto [k, v] : p.fields()) j[k] = v;
  return j;
}

inline Json map_to_json(const LatticeMap& m) {
  Json t = Json::object();
  for (int x = 0; x < m.host->size(); ++x) t[m.host->id(x)] = m.host->id(m(x));
  return Json{{"table", t}, {"profile", map_profile_to_json(m.profile)}};
}

inline Json decomposition_to_json(const Decomposition& d, const Lattice& L) {
  Json blocks = Json::array();
  for (auto [lo, hi] : d.blocks) blocks.push_back({L.id(lo), L.id(hi)});
  return Json{{"blocks", blocks}};
}

// Steps after the first record the pairs each closure added.
inline Json rel_trace_to_json(const Trace<Rel>& t) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& [name, r] = t.steps[i];
    Json added = Json::array();
    for (auto [a, b] : r.strict_pairs())
      if (i == 0 || !t.steps[i - 1].second.has(a, b)) added.push_back({r.host().id(a), r.host().id(b)});
    steps.push_back(Json{{"step", name}, {"added", added}});
  }
  return steps;
}

inline Json map_trace_to_json(const Trace<LatticeMap>& t) {
  Json steps = Json::array();
  for (const auto& [name, m] : t.steps) steps.push_back(Json{{"step", name}, {"map", map_to_json(m)["table"]}});
  return Json{{"steps", steps}, {"identity_in_generators", t.identity_in_generators}};
}

// ---------------------------------------------------------------------------
// DOT export.

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

// Hasse diagram bottom to top; each overlay contributes its non-cover strict
// pairs as dashed edges in its own colour.
inline std::string export_dot(const Lattice& L, const std::vector<Rel>& overlays = {}) {
  static const char* kColours[] = {"red", "blue", "darkgreen", "orange", "purple"};
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int x = 0; x < L.size(); ++x) os << "  n" << x << " [label=" << dot_quote(L.id(x)) << "];\n";
  for (auto [x, y] : L.covers()) os << "  n" << x << " -> n" << y << ";\n";
  for (std::size_t k = 0; k < overlays.size(); ++k)
    for (auto [a, b] : overlays[k].strict_pairs())
      if (!L.is_gap(a, b))
        os << "  n" << a << " -> n" << b << " [style=dashed, color=" << kColours[k % 5] << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace latrad
