// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "frobmat/gain_graph.hpp"
#include "frobmat/group.hpp"
#include "frobmat/lift.hpp"

namespace frobmat {

using json = nlohmann::json;

inline std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw Error("cannot open " + p.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json read_json(const std::filesystem::path& p) {
  try {
    return json::parse(read_text(p));
  } catch (const json::parse_error& e) {
    throw Error(p.string() + ": " + e.what());
  }
}

namespace detail {

inline int get_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(std::string("group JSON needs integer field \"") + key + "\"");
  }
  return j[key].get<int>();
}

}  // namespace detail

// Group JSON: {"kind": ..., kind fields}; a string is a path to such a
// file, resolved against `base`.
inline GroupPtr parse_group(const json& j, const std::filesystem::path& base = ".") {
  if (j.is_string()) {
    std::filesystem::path p = base / j.get<std::string>();
    return parse_group(read_json(p), p.parent_path());
  }
  if (!j.is_object() || !j.contains("kind")) throw Error("group JSON needs \"kind\"");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "cyclic") return make_cyclic(detail::get_int(j, "n"));
  if (kind == "dihedral") return make_dihedral(detail::get_int(j, "order"));
  if (kind == "field_affine") return make_field_affine(detail::get_int(j, "q"));
  if (kind == "inversion") {
    if (!j.contains("base")) throw Error("inversion group needs \"base\"");
    return make_inversion_extension(*parse_group(j["base"], base));
  }
  if (kind == "direct") {
    if (!j.contains("factors") || !j["factors"].is_array() || j["factors"].empty()) {
      throw Error("direct product needs a nonempty \"factors\" array");
    }
    GroupPtr g = parse_group(j["factors"][0], base);
    for (size_t i = 1; i < j["factors"].size(); ++i) {
      g = make_direct_product(*g, *parse_group(j["factors"][i], base));
    }
    return g;
  }
  if (kind == "semidirect") {
    if (!j.contains("normal") || !j.contains("acting") || !j.contains("action")) {
      throw Error("semidirect product needs \"normal\", \"acting\" and \"action\"");
    }
    return make_semidirect(*parse_group(j["normal"], base),
                           *parse_group(j["acting"], base),
                           j["action"].get<std::vector<std::vector<Element>>>());
  }
  if (kind == "table") {
    if (!j.contains("table")) throw Error("table group needs \"table\"");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    GroupPtr g = FiniteGroup::from_table(
        j["table"].get<std::vector<std::vector<int>>>(), labels);
    if (j.contains("field_modulus")) {
      g = FiniteGroup::make_trusted(g->order(), g->flat_table(), g->labels(),
                                    j["field_modulus"].get<int>());
    }
    return g;
  }
  throw Error("unknown group kind \"" + kind + "\"");
}

inline json group_to_json(const FiniteGroup& g) {
  json j = {{"kind", "table"}, {"table", g.table()}, {"labels", g.labels()}};
  if (g.field_modulus()) j["field_modulus"] = g.field_modulus();
  return j;
}

inline Element parse_element(const FiniteGroup& g, const json& v) {
  if (v.is_number_integer()) {
    int x = v.get<int>();
    if (x < 0 || x >= g.order()) throw Error("element " + std::to_string(x) + " out of range");
    return x;
  }
  if (v.is_string()) {
    if (auto x = g.find_label(v.get<std::string>())) return *x;
    throw Error("unknown element label \"" + v.get<std::string>() + "\"");
  }
  throw Error("element must be an index or a label");
}

// {"group", "vertices", "edges": [[tail, head, gain], ...], "ids"?} or
// {"complete": {"group", "n"}}.
inline GainGraph parse_graph(const json& j, const std::filesystem::path& base = ".") {
  if (j.contains("complete")) {
    const json& c = j["complete"];
    return complete_gain_graph(parse_group(c.at("group"), base), detail::get_int(c, "n"));
  }
  if (!j.contains("group") || !j.contains("vertices")) {
    throw Error("graph needs \"group\" and \"vertices\"");
  }
  GroupPtr grp = parse_group(j["group"], base);
  GainGraph g(grp, j["vertices"].get<int>());
  const json edges = j.value("edges", json::array());
  std::vector<int> ids;
  if (j.contains("ids")) {
    ids = j["ids"].get<std::vector<int>>();
    if (ids.size() != edges.size()) throw Error("\"ids\" and \"edges\" differ in length");
  }
  for (size_t i = 0; i < edges.size(); ++i) {
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 3) throw Error("edge must be [tail, head, gain]");
    Vertex t = e[0].get<int>(), h = e[1].get<int>();
    Element x = parse_element(*grp, e[2]);
    if (ids.empty()) {
      g.add_edge(t, h, x);
    } else {
      g.add_edge_with_id({ids[i], t, h, x});
    }
  }
  return g;
}

inline GainGraph read_graph(const std::filesystem::path& p) {
  return parse_graph(read_json(p), p.parent_path());
}

inline json graph_to_json(const GainGraph& g) {
  json edges = json::array(), ids = json::array();
  bool consecutive = true;
  int k = 0;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.tail, e.head, e.gain});
    ids.push_back(e.id);
    if (e.id != k++) consecutive = false;
  }
  json j = {{"group", group_to_json(g.group())},
            {"vertices", g.vertex_count()},
            {"edges", edges}};
  if (!consecutive) j["ids"] = ids;
  return j;
}

// Circuit list: one set per line, comma-separated ids, lines sorted.
inline std::string format_circuits(std::vector<EdgeSet> sets) {
  std::sort(sets.begin(), sets.end());
  std::string s;
  for (const auto& c : sets) s += join_ids(c, ",") + "\n";
  return s;
}

inline std::vector<int> parse_id_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t\r"));
    tok.erase(tok.find_last_not_of(" \t\r") + 1);
    if (tok.empty()) continue;
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error("bad id \"" + tok + "\"");
    }
  }
  return out;
}

inline std::vector<EdgeSet> parse_circuits(const std::string& text) {
  std::vector<EdgeSet> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(make_edge_set(parse_id_list(line)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string format_subgroup(const FiniteGroup& g, const Subgroup& s) {
  std::string out = std::to_string(s.size()) + ": " + join_ids(s.elements, ",") + " (";
  for (size_t i = 0; i < s.elements.size(); ++i) {
    if (i) out += " ";
    out += g.label(s.elements[i]);
  }
  return out + ")";
}

inline std::string format_partition(const FiniteGroup& g, const FrobeniusPartition& p) {
  std::string s = "kernel " + format_subgroup(g, p.kernel) + "\n";
  if (p.complements.empty()) s += "complements none\n";
  for (const auto& c : p.complements) s += "complement " + format_subgroup(g, c) + "\n";
  return s;
}

// Elements by index or label, comma-separated.
inline std::vector<Element> parse_elements(const FiniteGroup& g, const std::string& text) {
  std::vector<Element> out;
  auto emit = [&](std::string tok) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) return;
    if (tok.find_first_not_of("0123456789") == std::string::npos) {
      out.push_back(parse_element(g, std::stoi(tok)));
    } else {
      out.push_back(parse_element(g, json(tok)));
    }
  };
  // Commas inside parentheses belong to labels such as "(1,3)".
  std::string tok;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      emit(tok);
      tok.clear();
    } else {
      tok += ch;
    }
  }
  emit(tok);
  return out;
}

// "auto" (the unique nontrivial partition), "trivial" (frame case), "all"
// (lift case), or a kernel element list with optional "kernel=" prefix.
inline ContextPtr select_context(const GroupPtr& g, const std::string& sel) {
  if (sel == "auto") {
    std::vector<FrobeniusPartition> found;
    for (auto& p : frobenius_partitions(*g)) {
      if (!p.is_trivial(*g)) found.push_back(p);
    }
    if (found.empty()) throw Error("no nontrivial Frobenius partition for --kernel auto");
    if (found.size() > 1) throw Error("--kernel auto is ambiguous");
    return make_context(g, found[0]);
  }
  if (sel == "trivial") return frame_context(g);
  if (sel == "all") return lift_context(g);
  std::string list = sel.rfind("kernel=", 0) == 0 ? sel.substr(7) : sel;
  auto sub = as_subgroup(*g, parse_elements(*g, list));
  if (!sub) throw Error("kernel \"" + list + "\" is not a subgroup");
  return context_with_kernel(g, *sub);
}

}  // namespace frobmat
