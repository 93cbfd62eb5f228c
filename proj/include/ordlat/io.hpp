#pragma once

// Poset/lattice JSON, sequence JSON and DOT.
//
// Poset JSON:
//   {"elements": ["bot", "a", ...] | [{"id": 0, "name": "bot"}, ...],
//    "covers": [["bot", "a"], ...] | "leq": [[0, 1], ...],
//    "subset": ["a", ...], "sequences": [{"prefix": [...], "cycle": [...]}]}
// Element references are names or integer ids. Unknown fields are ignored.

#include "ordlat/convergence.hpp"
#include "ordlat/errors.hpp"
#include "ordlat/lattice.hpp"
#include "ordlat/poset.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace ordlat::io {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kPosetFormat = "ordlat-poset/1";

struct PosetDocument {
  std::string source;
  FinitePoset poset;
  std::optional<ElementSet> subset;
  std::vector<UPSeq> sequences;
  json raw;
};

namespace detail {

inline InputError field_error(const std::string& source, const std::string& field, const std::string& what) {
  return InputError(source + ": " + field + ": " + what);
}

inline ElementId resolve(const FinitePoset& p, const json& ref, const std::string& source, const std::string& field) {
  if (ref.is_string()) {
    if (auto id = p.find(ref.get<std::string>())) return *id;
    throw field_error(source, field, "unknown element '" + ref.get<std::string>() + "'");
  }
  if (ref.is_number_unsigned() || (ref.is_number_integer() && ref.get<long long>() >= 0)) {
    const auto id = ref.get<unsigned long long>();
    if (id < p.size()) return static_cast<ElementId>(id);
    throw field_error(source, field, "element id " + std::to_string(id) + " out of range");
  }
  throw field_error(source, field, "expected an element name or id, got " + std::string(ref.type_name()));
}

inline std::vector<std::string> read_names(const json& elements, const std::string& source) {
  if (!elements.is_array()) throw field_error(source, "elements", "expected an array");
  std::vector<std::string> names(elements.size());
  std::vector<bool> seen(elements.size(), false);
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& e = elements[i];
    const auto field = "elements[" + std::to_string(i) + "]";
    if (e.is_string()) {
      names[i] = e.get<std::string>();
      if (seen[i]) throw field_error(source, field, "id " + std::to_string(i) + " given twice");
      seen[i] = true;
      continue;
    }
    if (!e.is_object() || !e.contains("name") || !e["name"].is_string()) {
      throw field_error(source, field, "expected a string or an object with a string \"name\"");
    }
    std::size_t id = i;
    if (e.contains("id")) {
      if (!e["id"].is_number_integer() || e["id"].get<long long>() < 0) {
        throw field_error(source, field + ".id", "expected a non-negative integer");
      }
      id = e["id"].get<std::size_t>();
      if (id >= elements.size()) {
        throw field_error(source, field + ".id", "id " + std::to_string(id) + " out of range 0.." +
                                                    std::to_string(elements.size() - 1));
      }
    }
    if (seen[id]) throw field_error(source, field + ".id", "id " + std::to_string(id) + " given twice");
    seen[id] = true;
    names[id] = e["name"].get<std::string>();
  }
  return names;
}

inline std::vector<OrderPair> read_pairs(const json& doc, const char* key, const std::vector<std::string>& names,
                                         const std::string& source) {
  std::vector<OrderPair> out;
  if (!doc.contains(key)) return out;
  const auto& arr = doc[key];
  if (!arr.is_array()) throw field_error(source, key, "expected an array of pairs");
  // Resolve against a provisional antichain so names and ids share one path.
  const auto scratch = FinitePoset::from_leq(names, {});
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto field = std::string(key) + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) throw field_error(source, field, "expected a pair [lower, upper]");
    out.emplace_back(resolve(scratch, arr[i][0], source, field + "[0]"), resolve(scratch, arr[i][1], source, field + "[1]"));
  }
  return out;
}

}  // namespace detail

inline ElementSet parse_subset(const FinitePoset& p, const json& arr, const std::string& source,
                               const std::string& field = "subset") {
  if (!arr.is_array()) throw detail::field_error(source, field, "expected an array of elements");
  ElementSet s(p.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    s.insert(detail::resolve(p, arr[i], source, field + "[" + std::to_string(i) + "]"));
  }
  return s;
}

/// Command-line element references: a name if one matches, else a numeric id.
inline ElementSet parse_element_refs(const FinitePoset& p, const std::vector<std::string>& refs, const std::string& source) {
  json arr = json::array();
  for (const auto& r : refs) {
    const bool numeric = !r.empty() && std::all_of(r.begin(), r.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (numeric && !p.find(r)) arr.push_back(std::stoull(r));
    else arr.push_back(r);
  }
  return parse_subset(p, arr, source, source);
}

inline std::vector<ElementId> parse_element_list(const FinitePoset& p, const std::vector<std::string>& refs,
                                                 const std::string& source) {
  std::vector<ElementId> out;
  for (const auto& r : refs) out.push_back(parse_element_refs(p, {r}, source).members().front());
  return out;
}

/// {"prefix": [...], "cycle": [...]}; the cycle must be nonempty.
inline UPSeq parse_sequence(const FinitePoset& p, const json& j, const std::string& source,
                            const std::string& field = "sequence") {
  if (!j.is_object()) throw detail::field_error(source, field, "expected an object with prefix and cycle");
  UPSeq s;
  for (const char* key : {"prefix", "cycle"}) {
    if (!j.contains(key)) {
      if (std::string(key) == "prefix") continue;
      throw detail::field_error(source, field + ".cycle", "missing");
    }
    const auto& arr = j[key];
    if (!arr.is_array()) throw detail::field_error(source, field + "." + key, "expected an array");
    auto& dst = std::string(key) == "prefix" ? s.prefix : s.cycle;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      dst.push_back(detail::resolve(p, arr[i], source, field + "." + key + "[" + std::to_string(i) + "]"));
    }
  }
  if (s.cycle.empty()) throw detail::field_error(source, field + ".cycle", "must be nonempty");
  return s;
}

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline PosetDocument parse_poset_document(const json& doc, const std::string& source) {
  if (!doc.is_object()) throw InputError(source + ": expected a JSON object at top level");
  if (!doc.contains("elements")) throw detail::field_error(source, "elements", "missing");
  auto names = detail::read_names(doc["elements"], source);
  auto pairs = detail::read_pairs(doc, "covers", names, source);
  auto leq = detail::read_pairs(doc, "leq", names, source);
  pairs.insert(pairs.end(), leq.begin(), leq.end());
  PosetDocument out;
  out.source = source;
  try {
    out.poset = FinitePoset::from_leq(std::move(names), pairs);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
  if (doc.contains("subset")) out.subset = parse_subset(out.poset, doc["subset"], source);
  if (doc.contains("sequences")) {
    const auto& seqs = doc["sequences"];
    if (!seqs.is_array()) throw detail::field_error(source, "sequences", "expected an array");
    for (std::size_t i = 0; i < seqs.size(); ++i) {
      out.sequences.push_back(parse_sequence(out.poset, seqs[i], source, "sequences[" + std::to_string(i) + "]"));
    }
  }
  out.raw = doc;
  return out;
}

inline PosetDocument load_poset_document(const std::string& path) {
  return parse_poset_document(parse_json_text(read_file(path), path), path);
}

inline FinitePoset load_poset(const std::string& path) { return load_poset_document(path).poset; }

inline FiniteLattice as_lattice(const FinitePoset& p, const std::string& source) {
  try {
    return FiniteLattice(p);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

inline FiniteLattice load_lattice(const std::string& path) { return as_lattice(load_poset(path), path); }

/// Elements in (rank, name) order with their ids, then covers in that order.
inline ordered_json poset_to_json(const FinitePoset& p) {
  const auto order = p.serialization_order();
  std::vector<std::size_t> position(p.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;
  ordered_json doc;
  doc["format"] = kPosetFormat;
  doc["elements"] = ordered_json::array();
  for (auto id : order) doc["elements"].push_back(ordered_json{{"id", id}, {"name", p.name(id)}});
  auto covers = p.covers();
  std::sort(covers.begin(), covers.end(), [&](const OrderPair& x, const OrderPair& y) {
    return std::pair(position[x.first], position[x.second]) < std::pair(position[y.first], position[y.second]);
  });
  doc["covers"] = ordered_json::array();
  for (auto [a, b] : covers) doc["covers"].push_back(ordered_json::array({p.name(a), p.name(b)}));
  return doc;
}

inline std::string emit_poset_json(const FinitePoset& p) { return poset_to_json(p).dump(2) + "\n"; }

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace detail

/// Hasse diagram, bottom at the bottom. Nodes named n<id>; `highlight`
/// members are filled.
inline std::string emit_dot(const FinitePoset& p, const std::string& graph_name = "poset",
                            const std::optional<ElementSet>& highlight = std::nullopt) {
  std::ostringstream out;
  out << "digraph \"" << detail::dot_escape(graph_name) << "\" {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (auto id : p.serialization_order()) {
    out << "  n" << id << " [label=\"" << detail::dot_escape(p.name(id)) << "\"";
    if (highlight && highlight->contains(id)) out << ", style=filled, fillcolor=lightgrey";
    out << "];\n";
  }
  for (auto [a, b] : p.covers()) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

enum class Format { text, json, dot };

inline Format parse_format(const std::string& s) {
  if (s == "text") return Format::text;
  if (s == "json") return Format::json;
  if (s == "dot") return Format::dot;
  throw InputError("unknown output format '" + s + "' (expected text, json or dot)");
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path + ": cannot write file");
  out << content;
}

/// Writes the lattice in JSON (text is treated as JSON) or DOT.
inline void emit_lattice(const FiniteLattice& l, const std::string& path, Format format) {
  write_file(path, format == Format::dot ? emit_dot(l.poset(), "lattice") : emit_poset_json(l.poset()));
}

}  // namespace ordlat::io
