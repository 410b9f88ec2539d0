#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "inccat/category.hpp"
#include "inccat/hall.hpp"
#include "inccat/poset.hpp"

namespace inccat::io {

using json = nlohmann::json;

/// { "elements": [...], "covers": [[lo, hi], ...], "colors": {label: c} }.
/// Covers are the Hasse edges; colors appear only on colored posets.
inline json poset_to_json(const Poset& p) {
  json j;
  j["elements"] = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) j["elements"].push_back(p.label(i));
  j["covers"] = json::array();
  for (const auto& [a, b] : p.covers()) j["covers"].push_back({p.label(a), p.label(b)});
  if (p.has_colors()) {
    j["colors"] = json::object();
    for (std::size_t i = 0; i < p.size(); ++i) j["colors"][p.label(i)] = p.color(i);
  }
  return j;
}

inline Poset poset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("elements") || !j["elements"].is_array())
    throw ParseError("poset document needs an \"elements\" array");
  std::vector<std::string> labels;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) throw ParseError("element labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  std::vector<std::pair<std::string, std::string>> covers;
  if (j.contains("covers")) {
    if (!j["covers"].is_array()) throw ParseError("\"covers\" must be an array of pairs");
    for (const auto& c : j["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_string() || !c[1].is_string())
        throw ParseError("each cover must be a pair of element labels");
      covers.emplace_back(c[0].get<std::string>(), c[1].get<std::string>());
    }
  }
  if (j.contains("colors") && !j["colors"].is_null()) {
    if (!j["colors"].is_object()) throw ParseError("\"colors\" must map labels to color indices");
    std::map<std::string, std::uint32_t> colors;
    for (const auto& [name, c] : j["colors"].items()) {
      if (!c.is_number_unsigned()) throw ParseError("color of '" + name + "' must be a nonnegative integer");
      colors[name] = c.get<std::uint32_t>();
    }
    return from_covers(labels, covers, &colors);
  }
  return from_covers(labels, covers);
}

inline json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

inline Poset read_poset_file(const std::filesystem::path& path) { return poset_from_json(read_json_file(path)); }

inline json subset_to_json(const Poset& p, ElementSubset s) {
  json out = json::array();
  for (auto i : s) out.push_back(p.label(i));
  std::vector<std::string> names = out.get<std::vector<std::string>>();
  std::sort(names.begin(), names.end());
  return names;
}

inline ElementSubset subset_from_json(const Poset& p, const json& j) {
  if (!j.is_array()) throw ParseError("element subsets are arrays of labels");
  ElementSubset s;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError("element labels must be strings");
    const auto i = p.index_of(e.get<std::string>());
    if (!i) throw ParseError("unknown element label '" + e.get<std::string>() + "'");
    s.insert(*i);
  }
  return s;
}

/// { "source": poset, "target": poset, "I1": [...], "I2": [...], "f": {src: tgt} }.
inline json morphism_to_json(const Morphism& m) {
  const Poset& a = m.source.poset();
  const Poset& b = m.target.poset();
  json j;
  j["source"] = poset_to_json(a);
  j["target"] = poset_to_json(b);
  j["I1"] = subset_to_json(a, m.kernel_ideal);
  j["I2"] = subset_to_json(b, m.image_ideal);
  j["f"] = json::object();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (m.map[x] >= 0) j["f"][a.label(x)] = b.label(static_cast<std::size_t>(m.map[x]));
  return j;
}

/// Inverse of morphism_to_json. "source" / "target" may also be paths to
/// poset files, resolved against base_dir.
inline Morphism morphism_from_json(const json& j, const IncidenceCategory& cat,
                                   const std::filesystem::path& base_dir = {}) {
  auto endpoint = [&](const char* name) {
    if (!j.contains(name)) throw ParseError(std::string("morphism needs a \"") + name + "\" poset");
    const json& e = j[name];
    if (e.is_string()) return read_poset_file(base_dir / e.get<std::string>());
    return poset_from_json(e);
  };
  const CategoryObject source = cat.object(endpoint("source"));
  const CategoryObject target = cat.object(endpoint("target"));
  const Poset& a = source.poset();
  const Poset& b = target.poset();
  const ElementSubset i1 = subset_from_json(a, j.value("I1", json::array()));
  const ElementSubset i2 = subset_from_json(b, j.value("I2", json::array()));
  std::vector<int> map(a.size(), -1);
  const json f = j.value("f", json::object());
  if (!f.is_object()) throw ParseError("\"f\" must map source labels to target labels");
  for (const auto& [from, to] : f.items()) {
    const auto x = a.index_of(from);
    if (!x || !to.is_string()) throw ParseError("bad map entry for '" + from + "'");
    const auto y = b.index_of(to.get<std::string>());
    if (!y) throw ParseError("unknown target label '" + to.get<std::string>() + "'");
    map[*x] = static_cast<int>(*y);
  }
  return cat.morphism(source, target, i1, i2, std::move(map));
}

/// { "<key hex>": "p/q", ... }.
inline json hall_to_json(const HallElement& f) {
  json j = json::object();
  for (const auto& [k, c] : f) j[k.hex()] = to_string(c);
  return j;
}

inline HallElement hall_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("Hall elements are objects from key hex to \"p/q\"");
  HallElement f;
  for (const auto& [k, c] : j.items()) {
    if (!c.is_string()) throw ParseError("coefficients are strings \"p/q\"");
    f.add(CanonicalKey::from_hex(k), parse_rational(c.get<std::string>()));
  }
  return f;
}

inline json tensor_to_json(const TensorElement& t) {
  json j = json::array();
  for (const auto& [pair, c] : t)
    j.push_back({{"left", pair.first.hex()}, {"right", pair.second.hex()}, {"coefficient", to_string(c)}});
  return j;
}

}  // namespace inccat::io
