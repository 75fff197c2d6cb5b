#include "ultra/io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace ultra::io {

using nlohmann::json;

namespace {

const json& field(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

const json& array_field(const json& doc, const char* key) {
  const json& value = field(doc, key);
  if (!value.is_array()) {
    throw ParseError(std::string("field \"") + key + "\" must be an array");
  }
  return value;
}

std::vector<Rational> rational_array(const json& values, std::size_t n,
                                     const char* what) {
  if (values.size() != n) {
    throw ParseError(std::string(what) + " has " +
                     std::to_string(values.size()) + " entries, expected " +
                     std::to_string(n));
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (const auto& v : values) out.push_back(parse_rational(v));
  return out;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

json rational_strings(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_rational(const json& value) {
  if (!value.is_string()) {
    throw ParseError("rational must be a string, got " + value.dump());
  }
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

Instance parse_instance(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("instance must be a JSON object");
  const json& points = array_field(doc, "points");
  std::vector<std::string> labels;
  for (const auto& p : points) {
    if (!p.is_string()) throw ParseError("point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  const std::size_t n = labels.size();
  auto weights = rational_array(array_field(doc, "weights"), n, "weights");

  const json& rows = array_field(doc, "distances");
  if (rows.size() != n) {
    throw ParseError("distances must have one row per point");
  }
  std::vector<Rational> tri;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != i) {
      throw ParseError("distance row " + std::to_string(i) + " must have " +
                       std::to_string(i) + " entries");
    }
    for (const auto& v : rows[i]) tri.push_back(parse_rational(v));
  }

  Instance out;
  try {
    out.triple = UltraTriple(std::move(labels), std::move(weights),
                             std::move(tri));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (doc.contains("selfdist")) {
    auto self = rational_array(array_field(doc, "selfdist"), n, "selfdist");
    out.full = FullUltraTriple(out.triple, std::move(self));
  }
  return out;
}

Instance read_instance(const std::filesystem::path& path) {
  return parse_instance(read_text(path));
}

json to_json(const UltraTriple& t) {
  json rows = json::array();
  for (Point i = 0; i < t.size(); ++i) {
    json row = json::array();
    for (Point j = 0; j < i; ++j) row.push_back(t.distance(i, j).str());
    rows.push_back(std::move(row));
  }
  return json{{"points", t.labels()},
              {"weights", rational_strings(t.weights())},
              {"distances", std::move(rows)}};
}

json to_json(const FullUltraTriple& t) {
  json out = to_json(t.base());
  out["selfdist"] = rational_strings(t.self_distances());
  return out;
}

SetSystem parse_set_system(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("set system must be a JSON object");
  const json& ground = field(doc, "ground");
  if (!ground.is_number_unsigned()) {
    throw ParseError("\"ground\" must be a nonnegative integer");
  }
  const auto n = ground.get<std::size_t>();
  if (n > kMaxMaskPoints) throw ParseError("ground set larger than 64");
  std::vector<Mask> sets;
  for (const auto& s : array_field(doc, "sets")) {
    if (!s.is_array()) throw ParseError("each set must be an array");
    Mask m = 0;
    for (const auto& e : s) {
      if (!e.is_number_unsigned() || e.get<std::size_t>() >= n) {
        throw ParseError("set element " + e.dump() + " is not below " +
                         std::to_string(n));
      }
      m |= bit(e.get<std::size_t>());
    }
    sets.push_back(m);
  }
  return SetSystem(n, std::move(sets));
}

json to_json(const SetSystem& s) {
  json sets = json::array();
  for (Mask m : s.sets()) sets.push_back(points_of(m));
  return json{{"ground", s.ground()}, {"sets", std::move(sets)}};
}

json to_json(const GreedyTrace& trace, const UltraTriple& t) {
  json points = json::array();
  for (Point p : trace.points) points.push_back(t.label(p));
  return json{{"points", std::move(points)},
              {"increments", rational_strings(trace.increments)},
              {"prefix_perimeters", rational_strings(trace.prefix_perimeters())}};
}

WeightedTree parse_tree(std::string_view text) {
  WeightedTree tree;
  std::map<std::string, std::size_t> index;
  auto vertex = [&](const std::string& name) {
    const auto [it, fresh] = index.emplace(name, tree.vertices.size());
    if (fresh) tree.vertices.push_back(name);
    return it->second;
  };
  std::optional<std::string> root;
  std::optional<std::vector<std::string>> leaves;

  std::size_t line_no = 0;
  for (std::string line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    std::istringstream in(line);
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "root") {
      if (tok.size() != 2) throw ParseError(where + "expected \"root r\"");
      if (root) throw ParseError(where + "second root directive");
      root = tok[1];
    } else if (tok[0] == "leaves") {
      if (leaves) throw ParseError(where + "second leaves directive");
      std::string joined;
      for (std::size_t i = 1; i < tok.size(); ++i) joined += tok[i];
      leaves.emplace();
      for (auto& name : split(joined, ',')) {
        if (name.empty()) throw ParseError(where + "empty leaf name");
        leaves->push_back(name);
      }
    } else {
      if (tok.size() != 3) {
        throw ParseError(where + "expected \"u v weight\"");
      }
      Rational w;
      try {
        w = Rational::parse(tok[2]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(where + e.what());
      }
      const std::size_t u = vertex(tok[0]);
      const std::size_t v = vertex(tok[1]);
      tree.edges.push_back({u, v, std::move(w)});
    }
  }
  if (!root) throw ParseError("missing \"root r\" directive");
  tree.root = vertex(*root);
  if (leaves) {
    for (const auto& name : *leaves) {
      const auto it = index.find(name);
      if (it == index.end()) throw ParseError("unknown leaf " + name);
      tree.leaves.push_back(it->second);
    }
  }
  return tree;
}

}  // namespace ultra::io
