#include "racg/group_io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "racg/nerve.hpp"

namespace racg {

using nlohmann::json;

Presentation parse_group_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("group file: top level must be an object");
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw InvalidInput("group file: missing \"generators\" array");

  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) {
    if (!g.is_string()) throw InvalidInput("group file: generator names must be strings");
    names.push_back(g.get<std::string>());
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  if (doc.contains("commuting_pairs")) {
    if (!doc["commuting_pairs"].is_array())
      throw InvalidInput("group file: \"commuting_pairs\" must be an array");
    for (const auto& pr : doc["commuting_pairs"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_string() || !pr[1].is_string())
        throw InvalidInput("group file: each commuting pair must be two generator names");
      pairs.emplace_back(pr[0].get<std::string>(), pr[1].get<std::string>());
    }
  }

  std::vector<Color> colors;
  if (doc.contains("coloring")) {
    const auto& col = doc["coloring"];
    if (!col.is_object())
      throw InvalidInput("group file: \"coloring\" must map generator -> color index");
    colors.assign(names.size(), -1);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!col.contains(names[i]))
        throw InvalidInput("group file: coloring misses generator " + names[i]);
      if (!col[names[i]].is_number_integer())
        throw InvalidInput("group file: colors must be integers");
      int c = col[names[i]].get<int>();
      if (c < 1) throw InvalidInput("group file: colors are 1-based positive integers");
      colors[i] = c - 1;
    }
    for (const auto& [key, _] : col.items()) {
      if (std::find(names.begin(), names.end(), key) == names.end())
        throw InvalidInput("group file: coloring mentions unknown generator " + key);
    }
    return Presentation(std::move(names), std::move(pairs), std::move(colors));
  }

  // No coloring supplied: color minimally.
  Presentation uncolored(names, pairs, [&] {
    // temporary all-distinct coloring just to construct the relation
    std::vector<Color> tmp(names.size());
    for (std::size_t i = 0; i < tmp.size(); ++i) tmp[i] = Color(i);
    return tmp;
  }());
  ChromaticResult cr = chromatic_coloring(uncolored);
  return Presentation(std::move(names), std::move(pairs), std::move(cr.coloring));
}

Presentation load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open group file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_group_json(ss.str());
}

std::string nerve_analysis_json(const Presentation& p) {
  json out;
  auto sq = find_square(p);
  out["hyperbolic"] = !sq.has_value();
  if (sq) {
    out["square_witness"] = {p.name(sq->t1), p.name(sq->t2), p.name(sq->s1),
                             p.name(sq->s2)};
  } else {
    out["square_witness"] = nullptr;
  }
  ChromaticResult cr = chromatic_coloring(p);
  out["chromatic_number"] = cr.chromatic_number;
  out["coloring_exact"] = cr.exact;
  json col = json::object();
  for (int g = 0; g < p.rank(); ++g)
    col[p.name(Gen(g))] = p.color(Gen(g)) + 1;  // 1-based externally
  out["coloring"] = col;
  return out.dump(2);
}

}  // namespace racg
