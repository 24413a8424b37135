#pragma once

// JSON encodings.  A forest is a list of trees, a tree is
// {"label": color | forest, "children": forest}.  Spaces are
// {"points": n, "le": [[i, j], ...]}, partitions {"labels": [...]}, bases
// lists of point lists and omega-bases lists of bases.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hier/report.hpp"
#include "hier/wadge.hpp"

namespace hier {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void expect(bool ok, const std::string& what) {
  if (!ok) throw JsonFormatError(what);
}

inline std::size_t index_from_json(const Json& j, const std::string& what) {
  expect(j.is_number_integer() && j.get<long long>() >= 0, what + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

}  // namespace detail

// One line, keys in insertion order, a space after ':' and ','.
inline std::string to_line(const Json& j) {
  std::string out;
  if (j.is_object()) {
    out = "{";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      out += (first ? "" : ", ") + Json(key).dump() + ": " + to_line(value);
      first = false;
    }
    return out + "}";
  }
  if (j.is_array()) {
    out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + to_line(j[i]);
    return out + "]";
  }
  return j.dump();
}

// ---------------------------------------------------------------------------
// Forests

inline Json forest_to_json(const Forest& f);

inline Json tree_to_json(const Tree& t) {
  Json label = t.label.is_color() ? Json(t.label.color()) : forest_to_json(t.label.forest());
  return Json{{"label", label}, {"children", forest_to_json(t.children)}};
}

inline Json forest_to_json(const Forest& f) {
  Json out = Json::array();
  for (const auto& t : f.trees) out.push_back(tree_to_json(t));
  return out;
}

inline Forest forest_from_json(const Json& j);

inline Tree tree_from_json(const Json& j) {
  detail::expect(j.is_object() && j.contains("label"), "tree must be an object with a label");
  const Json& l = j["label"];
  Tree t;
  if (l.is_array())
    t.label = Label::nested(forest_from_json(l));
  else
    t.label = Label::color(static_cast<int>(detail::index_from_json(l, "color label")));
  if (j.contains("children")) t.children = forest_from_json(j["children"]);
  return t;
}

// A single tree object is accepted as a one-tree forest.
inline Forest forest_from_json(const Json& j) {
  if (j.is_object()) return as_forest(tree_from_json(j));
  detail::expect(j.is_array(), "forest must be a list of trees");
  Forest f;
  for (const auto& t : j) f.trees.push_back(tree_from_json(t));
  return f;
}

// ---------------------------------------------------------------------------
// Spaces, sets, bases, partitions

inline Json space_to_json(const FiniteSpace& x) {
  Json le = Json::array();
  for (std::size_t a = 0; a < x.n; ++a)
    for (std::size_t b = 0; b < x.n; ++b)
      if (a != b && x.leq(a, b)) le.push_back({a, b});
  return Json{{"points", x.n}, {"le", le}};
}

// The pairs are closed reflexively and transitively.
inline FiniteSpace space_from_json(const Json& j) {
  detail::expect(j.is_object() && j.contains("points"), "space must be an object with \"points\"");
  std::size_t n = detail::index_from_json(j["points"], "points");
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (j.contains("le")) {
    detail::expect(j["le"].is_array(), "\"le\" must be a list of pairs");
    for (const auto& p : j["le"]) {
      detail::expect(p.is_array() && p.size() == 2, "order pairs must have two entries");
      pairs.emplace_back(detail::index_from_json(p[0], "point"), detail::index_from_json(p[1], "point"));
    }
  }
  return space_from_pairs(n, pairs);
}

inline Json set_to_json(PointSet s) { return Json(members(s)); }

inline PointSet set_from_json(const Json& j, std::size_t points) {
  detail::expect(j.is_array(), "a set must be a list of points");
  PointSet s = 0;
  for (const auto& x : j) {
    std::size_t p = detail::index_from_json(x, "point");
    if (p >= points) throw std::invalid_argument("point " + std::to_string(p) + " outside the space");
    s |= PointSet{1} << p;
  }
  return s;
}

inline Json base_to_json(const Base& b) {
  Json out = Json::array();
  for (PointSet s : b.sets) out.push_back(set_to_json(s));
  return out;
}

// The listed sets are closed under union and intersection.
inline Base base_from_json(const Json& j, std::size_t points) {
  detail::expect(j.is_array(), "base must be a list of sets");
  std::vector<PointSet> seed;
  for (const auto& s : j) seed.push_back(set_from_json(s, points));
  return close_base(points, seed);
}

inline Json omega_base_to_json(const OmegaBase& ob) {
  Json out = Json::array();
  for (const auto& l : ob.levels) out.push_back(base_to_json(l));
  return out;
}

inline OmegaBase omega_base_from_json(const Json& j, std::size_t points) {
  detail::expect(j.is_array() && !j.empty(), "omega-base must be a nonempty list of bases");
  OmegaBase ob;
  for (const auto& l : j) ob.levels.push_back(base_from_json(l, points));
  validate(ob);
  return ob;
}

inline Json partition_to_json(const KPartition& a) { return Json{{"labels", a.labels}}; }

inline KPartition partition_from_json(const Json& j) {
  const Json& l = j.is_object() && j.contains("labels") ? j["labels"] : j;
  detail::expect(l.is_array(), "partition must be {\"labels\": [...]}");
  KPartition a;
  for (const auto& c : l) a.labels.push_back(static_cast<int>(detail::index_from_json(c, "partition label")));
  return a;
}

inline Json family_to_json(const PFamily& fam) {
  Json sets = Json::object();
  for (const auto& [path, s] : fam.sets) sets[path_to_string(path)] = set_to_json(s);
  return Json{{"forest", print_term_raw(fam.forest)}, {"layers", fam.layers}, {"sets", sets}};
}

// ---------------------------------------------------------------------------
// Reports

inline Json report_to_json(const HierarchyReport& r) {
  Json out;
  Json parts = Json::array();
  for (const auto& a : r.partitions) parts.push_back(partition_to_string(a));
  out["partitions"] = parts;
  Json levels = Json::array();
  for (std::size_t i = 0; i < r.forests.size(); ++i)
    levels.push_back(Json{{"forest", print_term(r.forests[i])}, {"size", r.levels[i].size()}, {"members", r.levels[i]}});
  out["levels"] = levels;
  Json inc = Json::array();
  for (std::size_t i = 0; i < r.forests.size(); ++i)
    for (std::size_t j = 0; j < r.forests.size(); ++j)
      if (i != j && r.included[i][j]) inc.push_back({i, j});
  out["inclusions"] = inc;
  Json cons = Json::array();
  for (const auto& c : r.constituents)
    cons.push_back(Json{{"generators", c.generators}, {"size", c.members.size()}, {"members", c.members}});
  out["constituents"] = cons;
  return out;
}

inline Json degrees_to_json(const DegreePoset& dp) {
  Json degs = Json::array();
  for (std::size_t d = 0; d < dp.size(); ++d) {
    Json mem = Json::array();
    for (auto i : dp.members[d]) mem.push_back(partition_to_string(dp.partitions[i]));
    degs.push_back(Json{{"id", d}, {"representative", mem[0]}, {"members", mem}});
  }
  Json hasse = Json::array();
  for (auto [a, b] : dp.hasse) hasse.push_back({a, b});
  return Json{{"degrees", degs},
              {"covers", hasse},
              {"minimal", dp.minimal()},
              {"maximal", dp.maximal()}};
}

}  // namespace hier
