#pragma once

// Levels of a finite set of forests over a space, their inclusion order
// and the constituents of the hierarchy they generate.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "hier/family.hpp"
#include "hier/term.hpp"

namespace hier {

struct Constituent {
  std::vector<std::size_t> generators;  // minimal forests whose levels contain the members
  std::vector<std::size_t> members;     // indices into HierarchyReport::partitions
};

struct HierarchyReport {
  std::vector<Forest> forests;
  std::vector<KPartition> partitions;            // all k^n partitions
  std::vector<std::vector<std::size_t>> levels;  // per forest, member indices ascending
  std::vector<std::vector<bool>> included;       // included[i][j]: level i within level j
  std::vector<Constituent> constituents;         // ordered by first member
};

// A partition lies in the constituent of an antichain S exactly when the
// forests whose levels contain it are the ones above S, so constituents
// are read off from the minimal such forests.
inline HierarchyReport hierarchy_report(const OmegaBase& ll, const std::vector<Forest>& forests, int k,
                                        FamilyKind kind = FamilyKind::monotone, bool allow_large = false) {
  check_size(ll.points(), k, allow_large);
  HierarchyReport r;
  r.forests = forests;
  r.partitions = all_partitions(ll.points(), k);
  std::size_t m = forests.size();
  std::vector<std::vector<bool>> in(m, std::vector<bool>(r.partitions.size()));
  for (std::size_t i = 0; i < m; ++i) {
    check_colors(forests[i], k);
    r.levels.push_back(level_set(forests[i], ll, k, kind));
    for (auto a : r.levels[i]) in[i][a] = true;
  }
  r.included.assign(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      r.included[i][j] = std::includes(r.levels[j].begin(), r.levels[j].end(), r.levels[i].begin(), r.levels[i].end());

  std::vector<std::vector<bool>> le(m, std::vector<bool>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) le[i][j] = h_leq(forests[i], forests[j]);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t a = 0; a < r.partitions.size(); ++a) {
    std::vector<std::size_t> gens;
    for (std::size_t i = 0; i < m; ++i) {
      if (!in[i][a]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < m && minimal; ++j)
        if (in[j][a] && le[j][i] && !le[i][j]) minimal = false;
      if (minimal) gens.push_back(i);
    }
    if (gens.empty()) continue;
    auto [it, fresh] = index.emplace(gens, r.constituents.size());
    if (fresh) r.constituents.push_back(Constituent{gens, {}});
    r.constituents[it->second].members.push_back(a);
  }
  return r;
}

// Hasse diagram of level inclusion, one node per distinct level.
inline std::string report_to_dot(const HierarchyReport& r) {
  std::vector<std::vector<std::size_t>> groups;  // forests sharing a level
  for (std::size_t i = 0; i < r.forests.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return r.levels[g[0]] == r.levels[i]; });
    if (it == groups.end())
      groups.push_back({i});
    else
      it->push_back(i);
  }
  std::string out = "digraph levels {\n  rankdir=BT;\n";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::string label;
    for (auto i : groups[g]) label += (label.empty() ? "" : "\\n") + print_term(r.forests[i]);
    out += "  l" + std::to_string(g) + " [label=\"" + label + "\\n(" + std::to_string(r.levels[groups[g][0]].size()) +
           ")\"];\n";
  }
  auto sub = [&](std::size_t a, std::size_t b) { return a != b && r.included[groups[a][0]][groups[b][0]]; };
  for (std::size_t a = 0; a < groups.size(); ++a)
    for (std::size_t b = 0; b < groups.size(); ++b) {
      if (!sub(a, b)) continue;
      bool cover = true;
      for (std::size_t c = 0; c < groups.size() && cover; ++c)
        if (sub(a, c) && sub(c, b)) cover = false;
      if (cover) out += "  l" + std::to_string(a) + " -> l" + std::to_string(b) + ";\n";
    }
  return out + "}\n";
}

}  // namespace hier
