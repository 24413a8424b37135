#pragma once

// Test-only brute force for the set-theoretic side: every assignment of
// base sets to family nodes, every difference sequence.

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "hier/family.hpp"
#include "hier/nested.hpp"
#include "hier/space.hpp"

namespace hier::oracle {

// Node addresses of every layer: all prefixes of the flattened tuples.
inline std::vector<Path> family_paths(const Forest& p, std::size_t layers) {
  std::set<Path> all;
  for (const auto& t : flatten(p, layers).tuples)
    for (std::size_t len = 1; len <= t.size(); ++len) all.insert(Path(t.begin(), t.begin() + long(len)));
  return {all.begin(), all.end()};
}

// Visits every family over the omega-base (layer j sets from level j)
// that satisfies the structural conditions; stops when visit returns true.
inline bool any_family(const Forest& p, const OmegaBase& ll, const std::function<bool(const PFamily&)>& visit) {
  std::size_t layers = std::max<std::size_t>(1, nesting_level(p));
  auto paths = family_paths(p, layers);
  PFamily fam{p, layers, {}};
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == paths.size()) {
      try {
        family_defines(fam, ll.points(), &ll);
      } catch (const std::invalid_argument&) {
        return false;
      }
      return visit(fam);
    }
    for (PointSet s : ll.levels[paths[i].size() - 1].sets) {
      fam.sets[paths[i]] = s;
      if (go(i + 1)) return true;
    }
    return false;
  };
  return go(0);
}

inline bool brute_membership(const KPartition& a, const Forest& p, const OmegaBase& ll) {
  return any_family(p, ll, [&](const PFamily& fam) {
    auto out = family_defines(fam, ll.points(), &ll);
    return out.partition && *out.partition == a;
  });
}

// D_n images of all length-n sequences over the base.
inline std::set<PointSet> difference_image(const Base& l, std::size_t n) {
  std::set<PointSet> out;
  std::vector<PointSet> seq(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      out.insert(difference_kernel(seq));
      return;
    }
    for (PointSet s : l.sets) {
      seq[i] = s;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

// Spaces on n labeled points, one per partial order.
inline std::vector<FiniteSpace> all_spaces(std::size_t n) {
  std::vector<FiniteSpace> out;
  for (auto& r : all_posets(n)) out.push_back(FiniteSpace{n, r});
  return out;
}

}  // namespace hier::oracle
