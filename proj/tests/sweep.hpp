#pragma once

// Exhaustive generator-system enumeration for the Cayley sweeps.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "bundleforge/cayley.hpp"
#include "bundleforge/groups.hpp"

namespace oracle {

using bundleforge::FiniteGroup;

// Every symmetric subset of `within` minus the identity that generates `within`.
// `within` empty means the whole group.
inline std::vector<std::vector<std::size_t>> generator_systems(const FiniteGroup& g, std::vector<std::size_t> within) {
  if (within.empty()) {
    for (std::size_t i = 0; i < g.order(); ++i) within.push_back(i);
  }
  std::sort(within.begin(), within.end());
  // one representative per inverse pair
  std::vector<std::size_t> reps;
  for (std::size_t x : within)
    if (x != g.identity() && g.inv(x) >= x) reps.push_back(x);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << reps.size()); ++mask) {
    std::set<std::size_t> s;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (mask >> i & 1) {
        s.insert(reps[i]);
        s.insert(g.inv(reps[i]));
      }
    }
    std::vector<std::size_t> v(s.begin(), s.end());
    if (bundleforge::generated_subgroup(g, v) == within) out.push_back(v);
  }
  return out;
}

inline std::vector<FiniteGroup> small_groups() {
  using bundleforge::cyclic;
  using bundleforge::direct_product;
  return {cyclic(2), cyclic(3), cyclic(4), cyclic(6), direct_product(cyclic(2), cyclic(3)),
          direct_product(cyclic(2), cyclic(2))};
}

}  // namespace oracle
