#include "bundleforge/perm.hpp"

#include <numeric>

#include "bundleforge/error.hpp"

namespace bundleforge {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (std::size_t x : p) {
    if (x >= p.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) return false;
  }
  return true;
}

Perm inverse(const Perm& p) {
  Perm inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

Perm compose(const Perm& outer, const Perm& inner) {
  if (outer.size() != inner.size()) {
    throw Error(ErrorCode::ShapeMismatch, "composing permutations of different degree");
  }
  Perm out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

Perm from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  Perm p = identity_perm(n);
  std::vector<char> used(n, 0);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t a = cycle[i];
      std::size_t b = cycle[(i + 1) % cycle.size()];
      if (a >= n || b >= n || used[a]) {
        throw Error(ErrorCode::NotABijection, "cycles are not disjoint or out of range");
      }
      used[a] = 1;
      p[a] = b;
    }
  }
  return p;
}

std::string to_cycle_string(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

}  // namespace bundleforge
