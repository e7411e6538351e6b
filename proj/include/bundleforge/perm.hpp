#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bundleforge {

/// A permutation of {0..n-1} in one-line form: p[i] is the image of i.
using Perm = std::vector<std::size_t>;

Perm identity_perm(std::size_t n);
bool is_permutation(const Perm& p);
bool is_identity(const Perm& p);
Perm inverse(const Perm& p);

/// (outer o inner)(i) = outer[inner[i]].
Perm compose(const Perm& outer, const Perm& inner);

/// Builds a permutation of {0..n-1} from 0-based disjoint cycles.
Perm from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

std::string to_cycle_string(const Perm& p);

}  // namespace bundleforge
