#pragma once

// Independent oracles for the unit tests. Nothing here calls the search or
// eigen routines under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "bundleforge/graph.hpp"
#include "bundleforge/matrix.hpp"

namespace oracle {

using bundleforge::Graph;
using bundleforge::Matrix;

// Tries all |V|! bijections.
inline bool brute_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (auto [a, b] : g.edges()) {
      if (!h.adjacent(p[a], p[b])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::size_t brute_automorphism_count(const Graph& g) {
  std::vector<std::size_t> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (auto [a, b] : g.edges()) {
      if (!g.adjacent(p[a], p[b])) {
        ok = false;
        break;
      }
    }
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

// Characteristic polynomial det(xI - A) of an integer matrix by
// Faddeev-LeVerrier; coefficients from x^n down to x^0.
inline std::vector<long long> char_poly(const Matrix& a) {
  const std::size_t n = a.rows();
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0)), am(n, std::vector<long long>(n));
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i][i] += c[k - 1];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        long long s = 0;
        for (std::size_t t = 0; t < n; ++t) s += static_cast<long long>(a(i, t)) * m[t][j];
        am[i][j] = s;
      }
    }
    long long tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am[i][i];
    c[k] = -tr / static_cast<long long>(k);
    m = am;
  }
  return c;
}

// prod (x - r) for integer roots.
inline std::vector<long long> poly_from_roots(const std::vector<long long>& roots) {
  std::vector<long long> p{1};
  for (long long r : roots) {
    std::vector<long long> q(p.size() + 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 1] -= r * p[i];
    }
    p = q;
  }
  return p;
}

inline Matrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace oracle
