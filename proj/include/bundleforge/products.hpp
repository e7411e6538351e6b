#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "bundleforge/graph.hpp"
#include "bundleforge/matrix.hpp"
#include "bundleforge/perm.hpp"

namespace bundleforge {

/// "(a,b)" composite label used by products.
Label pair_label(const Label& a, const Label& b);

/// Vertex (i, j) sits at index i * |V2| + j; label "(u,v)".
Graph cartesian_product(const Graph& g1, const Graph& g2);
Graph strong_product(const Graph& g1, const Graph& g2);

Spectrum cartesian_spectrum(const Spectrum& s1, const Spectrum& s2);
Spectrum strong_spectrum(const Spectrum& s1, const Spectrum& s2);

using OrientedEdge = std::pair<std::size_t, std::size_t>;

struct Covering {
  Graph total;
  GraphMorphism projection;
  std::size_t k = 0;
  /// lift[x] sends each neighbour w of p(x) to the unique neighbour of x over w.
  std::vector<std::map<std::size_t, std::size_t>> lift;

  const Graph& base() const { return projection.codomain(); }
};

/// Throws NotSurjective, FiberSizeMismatch(v) or NoLifting(v,x).
Covering verify_kfold_covering(const GraphMorphism& p, std::size_t k);

/// Permutations of {0..k-1} on every oriented base edge, sigma(w,v) = sigma(v,w)^-1.
class CoveringVoltage {
 public:
  CoveringVoltage(Graph base, std::size_t k) : base_(std::move(base)), k_(k) {}

  /// Sets both orientations. Throws InvalidVoltage.
  void set(std::size_t v, std::size_t w, const Perm& sigma);
  const Perm& at(std::size_t v, std::size_t w) const;

  const Graph& base() const { return base_; }
  std::size_t k() const { return k_; }
  /// Throws InvalidVoltage if some oriented edge is missing or inconsistent.
  void validate() const;
  const std::map<OrientedEdge, Perm>& sigma() const { return sigma_; }

 private:
  Graph base_;
  std::size_t k_;
  std::map<OrientedEdge, Perm> sigma_;
};

/// labeling[x] is the index of total vertex x inside its fiber. When empty,
/// each fiber is numbered in total-vertex order.
CoveringVoltage covering_voltage(const Covering& c, std::vector<std::size_t> labeling = {});

/// Total space of a covering voltage on (v, i) vertices in lexicographic order.
Graph covering_graph(const CoveringVoltage& cv);

/// Sum over distinct voltages of A(psi) (x) perm(psi), where A(psi)_{vw} = 1
/// iff v ~ w and sigma(w,v) = psi.
Matrix covering_adjacency(const CoveringVoltage& cv);

}  // namespace bundleforge
