#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bundleforge/perm.hpp"

namespace bundleforge {

/// Vertex labels are opaque strings. Integer labels are written in decimal.
using Label = std::string;

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;
inline constexpr std::size_t kDefaultAutomorphismBound = 10;

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Finite simple undirected graph with an explicit vertex order.
///
/// The vertex order fixes adjacency-matrix rows and every derived ordering
/// (products, pullbacks). Edges are stored as index pairs (i, j) with i < j,
/// sorted lexicographically.
class Graph {
 public:
  using IndexEdge = std::pair<std::size_t, std::size_t>;

  Graph() = default;

  /// Throws DuplicateVertex, LoopEdge or UnknownEndpoint. Repeated edges merge.
  Graph(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges);

  static Graph from_indices(std::vector<Label> vertices, const std::vector<IndexEdge>& edges);

  std::size_t order() const { return labels_.size(); }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Label>& vertices() const { return labels_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(const Label& label) const;
  /// Throws UnknownVertex.
  std::size_t index_of(const Label& label) const;

  bool adjacent(std::size_t i, std::size_t j) const { return adj_[i * labels_.size() + j] != 0; }
  const std::vector<std::size_t>& neighbors(std::size_t i) const { return nbrs_[i]; }
  std::size_t degree(std::size_t i) const { return nbrs_[i].size(); }
  const std::vector<IndexEdge>& edges() const { return edges_; }
  std::vector<std::pair<Label, Label>> labeled_edges() const;

  /// Same vertex sequence and same edge set.
  bool operator==(const Graph& other) const;

 private:
  void build(const std::vector<IndexEdge>& edges);

  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<std::size_t>> nbrs_;
  std::vector<IndexEdge> edges_;
};

/// Copy of g with vertex i renamed to labels[i].
Graph relabeled(const Graph& g, std::vector<Label> labels);

/// Same vertex set and edge set, ignoring vertex order.
bool same_labeled_graph(const Graph& a, const Graph& b);

std::vector<std::size_t> sorted_degrees(const Graph& g);

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

/// Vertex map between graphs. Construction checks totality and range only;
/// the edge condition is checked by validate_morphism.
class GraphMorphism {
 public:
  GraphMorphism(Graph domain, Graph codomain, std::vector<std::size_t> map);

  static GraphMorphism from_labels(Graph domain, Graph codomain,
                                   const std::map<Label, Label>& map);
  static GraphMorphism from_function(Graph domain, Graph codomain,
                                     const std::function<Label(const Label&)>& fn);

  const Graph& domain() const { return domain_; }
  const Graph& codomain() const { return codomain_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t v) const { return map_[v]; }
  const Label& image(const Label& v) const;

 private:
  Graph domain_;
  Graph codomain_;
  std::vector<std::size_t> map_;
};

struct MorphismCheck {
  bool valid = true;
  std::vector<std::pair<Label, Label>> violations;
};

/// Weak morphism check: every edge maps to an edge or collapses to a vertex.
MorphismCheck validate_morphism(const GraphMorphism& f);

/// True iff no edge collapses. Throws NotAMorphism when f is not a morphism.
bool preserves_edges(const GraphMorphism& f);

bool is_surjective(const GraphMorphism& f);

/// outer o inner. Throws ShapeMismatch when inner's codomain differs from outer's domain.
GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner);

GraphMorphism identity_morphism(const Graph& g);

// ---------------------------------------------------------------------------
// Subgraphs and fibers
// ---------------------------------------------------------------------------

Graph induced_subgraph(const Graph& g, const std::vector<Label>& subset);
Graph induced_subgraph_by_index(const Graph& g, const std::vector<std::size_t>& subset);

/// Star graph on v and its neighbours. Edges among neighbours are excluded.
Graph neighborhood(const Graph& g, const Label& v);

/// Domain vertices over codomain vertex v, in domain order.
std::vector<std::size_t> fiber_indices(const GraphMorphism& f, std::size_t v);
Graph fiber(const GraphMorphism& f, const Label& v);

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

/// Backtracking search for a vertex bijection g -> h preserving adjacency in
/// both directions. Result[i] is the image in h of g's vertex i. Throws
/// SearchBudgetExceeded when more than `budget` search nodes are visited; a
/// thrown budget means "unknown", nullopt means "not isomorphic".
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h,
                                                         std::uint64_t budget = kDefaultSearchBudget);

/// True iff map is a bijection g -> h preserving adjacency both ways.
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& map);

/// Complete automorphism list in lexicographic order (identity first).
/// Throws EnumerationBoundExceeded when the order exceeds max_vertices.
std::vector<Perm> automorphisms(const Graph& g, std::size_t max_vertices = kDefaultAutomorphismBound,
                                std::uint64_t budget = kDefaultSearchBudget);

bool is_automorphism(const Graph& g, const Perm& p);

}  // namespace bundleforge
