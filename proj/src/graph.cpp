#include "bundleforge/graph.hpp"

#include <algorithm>
#include <set>

#include "bundleforge/error.hpp"

namespace bundleforge {

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

Graph::Graph(std::vector<Label> vertices, const std::vector<std::pair<Label, Label>>& edges)
    : labels_(std::move(vertices)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw Error(ErrorCode::DuplicateVertex, labels_[i]);
    }
  }
  std::vector<IndexEdge> idx;
  idx.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end()) throw Error(ErrorCode::UnknownEndpoint, a);
    if (ib == index_.end()) throw Error(ErrorCode::UnknownEndpoint, b);
    if (ia->second == ib->second) throw Error(ErrorCode::LoopEdge, "{" + a + "," + b + "}");
    idx.emplace_back(ia->second, ib->second);
  }
  build(idx);
}

Graph Graph::from_indices(std::vector<Label> vertices, const std::vector<IndexEdge>& edges) {
  Graph g;
  g.labels_ = std::move(vertices);
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    if (!g.index_.emplace(g.labels_[i], i).second) {
      throw Error(ErrorCode::DuplicateVertex, g.labels_[i]);
    }
  }
  for (const auto& [a, b] : edges) {
    if (a >= g.labels_.size() || b >= g.labels_.size()) {
      throw Error(ErrorCode::UnknownEndpoint, "index " + std::to_string(std::max(a, b)));
    }
    if (a == b) throw Error(ErrorCode::LoopEdge, g.labels_[a]);
  }
  g.build(edges);
  return g;
}

void Graph::build(const std::vector<IndexEdge>& edges) {
  const std::size_t n = labels_.size();
  adj_.assign(n * n, 0);
  nbrs_.assign(n, {});
  edges_.clear();
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    if (adj_[a * n + b]) continue;
    adj_[a * n + b] = adj_[b * n + a] = 1;
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  for (auto [a, b] : edges_) {
    nbrs_[a].push_back(b);
    nbrs_[b].push_back(a);
  }
  for (auto& list : nbrs_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::index_of(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, label);
  return it->second;
}

std::vector<std::pair<Label, Label>> Graph::labeled_edges() const {
  std::vector<std::pair<Label, Label>> out;
  out.reserve(edges_.size());
  for (auto [a, b] : edges_) out.emplace_back(labels_[a], labels_[b]);
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return labels_ == other.labels_ && edges_ == other.edges_;
}

Graph relabeled(const Graph& g, std::vector<Label> labels) {
  if (labels.size() != g.order()) {
    throw Error(ErrorCode::ShapeMismatch, "relabeling needs one label per vertex");
  }
  return Graph::from_indices(std::move(labels), g.edges());
}

bool same_labeled_graph(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.order(); ++i) {
    if (!b.find(a.label(i))) return false;
  }
  for (auto [x, y] : a.edges()) {
    if (!b.adjacent(b.index_of(a.label(x)), b.index_of(a.label(y)))) return false;
  }
  return true;
}

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) d[i] = g.degree(i);
  std::sort(d.begin(), d.end());
  return d;
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

GraphMorphism::GraphMorphism(Graph domain, Graph codomain, std::vector<std::size_t> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (map_.size() != domain_.order()) {
    throw Error(ErrorCode::NotAMorphism, "map is not total on the domain");
  }
  for (std::size_t v : map_) {
    if (v >= codomain_.order()) throw Error(ErrorCode::NotAMorphism, "image outside the codomain");
  }
}

GraphMorphism GraphMorphism::from_labels(Graph domain, Graph codomain,
                                         const std::map<Label, Label>& map) {
  std::vector<std::size_t> idx(domain.order());
  for (std::size_t i = 0; i < domain.order(); ++i) {
    auto it = map.find(domain.label(i));
    if (it == map.end()) throw Error(ErrorCode::NotAMorphism, "no image for " + domain.label(i));
    auto target = codomain.find(it->second);
    if (!target) throw Error(ErrorCode::UnknownVertex, it->second);
    idx[i] = *target;
  }
  return GraphMorphism(std::move(domain), std::move(codomain), std::move(idx));
}

GraphMorphism GraphMorphism::from_function(Graph domain, Graph codomain,
                                           const std::function<Label(const Label&)>& fn) {
  std::vector<std::size_t> idx(domain.order());
  for (std::size_t i = 0; i < domain.order(); ++i) idx[i] = codomain.index_of(fn(domain.label(i)));
  return GraphMorphism(std::move(domain), std::move(codomain), std::move(idx));
}

const Label& GraphMorphism::image(const Label& v) const {
  return codomain_.label(map_[domain_.index_of(v)]);
}

MorphismCheck validate_morphism(const GraphMorphism& f) {
  MorphismCheck check;
  const Graph& d = f.domain();
  for (auto [a, b] : d.edges()) {
    std::size_t fa = f(a);
    std::size_t fb = f(b);
    if (fa != fb && !f.codomain().adjacent(fa, fb)) {
      check.valid = false;
      check.violations.emplace_back(d.label(a), d.label(b));
    }
  }
  return check;
}

bool preserves_edges(const GraphMorphism& f) {
  if (!validate_morphism(f).valid) throw Error(ErrorCode::NotAMorphism, "edge condition fails");
  for (auto [a, b] : f.domain().edges()) {
    if (f(a) == f(b)) return false;
  }
  return true;
}

bool is_surjective(const GraphMorphism& f) {
  std::vector<char> hit(f.codomain().order(), 0);
  for (std::size_t v : f.map()) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

GraphMorphism compose(const GraphMorphism& outer, const GraphMorphism& inner) {
  if (!(inner.codomain() == outer.domain())) {
    throw Error(ErrorCode::ShapeMismatch, "morphisms are not composable");
  }
  std::vector<std::size_t> map(inner.domain().order());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = outer(inner(i));
  return GraphMorphism(inner.domain(), outer.codomain(), std::move(map));
}

GraphMorphism identity_morphism(const Graph& g) {
  return GraphMorphism(g, g, identity_perm(g.order()));
}

// ---------------------------------------------------------------------------
// Subgraphs and fibers
// ---------------------------------------------------------------------------

Graph induced_subgraph_by_index(const Graph& g, const std::vector<std::size_t>& subset) {
  std::vector<char> keep(g.order(), 0);
  for (std::size_t v : subset) {
    if (v >= g.order()) throw Error(ErrorCode::UnknownVertex, "index " + std::to_string(v));
    keep[v] = 1;
  }
  std::vector<std::size_t> position(g.order(), 0);
  std::vector<Label> labels;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (!keep[v]) continue;
    position[v] = labels.size();
    labels.push_back(g.label(v));
  }
  std::vector<Graph::IndexEdge> edges;
  for (auto [a, b] : g.edges()) {
    if (keep[a] && keep[b]) edges.emplace_back(position[a], position[b]);
  }
  return Graph::from_indices(std::move(labels), edges);
}

Graph induced_subgraph(const Graph& g, const std::vector<Label>& subset) {
  std::vector<std::size_t> idx;
  idx.reserve(subset.size());
  for (const auto& s : subset) idx.push_back(g.index_of(s));
  return induced_subgraph_by_index(g, idx);
}

Graph neighborhood(const Graph& g, const Label& v) {
  std::size_t c = g.index_of(v);
  std::vector<std::size_t> members = g.neighbors(c);
  members.push_back(c);
  std::sort(members.begin(), members.end());
  std::vector<Label> labels;
  std::size_t center = 0;
  for (std::size_t m : members) {
    if (m == c) center = labels.size();
    labels.push_back(g.label(m));
  }
  std::vector<Graph::IndexEdge> star;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i != center) star.emplace_back(center, i);
  }
  return Graph::from_indices(std::move(labels), star);
}

std::vector<std::size_t> fiber_indices(const GraphMorphism& f, std::size_t v) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < f.domain().order(); ++x) {
    if (f(x) == v) out.push_back(x);
  }
  return out;
}

Graph fiber(const GraphMorphism& f, const Label& v) {
  return induced_subgraph_by_index(f.domain(), fiber_indices(f, f.codomain().index_of(v)));
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace {

// Degree plus sorted neighbour degrees; equal signatures are necessary for a
// vertex pair to be matched.
std::vector<std::vector<std::size_t>> signatures(const Graph& g) {
  std::vector<std::vector<std::size_t>> sig(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    sig[v].push_back(g.degree(v));
    std::vector<std::size_t> nd;
    for (std::size_t w : g.neighbors(v)) nd.push_back(g.degree(w));
    std::sort(nd.begin(), nd.end());
    sig[v].insert(sig[v].end(), nd.begin(), nd.end());
  }
  return sig;
}

// Placement order: each next vertex has the most already-placed neighbours,
// ties broken by index; new components start at their lowest index.
std::vector<std::size_t> placement_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> order;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> links(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (best == n || links[v] > links[best]) best = v;
    }
    placed[best] = 1;
    order.push_back(best);
    for (std::size_t w : g.neighbors(best)) ++links[w];
  }
  return order;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::uint64_t budget)
      : g_(g), h_(h), budget_(budget), sig_g_(signatures(g)), sig_h_(signatures(h)),
        order_(placement_order(g)), map_(g.order(), 0), used_(h.order(), 0) {}

  // Calls visit for every isomorphism until it returns true.
  template <typename Visit>
  void run(Visit&& visit) {
    if (g_.order() != h_.order() || g_.size() != h_.size()) return;
    if (sorted_degrees(g_) != sorted_degrees(h_)) return;
    recurse(0, visit);
  }

 private:
  template <typename Visit>
  bool recurse(std::size_t depth, Visit& visit) {
    if (depth == order_.size()) return visit(map_);
    std::size_t u = order_[depth];
    for (std::size_t cand = 0; cand < h_.order(); ++cand) {
      if (used_[cand] || sig_g_[u] != sig_h_[cand]) continue;
      if (++nodes_ > budget_) {
        throw Error(ErrorCode::SearchBudgetExceeded,
                    "isomorphism search exceeded " + std::to_string(budget_) + " nodes");
      }
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        std::size_t prev = order_[k];
        ok = g_.adjacent(u, prev) == h_.adjacent(cand, map_[prev]);
      }
      if (!ok) continue;
      map_[u] = cand;
      used_[cand] = 1;
      if (recurse(depth + 1, visit)) return true;
      used_[cand] = 0;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> sig_g_;
  std::vector<std::vector<std::size_t>> sig_h_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h,
                                                         std::uint64_t budget) {
  std::optional<std::vector<std::size_t>> found;
  IsoSearch search(g, h, budget);
  search.run([&](const std::vector<std::size_t>& m) {
    found = m;
    return true;
  });
  return found;
}

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& map) {
  if (g.order() != h.order() || map.size() != g.order() || g.size() != h.size()) return false;
  if (!is_permutation(map)) return false;
  for (auto [a, b] : g.edges()) {
    if (!h.adjacent(map[a], map[b])) return false;
  }
  return true;
}

std::vector<Perm> automorphisms(const Graph& g, std::size_t max_vertices, std::uint64_t budget) {
  if (g.order() > max_vertices) {
    throw Error(ErrorCode::EnumerationBoundExceeded,
                "automorphism enumeration limited to " + std::to_string(max_vertices) + " vertices");
  }
  std::vector<Perm> out;
  IsoSearch search(g, g, budget);
  search.run([&](const std::vector<std::size_t>& m) {
    out.push_back(m);
    return false;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const Graph& g, const Perm& p) { return is_isomorphism(g, g, p); }

}  // namespace bundleforge
