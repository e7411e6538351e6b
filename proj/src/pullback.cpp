#include "bundleforge/pullback.hpp"

#include "bundleforge/error.hpp"
#include "bundleforge/products.hpp"

namespace bundleforge {

const char* to_string(EdgeKind kind) {
  switch (kind) {
    case EdgeKind::I: return "I";
    case EdgeKind::II: return "II";
    case EdgeKind::III: return "III";
  }
  return "?";
}

Label bar_label(const Label& v, const Label& x) { return "(" + v + "|" + x + ")"; }

FiberProduct fiber_product(const GraphMorphism& f, const GraphMorphism& p) {
  if (!(f.codomain() == p.codomain())) {
    throw Error(ErrorCode::BaseMismatch, "morphisms have different codomains");
  }
  const Graph& y_graph = f.domain();
  const Graph& x_graph = p.domain();
  const Graph& base = f.codomain();

  FiberProduct fp;
  std::vector<Label> labels;
  std::vector<std::vector<std::size_t>> over(base.order());
  for (std::size_t x = 0; x < x_graph.order(); ++x) over[p(x)].push_back(x);
  // index[y] maps x to the pullback vertex (y|x).
  std::vector<std::vector<std::size_t>> index(y_graph.order(), std::vector<std::size_t>(x_graph.order(), SIZE_MAX));
  for (std::size_t y = 0; y < y_graph.order(); ++y) {
    for (std::size_t x : over[f(y)]) {
      index[y][x] = labels.size();
      labels.push_back(bar_label(y_graph.label(y), x_graph.label(x)));
      fp.first.push_back(y);
      fp.second.push_back(x);
    }
  }

  std::vector<Graph::IndexEdge> edges;
  for (std::size_t y = 0; y < y_graph.order(); ++y) {
    for (std::size_t x : over[f(y)]) {
      const std::size_t a = index[y][x];
      for (std::size_t x2 : x_graph.neighbors(x)) {
        if (p(x2) == f(y)) edges.emplace_back(a, index[y][x2]);
      }
      for (std::size_t y2 : y_graph.neighbors(y)) {
        if (f(y2) == f(y)) {
          edges.emplace_back(a, index[y2][x]);
        } else {
          for (std::size_t x2 : x_graph.neighbors(x)) {
            if (p(x2) == f(y2)) edges.emplace_back(a, index[y2][x2]);
          }
        }
      }
    }
  }
  fp.graph = Graph::from_indices(std::move(labels), edges);

  for (auto [a, b] : fp.graph.edges()) {
    EdgeKind kind;
    if (fp.first[a] == fp.first[b]) {
      kind = EdgeKind::I;
    } else if (f(fp.first[a]) == f(fp.first[b])) {
      kind = EdgeKind::II;
    } else {
      kind = EdgeKind::III;
    }
    fp.edges.push_back({a, b, kind});
    ++fp.counts[static_cast<std::size_t>(kind)];
  }
  return fp;
}

Pullback pullback(const GraphMorphism& f, const GraphBundle& b) {
  if (!(f.codomain() == b.base())) throw Error(ErrorCode::BaseMismatch, "morphism does not land in the base");
  FiberProduct fp = fiber_product(f, b.projection);
  std::vector<std::size_t> coord(fp.graph.order());
  for (std::size_t i = 0; i < coord.size(); ++i) coord[i] = b.fiber_coord[fp.second[i]];
  GraphMorphism proj(fp.graph, f.domain(), fp.first);
  Pullback out{verify_bundle(fp.graph, proj, b.fiber, coord), std::move(fp.edges), fp.counts};
  return out;
}

GraphBundle pullback_bundle(const GraphMorphism& f, const GraphBundle& b) { return pullback(f, b).bundle; }

FiberVoltage pullback_voltage(const GraphMorphism& f, const FiberVoltage& fv) {
  if (!(f.codomain() == fv.base())) throw Error(ErrorCode::BaseMismatch, "morphism does not land in the base");
  FiberVoltage out(f.domain(), fv.fiber());
  for (auto [v, w] : f.domain().edges()) {
    if (f(v) != f(w)) out.set(v, w, fv.at(f(v), f(w)));
  }
  return out;
}

Matrix morphism_matrix(const GraphMorphism& f) {
  Matrix m(f.codomain().order(), f.domain().order());
  for (std::size_t v = 0; v < f.domain().order(); ++v) m(f(v), v) = 1.0;
  return m;
}

Matrix voltage_indicator(const FiberVoltage& fv, const Perm& psi) {
  const Graph& base = fv.base();
  Matrix a(base.order(), base.order());
  for (auto [v, w] : base.edges()) {
    if (fv.at(w, v) == psi) a(v, w) = 1.0;
    if (fv.at(v, w) == psi) a(w, v) = 1.0;
  }
  return a;
}

Matrix pullback_block(const GraphMorphism& f, const FiberVoltage& fv, const Perm& psi) {
  if (!(f.codomain() == fv.base())) throw Error(ErrorCode::BaseMismatch, "morphism does not land in the base");
  Matrix m = morphism_matrix(f);
  Matrix inner = voltage_indicator(fv, psi);
  if (is_identity(psi)) inner += Matrix::identity(fv.base().order());
  return m.transpose() * inner * m;
}

Matrix pullback_adjacency(const GraphMorphism& f, const FiberVoltage& fv, std::size_t max_fiber) {
  const Graph& fiber = fv.fiber();
  const std::size_t n = f.domain().order();
  const Matrix a_gamma = adjacency_matrix(f.domain());
  Matrix a(n * fiber.order(), n * fiber.order());
  for (const Perm& psi : automorphisms(fiber, max_fiber)) {
    a += kronecker(hadamard(a_gamma, pullback_block(f, fv, psi)), perm_matrix(psi));
  }
  a += kronecker(Matrix::identity(n), adjacency_matrix(fiber));
  return a;
}

GraphMorphism canonical_map(const GraphMorphism& f, const GraphBundle& b) {
  FiberProduct fp = fiber_product(f, b.projection);
  return GraphMorphism(fp.graph, b.total, fp.second);
}

bool compose_pullbacks_check(const GraphMorphism& f, const GraphMorphism& g, const GraphBundle& b) {
  GraphBundle lhs = pullback_bundle(f, pullback_bundle(g, b));
  GraphBundle rhs = pullback_bundle(compose(g, f), b);
  return bundles_equivalent(lhs, rhs).has_value();
}

GraphBundle subdirect_product(const GraphBundle& b1, const GraphBundle& b2) {
  if (!(b1.base() == b2.base())) throw Error(ErrorCode::BaseMismatch, "subdirect product needs a common base");
  FiberProduct fp = fiber_product(b1.projection, b2.projection);
  const std::size_t k2 = b2.fiber.order();
  std::vector<Label> labels;
  std::vector<std::size_t> proj, coord;
  for (std::size_t i = 0; i < fp.graph.order(); ++i) {
    const std::size_t x = fp.first[i];
    const std::size_t y = fp.second[i];
    labels.push_back(pair_label(b1.total.label(x), b2.total.label(y)));
    proj.push_back(b1.projection(x));
    coord.push_back(b1.fiber_coord[x] * k2 + b2.fiber_coord[y]);
  }
  Graph total = relabeled(fp.graph, std::move(labels));
  GraphMorphism p(total, b1.base(), std::move(proj));
  return verify_bundle(total, p, cartesian_product(b1.fiber, b2.fiber), coord);
}

Matrix subdirect_adjacency(const FiberVoltage& fv1, const FiberVoltage& fv2, std::size_t max_fiber) {
  if (!(fv1.base() == fv2.base())) throw Error(ErrorCode::BaseMismatch, "voltages over different bases");
  const Graph& base = fv1.base();
  const std::size_t n = base.order();
  const std::size_t k1 = fv1.fiber().order();
  const std::size_t k2 = fv2.fiber().order();
  const auto aut1 = automorphisms(fv1.fiber(), max_fiber);
  const auto aut2 = automorphisms(fv2.fiber(), max_fiber);

  Matrix a(n * k1 * k2, n * k1 * k2);
  for (const Perm& psi1 : aut1) {
    for (const Perm& psi2 : aut2) {
      Matrix part(n, n);
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w : base.neighbors(v))
          if (fv1.at(w, v) == psi1 && fv2.at(w, v) == psi2) part(v, w) = 1.0;
      a += kronecker(kronecker(part, perm_matrix(psi1)), perm_matrix(psi2));
    }
  }
  a += kronecker(kronecker(Matrix::identity(n), adjacency_matrix(fv1.fiber())), Matrix::identity(k2));
  a += kronecker(Matrix::identity(n * k1), adjacency_matrix(fv2.fiber()));
  return a;
}

GraphMorphism pair_morphism(const GraphMorphism& alpha1, const GraphMorphism& alpha2,
                            const GraphBundle& b1, const GraphBundle& b2) {
  if (!(alpha1.domain() == alpha2.domain()) || !(alpha1.codomain() == b1.total) ||
      !(alpha2.codomain() == b2.total)) {
    throw Error(ErrorCode::ShapeMismatch, "maps do not match the bundles");
  }
  const Graph& y_graph = alpha1.domain();
  GraphMorphism c1 = compose(b1.projection, alpha1);
  GraphMorphism c2 = compose(b2.projection, alpha2);
  for (std::size_t y = 0; y < y_graph.order(); ++y) {
    if (c1(y) != c2(y)) throw Error(ErrorCode::CompositesDisagree, y_graph.label(y));
  }
  for (auto [y, z] : y_graph.edges()) {
    if (c1(y) == c1(z)) {
      throw Error(ErrorCode::CompositeCollapses, "{" + y_graph.label(y) + "," + y_graph.label(z) + "}");
    }
  }
  GraphBundle sum = subdirect_product(b1, b2);
  std::vector<std::size_t> map;
  for (std::size_t y = 0; y < y_graph.order(); ++y) {
    map.push_back(sum.total.index_of(pair_label(b1.total.label(alpha1(y)), b2.total.label(alpha2(y)))));
  }
  GraphMorphism out(y_graph, sum.total, std::move(map));
  if (!validate_morphism(out).valid) throw Error(ErrorCode::Internal, "paired map is not a morphism");
  return out;
}

bool is_section(const GraphMorphism& beta, const GraphBundle& b) {
  if (!(beta.codomain() == b.total)) return false;
  if (!validate_morphism(beta).valid) return false;
  for (std::size_t y = 0; y < beta.domain().order(); ++y) {
    if (b.base().label(b.projection(beta(y))) != beta.domain().label(y)) return false;
  }
  return true;
}

Graph equalizer_graph(const GraphMorphism& q1, const GraphMorphism& q2) {
  FiberProduct fp = fiber_product(q1, q2);
  std::vector<Label> labels;
  for (std::size_t i = 0; i < fp.graph.order(); ++i) {
    labels.push_back(pair_label(q1.domain().label(fp.first[i]), q2.domain().label(fp.second[i])));
  }
  return relabeled(fp.graph, std::move(labels));
}

}  // namespace bundleforge
