#include "bundleforge/products.hpp"

#include <string>

#include "bundleforge/error.hpp"

namespace bundleforge {

Label pair_label(const Label& a, const Label& b) { return "(" + a + "," + b + ")"; }

namespace {

Graph product(const Graph& g1, const Graph& g2, bool strong) {
  const std::size_t n2 = g2.order();
  std::vector<Label> labels;
  labels.reserve(g1.order() * n2);
  for (const auto& a : g1.vertices())
    for (const auto& b : g2.vertices()) labels.push_back(pair_label(a, b));

  std::vector<Graph::IndexEdge> edges;
  for (auto [x, y] : g1.edges())
    for (std::size_t j = 0; j < n2; ++j) edges.emplace_back(x * n2 + j, y * n2 + j);
  for (std::size_t i = 0; i < g1.order(); ++i)
    for (auto [x, y] : g2.edges()) edges.emplace_back(i * n2 + x, i * n2 + y);
  if (strong) {
    for (auto [x, y] : g1.edges())
      for (auto [u, v] : g2.edges()) {
        edges.emplace_back(x * n2 + u, y * n2 + v);
        edges.emplace_back(x * n2 + v, y * n2 + u);
      }
  }
  return Graph::from_indices(std::move(labels), edges);
}

Spectrum combine(const Spectrum& s1, const Spectrum& s2, bool strong) {
  std::vector<double> out;
  out.reserve(s1.size() * s2.size());
  for (double l : s1.values)
    for (double m : s2.values) out.push_back(strong ? l + m + l * m : l + m);
  return make_spectrum(std::move(out));
}

std::string edge_name(const Graph& g, std::size_t v, std::size_t w) {
  return "(" + g.label(v) + "," + g.label(w) + ")";
}

}  // namespace

Graph cartesian_product(const Graph& g1, const Graph& g2) { return product(g1, g2, false); }
Graph strong_product(const Graph& g1, const Graph& g2) { return product(g1, g2, true); }

Spectrum cartesian_spectrum(const Spectrum& s1, const Spectrum& s2) { return combine(s1, s2, false); }
Spectrum strong_spectrum(const Spectrum& s1, const Spectrum& s2) { return combine(s1, s2, true); }

Covering verify_kfold_covering(const GraphMorphism& p, std::size_t k) {
  if (!is_surjective(p)) throw Error(ErrorCode::NotSurjective, "projection misses a base vertex");
  const Graph& total = p.domain();
  const Graph& base = p.codomain();
  for (std::size_t v = 0; v < base.order(); ++v) {
    if (fiber_indices(p, v).size() != k) {
      throw Error(ErrorCode::FiberSizeMismatch, base.label(v));
    }
  }
  Covering c{total, p, k, std::vector<std::map<std::size_t, std::size_t>>(total.order())};
  for (std::size_t x = 0; x < total.order(); ++x) {
    const std::size_t v = p(x);
    auto fail = [&] {
      throw Error(ErrorCode::NoLifting, "(" + base.label(v) + "," + total.label(x) + ")");
    };
    if (total.degree(x) != base.degree(v)) fail();
    for (std::size_t y : total.neighbors(x)) {
      const std::size_t w = p(y);
      if (w == v || !base.adjacent(v, w)) fail();
      if (!c.lift[x].emplace(w, y).second) fail();
    }
  }
  return c;
}

void CoveringVoltage::set(std::size_t v, std::size_t w, const Perm& sigma) {
  if (v >= base_.order() || w >= base_.order() || !base_.adjacent(v, w)) {
    throw Error(ErrorCode::InvalidVoltage, "not a base edge");
  }
  if (sigma.size() != k_ || !is_permutation(sigma)) {
    throw Error(ErrorCode::InvalidVoltage, "voltage on " + edge_name(base_, v, w) + " is not a permutation");
  }
  sigma_[{v, w}] = sigma;
  sigma_[{w, v}] = inverse(sigma);
}

const Perm& CoveringVoltage::at(std::size_t v, std::size_t w) const {
  auto it = sigma_.find({v, w});
  if (it == sigma_.end()) throw Error(ErrorCode::InvalidVoltage, "no voltage on " + edge_name(base_, v, w));
  return it->second;
}

void CoveringVoltage::validate() const {
  if (sigma_.size() != 2 * base_.size()) throw Error(ErrorCode::InvalidVoltage, "voltage not total");
  for (auto [v, w] : base_.edges()) {
    if (compose(at(w, v), at(v, w)) != identity_perm(k_)) {
      throw Error(ErrorCode::InvalidVoltage, "inverse law fails on " + edge_name(base_, v, w));
    }
  }
}

CoveringVoltage covering_voltage(const Covering& c, std::vector<std::size_t> labeling) {
  const Graph& base = c.base();
  if (labeling.empty()) {
    labeling.assign(c.total.order(), 0);
    for (std::size_t v = 0; v < base.order(); ++v) {
      auto fib = fiber_indices(c.projection, v);
      for (std::size_t i = 0; i < fib.size(); ++i) labeling[fib[i]] = i;
    }
  }
  if (labeling.size() != c.total.order()) throw Error(ErrorCode::ShapeMismatch, "labeling size");
  CoveringVoltage cv(base, c.k);
  for (auto [v, w] : base.edges()) {
    Perm sigma(c.k);
    for (std::size_t x : fiber_indices(c.projection, v)) {
      sigma[labeling[x]] = labeling[c.lift[x].at(w)];
    }
    cv.set(v, w, sigma);
  }
  return cv;
}

Graph covering_graph(const CoveringVoltage& cv) {
  cv.validate();
  const Graph& base = cv.base();
  const std::size_t k = cv.k();
  std::vector<Label> labels;
  for (const auto& v : base.vertices())
    for (std::size_t i = 1; i <= k; ++i) labels.push_back(pair_label(v, std::to_string(i)));
  std::vector<Graph::IndexEdge> edges;
  for (auto [v, w] : base.edges()) {
    const Perm& s = cv.at(v, w);
    for (std::size_t i = 0; i < k; ++i) edges.emplace_back(v * k + i, w * k + s[i]);
  }
  return Graph::from_indices(std::move(labels), edges);
}

Matrix covering_adjacency(const CoveringVoltage& cv) {
  cv.validate();
  const Graph& base = cv.base();
  std::map<Perm, Matrix> parts;
  for (std::size_t v = 0; v < base.order(); ++v) {
    for (std::size_t w : base.neighbors(v)) {
      auto it = parts.try_emplace(cv.at(w, v), base.order(), base.order()).first;
      it->second(v, w) = 1.0;
    }
  }
  const std::size_t n = base.order() * cv.k();
  Matrix a(n, n);
  for (const auto& [psi, m] : parts) a += kronecker(m, perm_matrix(psi));
  return a;
}

}  // namespace bundleforge
