#include "bundleforge/bundle.hpp"

#include <algorithm>
#include <deque>

#include "bundleforge/error.hpp"

namespace bundleforge {

// ---------------------------------------------------------------------------
// AutomorphismTable
// ---------------------------------------------------------------------------

AutomorphismTable::AutomorphismTable(const Graph& fiber, std::size_t max_vertices)
    : perms_(automorphisms(fiber, max_vertices)) {
  const std::size_t n = perms_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(perms_[i], i);
  mul_.resize(n * n);
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul_[a * n + b] = index_.at(compose(perms_[a], perms_[b]));
    inv_[a] = index_.at(inverse(perms_[a]));
  }
}

std::size_t AutomorphismTable::index(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) throw Error(ErrorCode::InvalidVoltage, "not a fiber automorphism");
  return it->second;
}

// ---------------------------------------------------------------------------
// FiberVoltage
// ---------------------------------------------------------------------------

FiberVoltage::FiberVoltage(Graph base, Graph fiber) : base_(std::move(base)), fiber_(std::move(fiber)) {
  const Perm id = identity_perm(fiber_.order());
  for (auto [v, w] : base_.edges()) {
    phi_[{v, w}] = id;
    phi_[{w, v}] = id;
  }
}

void FiberVoltage::set(std::size_t v, std::size_t w, const Perm& phi) {
  if (v >= base_.order() || w >= base_.order() || !base_.adjacent(v, w)) {
    throw Error(ErrorCode::InvalidVoltage, "not a base edge");
  }
  if (phi.size() != fiber_.order() || !is_permutation(phi) || !is_automorphism(fiber_, phi)) {
    throw Error(ErrorCode::InvalidVoltage,
                "voltage on (" + base_.label(v) + "," + base_.label(w) + ") is not a fiber automorphism");
  }
  phi_[{v, w}] = phi;
  phi_[{w, v}] = inverse(phi);
}

void FiberVoltage::set(const Label& v, const Label& w, const Perm& phi) {
  set(base_.index_of(v), base_.index_of(w), phi);
}

const Perm& FiberVoltage::at(std::size_t v, std::size_t w) const {
  auto it = phi_.find({v, w});
  if (it == phi_.end()) throw Error(ErrorCode::InvalidVoltage, "no base edge");
  return it->second;
}

// ---------------------------------------------------------------------------
// Bundles
// ---------------------------------------------------------------------------

std::vector<std::size_t> GraphBundle::transition(std::size_t v, std::size_t w) const {
  std::vector<std::size_t> out;
  out.reserve(point[v].size());
  for (std::size_t x : point[v]) out.push_back(lift[x].at(w));
  return out;
}

namespace {

GraphBundle assemble(const Graph& total, const GraphMorphism& p, const Graph& fiber,
                     std::vector<std::size_t> coord) {
  const Graph& base = p.codomain();
  GraphBundle b{total, p, fiber, std::move(coord),
                std::vector<std::vector<std::size_t>>(base.order(), std::vector<std::size_t>(fiber.order())),
                std::vector<std::map<std::size_t, std::size_t>>(total.order())};
  for (std::size_t x = 0; x < total.order(); ++x) {
    b.point[p(x)][b.fiber_coord[x]] = x;
    for (std::size_t y : total.neighbors(x)) {
      if (p(y) != p(x)) b.lift[x].emplace(p(y), y);
    }
  }
  return b;
}

std::string edge_name(const Graph& g, std::size_t v, std::size_t w) {
  return "(" + g.label(v) + "," + g.label(w) + ")";
}

}  // namespace

GraphBundle voltage_bundle(const FiberVoltage& fv) {
  const Graph& base = fv.base();
  const Graph& fiber = fv.fiber();
  const std::size_t k = fiber.order();
  std::vector<Label> labels;
  labels.reserve(base.order() * k);
  for (const auto& v : base.vertices())
    for (const auto& f : fiber.vertices()) labels.push_back(pair_label(v, f));

  std::vector<Graph::IndexEdge> edges;
  for (auto [v, w] : base.edges()) {
    const Perm& phi = fv.at(v, w);
    for (std::size_t f = 0; f < k; ++f) edges.emplace_back(v * k + f, w * k + phi[f]);
  }
  for (std::size_t v = 0; v < base.order(); ++v)
    for (auto [f, g] : fiber.edges()) edges.emplace_back(v * k + f, v * k + g);
  Graph total = Graph::from_indices(std::move(labels), edges);

  std::vector<std::size_t> proj(total.order()), coord(total.order());
  for (std::size_t x = 0; x < total.order(); ++x) {
    proj[x] = x / k;
    coord[x] = x % k;
  }
  GraphMorphism p(total, base, std::move(proj));
  return assemble(total, p, fiber, std::move(coord));
}

void check_local_triviality(const GraphMorphism& p, const Graph& fiber, std::uint64_t budget) {
  const Graph& base = p.codomain();
  const Graph model = cartesian_product(Graph({"0", "1"}, {{"0", "1"}}), fiber);
  for (auto [v, w] : base.edges()) {
    auto part = fiber_indices(p, v);
    auto other = fiber_indices(p, w);
    part.insert(part.end(), other.begin(), other.end());
    std::sort(part.begin(), part.end());
    Graph sub = induced_subgraph_by_index(p.domain(), part);
    if (!find_isomorphism(sub, model, budget)) {
      throw Error(ErrorCode::LocalTrivialityFails, edge_name(base, v, w));
    }
  }
}

GraphBundle verify_bundle(const Graph& total, const GraphMorphism& p, const Graph& fiber,
                          const std::optional<std::vector<std::size_t>>& coord_hint,
                          std::uint64_t budget) {
  if (!(p.domain() == total)) throw Error(ErrorCode::ShapeMismatch, "projection domain is not the total space");
  auto check = validate_morphism(p);
  if (!check.valid) {
    const auto& [a, b] = check.violations.front();
    throw Error(ErrorCode::NotAMorphism, "{" + a + "," + b + "}");
  }
  if (!is_surjective(p)) throw Error(ErrorCode::NotSurjective, "projection misses a base vertex");
  if (coord_hint && coord_hint->size() != total.order()) {
    throw Error(ErrorCode::ShapeMismatch, "coordinate hint size");
  }

  const Graph& base = p.codomain();
  const std::size_t k = fiber.order();

  // Condition 1: every fiber is a copy of F; this also fixes sigma_v.
  std::vector<std::size_t> coord(total.order());
  for (std::size_t v = 0; v < base.order(); ++v) {
    auto fib = fiber_indices(p, v);
    if (fib.size() != k) throw Error(ErrorCode::FiberNotIsomorphic, base.label(v));
    Graph sub = induced_subgraph_by_index(total, fib);
    std::vector<std::size_t> sigma;
    if (coord_hint) {
      for (std::size_t x : fib) sigma.push_back((*coord_hint)[x]);
      if (!is_isomorphism(sub, fiber, sigma)) throw Error(ErrorCode::FiberNotIsomorphic, base.label(v));
    } else if (is_isomorphism(sub, fiber, identity_perm(k))) {
      sigma = identity_perm(k);
    } else {
      auto found = find_isomorphism(sub, fiber, budget);
      if (!found) throw Error(ErrorCode::FiberNotIsomorphic, base.label(v));
      sigma = *found;
    }
    for (std::size_t i = 0; i < k; ++i) coord[fib[i]] = sigma[i];
  }

  // Conditions 2 and 3.
  std::optional<Error> definition_error;
  try {
    std::vector<Graph::IndexEdge> cross;
    for (auto [x, y] : total.edges()) {
      if (p(x) != p(y)) cross.emplace_back(x, y);
    }
    Graph stripped = Graph::from_indices(total.vertices(), cross);
    try {
      verify_kfold_covering(GraphMorphism(stripped, base, p.map()), k);
    } catch (const Error& e) {
      throw Error(ErrorCode::NotACovering, e.what());
    }
    GraphBundle tmp = assemble(total, p, fiber, coord);
    for (std::size_t v = 0; v < base.order(); ++v) {
      for (std::size_t w : base.neighbors(v)) {
        auto psi = tmp.transition(v, w);
        for (auto [f, g] : fiber.edges()) {
          if (!total.adjacent(psi[f], psi[g])) throw Error(ErrorCode::TransitionNotIso, edge_name(base, v, w));
        }
        for (std::size_t f = 0; f < k; ++f)
          for (std::size_t g = f + 1; g < k; ++g)
            if (total.adjacent(psi[f], psi[g]) && !fiber.adjacent(f, g)) {
              throw Error(ErrorCode::TransitionNotIso, edge_name(base, v, w));
            }
      }
    }
  } catch (const Error& e) {
    definition_error = e;
  }

  std::optional<Error> local_error;
  try {
    check_local_triviality(p, fiber, budget);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::LocalTrivialityFails) throw;
    local_error = e;
  }

  if (definition_error && local_error) {
    std::string msg = definition_error->what();
    throw Error(definition_error->code(), msg.substr(msg.find(": ") + 2));
  }
  if (definition_error || local_error) {
    throw Error(ErrorCode::Internal, std::string("bundle characterizations disagree: ") +
                                         (definition_error ? definition_error->what() : local_error->what()));
  }
  return assemble(total, p, fiber, std::move(coord));
}

FiberVoltage bundle_to_voltage(const GraphBundle& b) {
  FiberVoltage fv(b.base(), b.fiber);
  const std::size_t k = b.fiber.order();
  for (auto [v, w] : b.base().edges()) {
    Perm phi(k);
    for (std::size_t f = 0; f < k; ++f) phi[f] = b.fiber_coord[b.lift[b.point[v][f]].at(w)];
    fv.set(v, w, phi);
  }
  return fv;
}

IndexedVoltage index_voltage(const FiberVoltage& fv, const AutomorphismTable& aut) {
  const Graph& base = fv.base();
  IndexedVoltage iv;
  iv.at.resize(base.order());
  for (std::size_t v = 0; v < base.order(); ++v) {
    for (std::size_t w : base.neighbors(v)) iv.at[v].push_back(aut.index(fv.at(v, w)));
  }
  return iv;
}

namespace {

std::vector<std::vector<std::size_t>> components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Propagates the gauge from comp[0] = root along BFS order (comp is BFS
// ordered) and checks every edge. Writes into gauge; false on conflict.
bool propagate(const Graph& base, const AutomorphismTable& aut, const IndexedVoltage& phi1,
               const IndexedVoltage& phi2, const std::vector<std::size_t>& comp, std::size_t root,
               std::vector<std::size_t>& gauge, std::vector<char>& set) {
  for (std::size_t v : comp) set[v] = 0;
  gauge[comp[0]] = root;
  set[comp[0]] = 1;
  for (std::size_t v : comp) {
    const auto& nbrs = base.neighbors(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const std::size_t w = nbrs[k];
      const std::size_t want = aut.mul(aut.mul(phi2.at[v][k], gauge[v]), aut.inv(phi1.at[v][k]));
      if (!set[w]) {
        gauge[w] = want;
        set[w] = 1;
      } else if (gauge[w] != want) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<std::size_t>> solve_gauge(const Graph& base, const AutomorphismTable& aut,
                                                    const IndexedVoltage& phi1,
                                                    const IndexedVoltage& phi2) {
  std::vector<std::size_t> gauge(base.order(), 0);
  std::vector<char> set(base.order(), 0);
  for (const auto& comp : components(base)) {
    bool ok = false;
    for (std::size_t r = 0; r < aut.size() && !ok; ++r) {
      ok = propagate(base, aut, phi1, phi2, comp, r, gauge, set);
    }
    if (!ok) return std::nullopt;
  }
  return gauge;
}

bool is_equivalence(const GraphBundle& b1, const GraphBundle& b2, const std::vector<std::size_t>& map) {
  if (map.size() != b1.total.order()) return false;
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] >= b2.total.order() || b2.projection(map[x]) != b1.projection(x)) return false;
  }
  return is_isomorphism(b1.total, b2.total, map);
}

std::optional<std::vector<std::size_t>> bundles_equivalent(const GraphBundle& b1, const GraphBundle& b2,
                                                           std::size_t max_fiber) {
  if (!(b1.base() == b2.base())) throw Error(ErrorCode::BaseMismatch, "bundles live over different bases");
  std::vector<std::size_t> tau = identity_perm(b1.fiber.order());
  if (!(b1.fiber == b2.fiber)) {
    auto found = find_isomorphism(b1.fiber, b2.fiber);
    if (!found) throw Error(ErrorCode::FiberMismatch, "fibers are not isomorphic");
    tau = *found;
  }
  const Graph& base = b1.base();
  const Perm tau_inv = inverse(tau);

  FiberVoltage v1 = bundle_to_voltage(b1);
  FiberVoltage v2 = bundle_to_voltage(b2);
  FiberVoltage moved(base, b1.fiber);
  for (auto [v, w] : base.edges()) moved.set(v, w, compose(tau_inv, compose(v2.at(v, w), tau)));

  AutomorphismTable aut(b1.fiber, max_fiber);
  IndexedVoltage phi1 = index_voltage(v1, aut);
  IndexedVoltage phi2 = index_voltage(moved, aut);

  std::vector<std::size_t> result(b1.total.order());
  std::vector<std::size_t> gauge(base.order(), 0);
  std::vector<char> set(base.order(), 0);
  for (const auto& comp : components(base)) {
    std::vector<std::size_t> owned;
    for (std::size_t v : comp) owned.insert(owned.end(), b1.point[v].begin(), b1.point[v].end());
    std::sort(owned.begin(), owned.end());

    std::optional<std::vector<std::size_t>> best;
    for (std::size_t r = 0; r < aut.size(); ++r) {
      if (!propagate(base, aut, phi1, phi2, comp, r, gauge, set)) continue;
      std::vector<std::size_t> candidate;
      candidate.reserve(owned.size());
      for (std::size_t x : owned) {
        const std::size_t v = b1.projection(x);
        candidate.push_back(b2.point[v][tau[aut.perm(gauge[v])[b1.fiber_coord[x]]]]);
      }
      if (!best || candidate < *best) best = std::move(candidate);
    }
    if (!best) return std::nullopt;
    for (std::size_t i = 0; i < owned.size(); ++i) result[owned[i]] = (*best)[i];
  }
  if (!is_equivalence(b1, b2, result)) throw Error(ErrorCode::Internal, "gauge solution is not an isomorphism");
  return result;
}

GraphBundle trivial_bundle(const Graph& base, const Graph& fiber) {
  return voltage_bundle(FiberVoltage(base, fiber));
}

GraphBundle identity_bundle(const Graph& base) {
  Graph point({"1"}, {});
  return assemble(base, identity_morphism(base), point, std::vector<std::size_t>(base.order(), 0));
}

bool is_trivial(const GraphBundle& b) {
  return bundles_equivalent(b, trivial_bundle(b.base(), b.fiber)).has_value();
}

Matrix bundle_adjacency(const FiberVoltage& fv, std::size_t max_fiber) {
  const Graph& base = fv.base();
  const Graph& fiber = fv.fiber();
  const std::size_t n = base.order();
  Matrix a(n * fiber.order(), n * fiber.order());
  for (const Perm& psi : automorphisms(fiber, max_fiber)) {
    Matrix part(n, n);
    for (auto [v, w] : base.edges()) {
      if (fv.at(w, v) == psi) part(v, w) = 1.0;
      if (fv.at(v, w) == psi) part(w, v) = 1.0;
    }
    a += kronecker(part, perm_matrix(psi));
  }
  a += kronecker(Matrix::identity(n), adjacency_matrix(fiber));
  return a;
}

}  // namespace bundleforge
