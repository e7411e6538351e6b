#include "bundleforge/cayley.hpp"

#include <algorithm>
#include <set>

#include "bundleforge/error.hpp"
#include "bundleforge/pullback.hpp"

namespace bundleforge {

NormalizedGenerators normalize_generators(const FiniteGroup& g, const std::vector<std::size_t>& raw) {
  NormalizedGenerators out;
  std::set<std::size_t> s;
  for (std::size_t x : raw) {
    if (x == g.identity()) {
      out.dropped_identity = true;
    } else {
      s.insert(x);
    }
  }
  std::set<std::size_t> closed = s;
  for (std::size_t x : s) {
    if (!s.count(g.inv(x)) && closed.insert(g.inv(x)).second) out.added_inverses.push_back(g.inv(x));
  }
  std::sort(out.added_inverses.begin(), out.added_inverses.end());
  out.elements.assign(closed.begin(), closed.end());
  return out;
}

void check_generator_system(const FiniteGroup& g, const std::vector<std::size_t>& s,
                            const std::vector<std::size_t>& within) {
  std::vector<std::size_t> target = within;
  if (target.empty()) {
    for (std::size_t i = 0; i < g.order(); ++i) target.push_back(i);
  }
  std::sort(target.begin(), target.end());
  for (std::size_t x : s) {
    if (x >= g.order()) throw Error(ErrorCode::InvalidGeneratorSystem, "element out of range");
    if (x == g.identity()) throw Error(ErrorCode::InvalidGeneratorSystem, "contains the identity");
    if (std::find(s.begin(), s.end(), g.inv(x)) == s.end()) {
      throw Error(ErrorCode::InvalidGeneratorSystem, "not symmetric: missing inverse of " + g.label(x));
    }
    if (!std::binary_search(target.begin(), target.end(), x)) {
      throw Error(ErrorCode::InvalidGeneratorSystem, g.label(x) + " lies outside the subgroup");
    }
  }
  if (generated_subgroup(g, s) != target) throw Error(ErrorCode::InvalidGeneratorSystem, "does not generate");
}

Graph cayley_graph(const FiniteGroup& g, const std::vector<std::size_t>& s) {
  check_generator_system(g, s);
  std::vector<Graph::IndexEdge> edges;
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::size_t t : s) edges.emplace_back(x, g.mul(x, t));
  return Graph::from_indices(g.elements(), edges);
}

bool is_admissible(const FiniteGroup& a, const std::vector<std::size_t>& s0) {
  std::set<std::size_t> set(s0.begin(), s0.end());
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t s : s0)
      if (!set.count(a.mul(a.mul(x, s), a.inv(x)))) return false;
  return true;
}

std::vector<std::size_t> transversal_section(const GroupHom& phi, const std::vector<std::size_t>& s1) {
  const FiniteGroup& a = phi.domain();
  const FiniteGroup& b = phi.codomain();
  std::vector<std::size_t> sorted = s1;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::size_t, std::size_t> lift;
  for (std::size_t s : sorted) {
    if (lift.count(s)) continue;
    const bool involution = b.inv(s) == s;
    std::optional<std::size_t> chosen;
    for (std::size_t x = 0; x < a.order() && !chosen; ++x) {
      if (phi(x) != s) continue;
      if (involution && a.mul(x, x) != a.identity()) continue;
      chosen = x;
    }
    if (!chosen) {
      throw Error(ErrorCode::NoTransversalSection, "no " + std::string(involution ? "involutive " : "") +
                                                       "lift of " + b.label(s));
    }
    lift[s] = *chosen;
    if (!involution) lift[b.inv(s)] = a.inv(*chosen);
  }
  std::vector<std::size_t> out;
  for (std::size_t s : s1) out.push_back(lift.at(s));
  return out;
}

std::vector<std::size_t> induced_generators(const GroupHom& phi, const std::vector<std::size_t>& s0,
                                            const std::vector<std::size_t>& lift) {
  std::set<std::size_t> s(s0.begin(), s0.end());
  s.insert(lift.begin(), lift.end());
  std::vector<std::size_t> out(s.begin(), s.end());
  check_generator_system(phi.domain(), out);
  return out;
}

CayleyBundle cayley_bundle(const GroupHom& phi, const std::vector<std::size_t>& s1,
                           const std::vector<std::size_t>& s0) {
  if (!is_surjective(phi)) throw Error(ErrorCode::NotSurjective, "group map is not onto");
  const FiniteGroup& a = phi.domain();
  const FiniteGroup& b = phi.codomain();
  const auto ker = kernel(phi);
  check_generator_system(b, s1);
  check_generator_system(a, s0, ker);
  if (!is_admissible(a, s0)) throw Error(ErrorCode::InvalidGeneratorSystem, "S0 is not admissible");

  auto lift = transversal_section(phi, s1);
  auto s_phi = induced_generators(phi, s0, lift);

  FiniteGroup k = subgroup(a, ker);
  std::vector<std::size_t> s0_in_k;
  for (std::size_t x : s0) s0_in_k.push_back(k.index_of(a.label(x)));
  Graph total = cayley_graph(a, s_phi);
  Graph base = cayley_graph(b, s1);
  Graph fiber = cayley_graph(k, s0_in_k);
  GraphMorphism p(total, base, phi.map());
  return CayleyBundle{verify_bundle(total, p, fiber), std::move(s_phi), std::move(lift), std::move(k)};
}

InvarianceReport verify_invariance(const GroupHom& phi1, const GroupHom& phi2, const std::vector<std::size_t>& s1,
                                   const std::vector<std::size_t>& s01, const std::vector<std::size_t>& s02) {
  CayleyBundle c1 = cayley_bundle(phi1, s1, s01);
  CayleyBundle c2 = cayley_bundle(phi2, s1, s02);
  SubdirectGroup sg = subdirect_group(phi1, phi2);
  const FiniteGroup& a1 = phi1.domain();
  const FiniteGroup& a2 = phi2.domain();
  auto element = [&](std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < sg.pairs.size(); ++i)
      if (sg.pairs[i] == std::make_pair(x, y)) return i;
    throw Error(ErrorCode::Internal, "pair outside the subdirect group");
  };
  std::set<std::size_t> s;
  for (std::size_t x : s01) s.insert(element(x, a2.identity()));
  for (std::size_t y : s02) s.insert(element(a1.identity(), y));
  for (std::size_t i = 0; i < s1.size(); ++i) s.insert(element(c1.lift[i], c2.lift[i]));

  InvarianceReport out{false, sg, std::vector<std::size_t>(s.begin(), s.end()), Graph(),
                       subdirect_product(c1.bundle, c2.bundle)};
  out.cayley = cayley_graph(sg.e, out.s_phi);
  out.equal = same_labeled_graph(out.cayley, out.sum.total);
  return out;
}

}  // namespace bundleforge
