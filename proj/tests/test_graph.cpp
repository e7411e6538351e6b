#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "bundleforge/catalog.hpp"
#include "bundleforge/error.hpp"
#include "bundleforge/graph.hpp"
#include "bundleforge/perm.hpp"
#include "support.hpp"

using namespace bundleforge;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("graph construction") {
  Graph k3({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}, {"1", "3"}});
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(k3 == complete_graph(3));

  Graph c6 = cycle_graph(6);
  CHECK(c6.order() == 6);
  CHECK(c6.size() == 6);
  CHECK(c6.adjacent(c6.index_of("6"), c6.index_of("1")));

  Graph one({"a"}, {});
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);

  // repeated edges merge
  Graph k2({"1", "2"}, {{"1", "2"}, {"2", "1"}});
  CHECK(k2.size() == 1);
}

TEST_CASE("graph construction errors") {
  CHECK(code_of([] { Graph({"1", "1"}, {}); }) == ErrorCode::DuplicateVertex);
  CHECK(code_of([] { Graph({"1", "2"}, {{"1", "1"}}); }) == ErrorCode::LoopEdge);
  CHECK(code_of([] { Graph({"1", "2"}, {{"1", "3"}}); }) == ErrorCode::UnknownEndpoint);
  CHECK(code_of([] { cycle_graph(3).index_of("9"); }) == ErrorCode::UnknownVertex);
}

TEST_CASE("validate_morphism") {
  Graph k3 = complete_graph(3);
  CHECK(validate_morphism(identity_morphism(k3)).valid);
  CHECK(validate_morphism(covering_c6_c3()).valid);

  Graph k2 = complete_graph(2);
  GraphMorphism collapse(k2, k2, {0, 0});
  CHECK(validate_morphism(collapse).valid);
  CHECK_FALSE(preserves_edges(collapse));

  // 1 -> 1, 2 -> 1, 3 -> 2 on P3 into 2K1 maps the edge {2,3} to a non-edge
  GraphMorphism bad(path_graph(3), empty_graph(2), {0, 0, 1});
  auto check = validate_morphism(bad);
  CHECK_FALSE(check.valid);
  REQUIRE(check.violations.size() == 1);
  CHECK(check.violations[0] == std::pair<Label, Label>{"2", "3"});
  CHECK(code_of([&] { preserves_edges(bad); }) == ErrorCode::NotAMorphism);
}

TEST_CASE("preserves_edges and surjectivity") {
  CHECK(preserves_edges(identity_morphism(cycle_graph(6))));
  CHECK(preserves_edges(covering_c6_c3()));
  // derived: every C6 edge {i, i+1} maps to {i mod 3 + 1, (i+1) mod 3 + 1}, an edge of C3
  GraphMorphism p = covering_c6_c3();
  for (auto [a, b] : p.domain().edges()) CHECK(p.codomain().adjacent(p(a), p(b)));
  CHECK(is_surjective(p));
  CHECK_FALSE(is_surjective(GraphMorphism(complete_graph(2), complete_graph(2), {0, 0})));
}

TEST_CASE("induced subgraphs and neighbourhoods") {
  CHECK(induced_subgraph(complete_graph(3), {"1", "2"}) == complete_graph(2));
  Graph odd = induced_subgraph(cycle_graph(6), {"1", "3", "5"});
  CHECK(odd.order() == 3);
  CHECK(odd.size() == 0);
  CHECK(induced_subgraph(cycle_graph(5), cycle_graph(5).vertices()) == cycle_graph(5));

  Graph n = neighborhood(complete_graph(3), "1");
  CHECK(n.order() == 3);
  CHECK(n.size() == 2);
  CHECK_FALSE(n.adjacent(n.index_of("2"), n.index_of("3")));

  Graph c = neighborhood(cycle_graph(6), "1");
  CHECK(c.order() == 3);
  CHECK(c.size() == 2);
  CHECK(c.adjacent(c.index_of("1"), c.index_of("6")));
  CHECK(c.adjacent(c.index_of("1"), c.index_of("2")));

  CHECK(neighborhood(Graph({"v"}, {}), "v").order() == 1);
}

TEST_CASE("fibers") {
  Graph f = fiber(covering_c6_c3(), "1");
  CHECK(f.vertices() == std::vector<Label>{"3", "6"});
  CHECK(f.size() == 0);

  Graph one = fiber(identity_morphism(complete_graph(3)), "2");
  CHECK(one.vertices() == std::vector<Label>{"2"});

  // the rung {3,6} lies over 1, so the fiber is K2
  Graph m = fiber(m3_projection(), "1");
  CHECK(m.vertices() == std::vector<Label>{"3", "6"});
  CHECK(m.size() == 1);
}

TEST_CASE("find_isomorphism") {
  auto w = find_isomorphism(c6k2_numbered(), m62());
  REQUIRE(w);
  CHECK(is_isomorphism(c6k2_numbered(), m62(), *w));
  CHECK(is_isomorphism(c6k2_numbered(), m62(), m62_witness()));

  auto k = find_isomorphism(complete_graph(3), cycle_graph(3));
  REQUIRE(k);
  CHECK(is_isomorphism(complete_graph(3), cycle_graph(3), *k));

  CHECK_FALSE(find_isomorphism(complete_graph(2), empty_graph(2)));
  // two triangles: same order, size and degrees as C6
  Graph two_c3 = Graph::from_indices({"1", "2", "3", "4", "5", "6"}, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(find_isomorphism(cycle_graph(6), two_c3));
}

TEST_CASE("find_isomorphism budget") {
  CHECK(code_of([] { find_isomorphism(cycle_graph(8), cycle_graph(8), 2); }) == ErrorCode::SearchBudgetExceeded);
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(complete_graph(2)).size() == 2);
  CHECK(automorphisms(complete_graph(3)).size() == 6);
  CHECK(automorphisms(empty_graph(2)).size() == 2);
  CHECK(automorphisms(cycle_graph(6)).size() == 12);
  CHECK(is_identity(automorphisms(cycle_graph(5)).front()));
  CHECK(code_of([] { automorphisms(cycle_graph(11)); }) == ErrorCode::EnumerationBoundExceeded);

  // derived: brute force over all permutations
  for (const Graph& g : {complete_graph(3), cycle_graph(5), path_graph(4), star_graph(3), mobius_ladder_m3()}) {
    CHECK(automorphisms(g).size() == oracle::brute_automorphism_count(g));
  }
}

// Invariants

TEST_CASE("property: composition of morphisms is a morphism") {
  std::mt19937 rng(7);
  std::vector<Graph> pool{complete_graph(2), complete_graph(3), cycle_graph(4), path_graph(3), cycle_graph(6)};
  int composed = 0;
  for (int trial = 0; trial < 400 && composed < 60; ++trial) {
    const Graph& a = pool[rng() % pool.size()];
    const Graph& b = pool[rng() % pool.size()];
    const Graph& c = pool[rng() % pool.size()];
    auto random_map = [&](const Graph& d, const Graph& cd) {
      std::vector<std::size_t> m(d.order());
      for (auto& x : m) x = rng() % cd.order();
      return GraphMorphism(d, cd, m);
    };
    GraphMorphism f = random_map(a, b);
    GraphMorphism g = random_map(b, c);
    if (!validate_morphism(f).valid || !validate_morphism(g).valid) continue;
    ++composed;
    CHECK(validate_morphism(compose(g, f)).valid);
  }
  CHECK(composed >= 20);
}

TEST_CASE("property: isomorphic graphs share order, size and degrees") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 5;
    std::vector<Graph::IndexEdge> e1, e2;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rng() % 2) e1.emplace_back(i, j);
        if (rng() % 2) e2.emplace_back(i, j);
      }
    std::vector<Label> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    Graph g = Graph::from_indices(labels, e1);
    Graph h = Graph::from_indices(labels, e2);
    auto iso = find_isomorphism(g, h);
    CHECK(iso.has_value() == oracle::brute_isomorphic(g, h));
    if (iso) {
      CHECK(g.size() == h.size());
      CHECK(sorted_degrees(g) == sorted_degrees(h));
      CHECK(is_isomorphism(g, h, *iso));
    }
  }
}

TEST_CASE("property: automorphisms form a group") {
  for (const Graph& g : {cycle_graph(6), mobius_ladder_m3(), complete_graph(4), star_graph(3)}) {
    auto auts = automorphisms(g);
    std::set<Perm> set(auts.begin(), auts.end());
    for (const Perm& a : auts) {
      CHECK(set.count(inverse(a)) == 1);
      for (const Perm& b : auts) CHECK(set.count(compose(a, b)) == 1);
    }
  }
}

TEST_CASE("property: fibers partition the domain") {
  for (const GraphMorphism& f : {covering_c6_c3(), m3_projection(), fold12_projection(m62())}) {
    std::vector<int> seen(f.domain().order(), 0);
    for (std::size_t v = 0; v < f.codomain().order(); ++v)
      for (std::size_t x : fiber_indices(f, v)) ++seen[x];
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("permutations") {
  Perm p = from_cycles(4, {{0, 1, 2}});
  CHECK(p == Perm{1, 2, 0, 3});
  CHECK(compose(p, inverse(p)) == identity_perm(4));
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(Perm{0, 0}));
  CHECK(to_cycle_string(p) == "(0 1 2)");
}
