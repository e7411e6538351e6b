#include "bundleforge/catalog.hpp"

#include <algorithm>

#include "bundleforge/products.hpp"

namespace bundleforge {

namespace {

std::vector<Label> numbered(std::size_t n) {
  std::vector<Label> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return labels;
}

Graph numbered_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Graph::IndexEdge> idx;
  for (auto [a, b] : edges) idx.emplace_back(a - 1, b - 1);
  return Graph::from_indices(numbered(n), idx);
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == g.order();
}

}  // namespace

Graph complete_graph(std::size_t n) {
  std::vector<Graph::IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_indices(numbered(n), edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Graph::IndexEdge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_indices(numbered(n), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Graph::IndexEdge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_indices(numbered(n), edges);
}

Graph empty_graph(std::size_t n) { return Graph::from_indices(numbered(n), {}); }

Graph star_graph(std::size_t leaves) {
  std::vector<Graph::IndexEdge> edges;
  for (std::size_t i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph::from_indices(numbered(leaves + 1), edges);
}

std::string describe(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  const auto deg = sorted_degrees(g);
  auto regular = [&](std::size_t d) {
    return std::all_of(deg.begin(), deg.end(), [d](std::size_t x) { return x == d; });
  };
  const std::string size = std::to_string(n);
  if (n == 1) return "K1";
  if (m == 0) return size + "K1";
  if (n >= 3 && regular(2) && connected(g)) return "C" + size;
  if (m == n * (n - 1) / 2) return "K" + size;
  if (m + 1 == n && connected(g) && deg.back() <= 2) return "P" + size;
  return "graph(" + size + "," + std::to_string(m) + ")";
}

Graph mobius_ladder_m3() {
  return numbered_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 1}, {1, 4}, {2, 5}, {3, 6}});
}

Graph c6k2_numbered() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 6; ++i) {
    edges.emplace_back(i, i % 6 + 1);
    edges.emplace_back(i + 6, i % 6 + 7);
    edges.emplace_back(i, i + 6);
  }
  return numbered_graph(12, edges);
}

Graph m62() {
  std::vector<std::pair<int, int>> edges{{7, 8}, {2, 9},  {9, 10}, {10, 11}, {11, 6}, {12, 7},
                                         {1, 2}, {8, 3},  {3, 4},  {4, 5},   {5, 12}, {6, 1}};
  for (int i = 1; i <= 6; ++i) edges.emplace_back(i, i + 6);
  return numbered_graph(12, edges);
}

GraphMorphism mod3_projection(const Graph& domain) {
  return GraphMorphism::from_function(domain, cycle_graph(3), [](const Label& x) {
    return std::to_string(std::stoi(x) % 3 + 1);
  });
}

GraphMorphism covering_c6_c3() { return mod3_projection(cycle_graph(6)); }
GraphMorphism m3_projection() { return mod3_projection(mobius_ladder_m3()); }

GraphMorphism fold12_projection(const Graph& domain) {
  return GraphMorphism::from_function(domain, cycle_graph(6), [](const Label& x) {
    int v = std::stoi(x);
    return std::to_string(v <= 6 ? v : v - 6);
  });
}

GraphMorphism edge_inclusion_p2_c6() {
  return GraphMorphism::from_labels(path_graph(2), cycle_graph(6), {{"1", "1"}, {"2", "2"}});
}

FiberVoltage m3_voltage() {
  FiberVoltage fv(cycle_graph(3), complete_graph(2));
  fv.set("1", "3", Perm{1, 0});
  return fv;
}

GraphBundle prism_bundle() {
  Graph total = cartesian_product(complete_graph(2), cycle_graph(3));
  std::vector<std::size_t> proj(total.order());
  for (std::size_t x = 0; x < total.order(); ++x) proj[x] = x % 3;
  return verify_bundle(total, GraphMorphism(total, cycle_graph(3), proj), complete_graph(2));
}

GraphBundle m3_bundle() { return verify_bundle(mobius_ladder_m3(), m3_projection(), complete_graph(2)); }

GraphBundle c6k2_bundle() {
  Graph total = c6k2_numbered();
  return verify_bundle(total, fold12_projection(total), complete_graph(2));
}

GraphBundle m62_bundle() {
  Graph total = m62();
  return verify_bundle(total, fold12_projection(total), complete_graph(2));
}

Perm m62_witness() { return from_cycles(12, {{2, 8}, {3, 9}, {4, 10}}); }

GroupHom phi_z2z3_z3() {
  return GroupHom::from_function(direct_product(cyclic(2), cyclic(3)), cyclic(3), [](const Label& x) {
    return x.substr(3, 1);
  });
}

GroupHom phi_z6_z3() {
  return GroupHom::from_function(cyclic(6), cyclic(3), [](const Label& x) {
    return std::to_string(std::stoi(x) % 3);
  });
}

}  // namespace bundleforge
