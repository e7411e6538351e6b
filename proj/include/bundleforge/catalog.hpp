#pragma once

#include <cstddef>
#include <string>

#include "bundleforge/bundle.hpp"
#include "bundleforge/graph.hpp"
#include "bundleforge/groups.hpp"
#include "bundleforge/perm.hpp"

namespace bundleforge {

// Named graphs on labels "1".."n".
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph empty_graph(std::size_t n);
/// Centre "1" joined to leaves "2".."leaves+1".
Graph star_graph(std::size_t leaves);

/// Short name such as "K2", "C3", "P3", "2K1" when the graph is one of the
/// named families; otherwise "graph(n,m)".
std::string describe(const Graph& g);

/// Mobius ladder: the 6-cycle 1..6 with rungs {1,4}, {2,5}, {3,6}.
Graph mobius_ladder_m3();
/// C6 x K2 on 1..12: outer cycle 1..6, inner cycle 7..12, rungs {i, i+6}.
Graph c6k2_numbered();
/// The twisted double ladder over C6 on 1..12.
Graph m62();

/// x -> (x mod 3) + 1 from a graph on 1..6 onto C3.
GraphMorphism mod3_projection(const Graph& domain);
/// p: C6 -> C3.
GraphMorphism covering_c6_c3();
/// q: M3 -> C3.
GraphMorphism m3_projection();
/// x -> x for x <= 6, x - 6 otherwise, from a graph on 1..12 onto C6.
GraphMorphism fold12_projection(const Graph& domain);
/// The edge {1,2} of C6 as a map out of P2.
GraphMorphism edge_inclusion_p2_c6();

/// phi(1,2) = phi(2,3) = id, phi(1,3) = swap on K2 over C3.
FiberVoltage m3_voltage();

GraphBundle prism_bundle();   // (K2 x C3, second coordinate, C3)
GraphBundle m3_bundle();      // (M3, q, C3)
GraphBundle c6k2_bundle();    // (C6 x K2 on 1..12, fold, C6)
GraphBundle m62_bundle();     // (M_{6,2}, fold, C6)

/// (3 9)(4 10)(5 11) on labels 1..12 as a 0-based permutation.
Perm m62_witness();

/// (x,y) -> y on Z(2) x Z(3) onto Z(3).
GroupHom phi_z2z3_z3();
/// x -> x mod 3 on Z(6) onto Z(3).
GroupHom phi_z6_z3();

}  // namespace bundleforge
