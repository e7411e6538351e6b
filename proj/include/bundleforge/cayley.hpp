#pragma once

#include <cstddef>
#include <vector>

#include "bundleforge/bundle.hpp"
#include "bundleforge/graph.hpp"
#include "bundleforge/groups.hpp"

namespace bundleforge {

/// Result of closing a raw generator list: identity removed, inverses added.
struct NormalizedGenerators {
  std::vector<std::size_t> elements;  // sorted
  bool dropped_identity = false;
  std::vector<std::size_t> added_inverses;
};

NormalizedGenerators normalize_generators(const FiniteGroup& g, const std::vector<std::size_t>& raw);

/// Throws InvalidGeneratorSystem unless s avoids 1, is closed under inverses,
/// lies in `within` and generates it (`within` empty means the whole group).
void check_generator_system(const FiniteGroup& g, const std::vector<std::size_t>& s,
                            const std::vector<std::size_t>& within = {});

/// x ~ xs for s in S on the group's labels. Throws InvalidGeneratorSystem.
Graph cayley_graph(const FiniteGroup& g, const std::vector<std::size_t>& s);

/// a S0 a^-1 = S0 for every a in the ambient group.
bool is_admissible(const FiniteGroup& a, const std::vector<std::size_t>& s0);

/// One lift per generator: the smallest-index preimage, an involutive lift for
/// involutions and the inverse lift for the partner of an inverse pair.
/// Throws NoTransversalSection when an involution has no involutive preimage.
std::vector<std::size_t> transversal_section(const GroupHom& phi, const std::vector<std::size_t>& s1);

/// S_phi = S0 u lift(S1), verified as a generator system of the domain.
std::vector<std::size_t> induced_generators(const GroupHom& phi, const std::vector<std::size_t>& s0,
                                            const std::vector<std::size_t>& lift);

struct CayleyBundle {
  GraphBundle bundle;
  std::vector<std::size_t> s_phi;
  std::vector<std::size_t> lift;
  FiniteGroup kernel_group;
};

/// (Cay(A, S_phi), phi, Cay(B, S1)) with fiber Cay(ker phi, S0), verified.
/// S0 is given by domain indices.
CayleyBundle cayley_bundle(const GroupHom& phi, const std::vector<std::size_t>& s1,
                           const std::vector<std::size_t>& s0);

struct InvarianceReport {
  bool equal = false;
  SubdirectGroup group;
  std::vector<std::size_t> s_phi;  // indices into group.e
  Graph cayley;
  GraphBundle sum;
};

/// Cay(A1 x_B A2, S_phi) against Cay(A1, S_phi1) ⊞ Cay(A2, S_phi2), compared
/// as labeled graphs.
InvarianceReport verify_invariance(const GroupHom& phi1, const GroupHom& phi2, const std::vector<std::size_t>& s1,
                                   const std::vector<std::size_t>& s01, const std::vector<std::size_t>& s02);

}  // namespace bundleforge
