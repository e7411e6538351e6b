#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bundleforge/graph.hpp"
#include "bundleforge/matrix.hpp"
#include "bundleforge/perm.hpp"
#include "bundleforge/products.hpp"

namespace bundleforge {

inline constexpr std::size_t kFiberAutomorphismBound = 8;

// ---------------------------------------------------------------------------
// Aut(F) as an indexed group
// ---------------------------------------------------------------------------

/// Aut(F) in lexicographic order with a multiplication table; index 0 is the
/// identity. mul(a, b) is the index of perm(a) o perm(b).
class AutomorphismTable {
 public:
  explicit AutomorphismTable(const Graph& fiber, std::size_t max_vertices = kFiberAutomorphismBound);

  std::size_t size() const { return perms_.size(); }
  const Perm& perm(std::size_t i) const { return perms_[i]; }
  const std::vector<Perm>& perms() const { return perms_; }
  /// Throws InvalidVoltage when p is not an automorphism.
  std::size_t index(const Perm& p) const;
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * perms_.size() + b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }

 private:
  std::vector<Perm> perms_;
  std::map<Perm, std::size_t> index_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> inv_;
};

// ---------------------------------------------------------------------------
// Voltages and bundles
// ---------------------------------------------------------------------------

/// Fiber automorphisms on the oriented base edges; phi(w,v) = phi(v,w)^-1.
/// Permutations act on fiber vertex indices. New voltages are the identity.
class FiberVoltage {
 public:
  FiberVoltage(Graph base, Graph fiber);

  /// Sets both orientations. Throws InvalidVoltage.
  void set(std::size_t v, std::size_t w, const Perm& phi);
  void set(const Label& v, const Label& w, const Perm& phi);
  const Perm& at(std::size_t v, std::size_t w) const;

  const Graph& base() const { return base_; }
  const Graph& fiber() const { return fiber_; }
  const std::map<OrientedEdge, Perm>& phi() const { return phi_; }

  bool operator==(const FiberVoltage& other) const = default;

 private:
  Graph base_;
  Graph fiber_;
  std::map<OrientedEdge, Perm> phi_;
};

/// A verified F-bundle with fiber coordinates materialized.
struct GraphBundle {
  Graph total;
  GraphMorphism projection;
  Graph fiber;
  /// sigma_{p(x)}(x): index of x in the fiber graph.
  std::vector<std::size_t> fiber_coord;
  /// point[v][f] is the total vertex over v with coordinate f.
  std::vector<std::vector<std::size_t>> point;
  /// lift[x][w]: the neighbour of x lying over the base neighbour w of p(x).
  std::vector<std::map<std::size_t, std::size_t>> lift;

  const Graph& base() const { return projection.codomain(); }
  /// psi_{vw} in coordinates: entry f is the total vertex over w joined to point[v][f].
  std::vector<std::size_t> transition(std::size_t v, std::size_t w) const;
};

/// Gamma x_phi F on "(v,f)" vertices in lexicographic order.
GraphBundle voltage_bundle(const FiberVoltage& fv);

/// Checks the three defining conditions and local triviality and requires
/// them to agree. The hint, when given, fixes the fiber coordinates.
/// Throws NotAMorphism, NotSurjective, FiberNotIsomorphic, NotACovering,
/// TransitionNotIso, or Internal when the two characterizations disagree.
GraphBundle verify_bundle(const Graph& total, const GraphMorphism& p, const Graph& fiber,
                          const std::optional<std::vector<std::size_t>>& coord_hint = std::nullopt,
                          std::uint64_t budget = kDefaultSearchBudget);

/// Throws LocalTrivialityFails(v,w) unless every p^-1(vw) is isomorphic to K2 x F.
void check_local_triviality(const GraphMorphism& p, const Graph& fiber,
                            std::uint64_t budget = kDefaultSearchBudget);

/// phi_{vw} = sigma_w o psi_{vw} o sigma_v^-1.
FiberVoltage bundle_to_voltage(const GraphBundle& b);

/// Equivalence over the identity of the base. The witness maps total1
/// indices to total2 indices and is the lexicographically least one.
/// Throws BaseMismatch, FiberMismatch.
std::optional<std::vector<std::size_t>> bundles_equivalent(
    const GraphBundle& b1, const GraphBundle& b2, std::size_t max_fiber = kFiberAutomorphismBound);

/// True iff map is a base-preserving isomorphism of total spaces.
bool is_equivalence(const GraphBundle& b1, const GraphBundle& b2, const std::vector<std::size_t>& map);

GraphBundle trivial_bundle(const Graph& base, const Graph& fiber);
/// (Gamma, id, Gamma) with one-vertex fiber "1".
GraphBundle identity_bundle(const Graph& base);
bool is_trivial(const GraphBundle& b);

/// Sum over psi in Aut(F) of A(psi) (x) perm(psi), plus I (x) A_F, with
/// A(psi)_{vw} = 1 iff v ~ w and phi(w,v) = psi.
Matrix bundle_adjacency(const FiberVoltage& fv, std::size_t max_fiber = kFiberAutomorphismBound);

/// Voltages as indices into an automorphism table, one per oriented base edge
/// in the order of the base's neighbour lists.
struct IndexedVoltage {
  std::vector<std::vector<std::size_t>> at;  // at[v][k]: voltage on (v, neighbors(v)[k])
};

IndexedVoltage index_voltage(const FiberVoltage& fv, const AutomorphismTable& aut);

/// Gauge a with a_w = phi2(v,w) o a_v o phi1(v,w)^-1 on every edge; returns
/// a_v indices or nullopt. Each component takes the first root value that works.
std::optional<std::vector<std::size_t>> solve_gauge(const Graph& base, const AutomorphismTable& aut,
                                                    const IndexedVoltage& phi1,
                                                    const IndexedVoltage& phi2);

}  // namespace bundleforge
