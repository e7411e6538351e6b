#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bundleforge/bundle.hpp"
#include "bundleforge/graph.hpp"
#include "bundleforge/matrix.hpp"

namespace bundleforge {

enum class EdgeKind { I, II, III };

const char* to_string(EdgeKind kind);

struct TypedEdge {
  std::size_t a = 0;
  std::size_t b = 0;
  EdgeKind kind = EdgeKind::I;
};

/// "(v|x)" composite label used by pullbacks.
Label bar_label(const Label& v, const Label& x);

/// Fiber product of f: Y -> B and p: X -> B on "(y|x)" vertices with f(y) = p(x),
/// y-major. Edges: I (y = y', x ~ x'), II (y ~ y', f(y) = f(y'), x = x'),
/// III (y ~ y', f(y) ~ f(y'), x ~ x').
struct FiberProduct {
  Graph graph;
  std::vector<std::size_t> first;   // y coordinate
  std::vector<std::size_t> second;  // x coordinate
  std::vector<TypedEdge> edges;     // same order as graph.edges()
  std::array<std::size_t, 3> counts{};
};

/// Throws BaseMismatch when f and p have different codomains.
FiberProduct fiber_product(const GraphMorphism& f, const GraphMorphism& p);

struct Pullback {
  GraphBundle bundle;
  std::vector<TypedEdge> edges;
  std::array<std::size_t, 3> counts{};
};

/// f*X over the domain of f. Throws BaseMismatch.
Pullback pullback(const GraphMorphism& f, const GraphBundle& b);
GraphBundle pullback_bundle(const GraphMorphism& f, const GraphBundle& b);

/// f*phi(v,w) = id if f(v) = f(w), phi(f(v), f(w)) otherwise.
FiberVoltage pullback_voltage(const GraphMorphism& f, const FiberVoltage& fv);

/// |V_codomain| x |V_domain| with (M_f)_{w,v} = 1 iff f(v) = w.
Matrix morphism_matrix(const GraphMorphism& f);

/// A_{Gamma'}(psi)_{vw} = 1 iff v ~ w and phi(w,v) = psi.
Matrix voltage_indicator(const FiberVoltage& fv, const Perm& psi);

/// B_{f,id} = M^T (I + A(id)) M, B_{f,psi} = M^T A(psi) M otherwise.
Matrix pullback_block(const GraphMorphism& f, const FiberVoltage& fv, const Perm& psi);

/// Sum over psi of (A_Gamma o B_{f,psi}) (x) perm(psi), plus I (x) A_F.
Matrix pullback_adjacency(const GraphMorphism& f, const FiberVoltage& fv,
                          std::size_t max_fiber = kFiberAutomorphismBound);

/// (v|x) -> x from the pullback total space into X.
GraphMorphism canonical_map(const GraphMorphism& f, const GraphBundle& b);

/// f: G1 -> G2, g: G2 -> G3, b over G3. True iff f*(g*b) and (g o f)*b are equivalent.
bool compose_pullbacks_check(const GraphMorphism& f, const GraphMorphism& g, const GraphBundle& b);

/// X1 ⊞ X2 on "(x,y)" vertices, x-major, as an (F1 x F2)-bundle over the common base.
/// Throws BaseMismatch.
GraphBundle subdirect_product(const GraphBundle& b1, const GraphBundle& b2);

/// Sum of A(psi1,psi2) (x) perm(psi1) (x) perm(psi2) plus the two fiber terms,
/// in (v, f1, f2) lexicographic order.
Matrix subdirect_adjacency(const FiberVoltage& fv1, const FiberVoltage& fv2,
                           std::size_t max_fiber = kFiberAutomorphismBound);

/// y -> (alpha1(y), alpha2(y)) into X1 ⊞ X2. Throws CompositesDisagree when
/// p1 o alpha1 != p2 o alpha2 and CompositeCollapses when that composite
/// contracts an edge.
GraphMorphism pair_morphism(const GraphMorphism& alpha1, const GraphMorphism& alpha2,
                            const GraphBundle& b1, const GraphBundle& b2);

/// beta: Y -> X with Y a subgraph of the base; true iff beta is a morphism
/// and p(beta(y)) = y.
bool is_section(const GraphMorphism& beta, const GraphBundle& b);

/// Fiber product of two projections with different total spaces over a
/// shared graph, relabeled "(x,y)". Plain graph; no bundle structure claimed.
Graph equalizer_graph(const GraphMorphism& q1, const GraphMorphism& q2);

}  // namespace bundleforge
