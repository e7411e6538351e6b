#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "bundleforge/graph.hpp"

namespace bundleforge {

inline constexpr std::size_t kExhaustiveAssociativityBound = 64;

/// Finite group given by its Cayley table over indices 0..n-1.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// Throws NotAGroup(axiom, witness).
  FiniteGroup(std::vector<Label> elements, std::vector<std::vector<std::size_t>> table);
  static FiniteGroup from_label_table(std::vector<Label> elements,
                                      const std::vector<std::vector<Label>>& table);

  std::size_t order() const { return labels_.size(); }
  const std::vector<Label>& elements() const { return labels_; }
  const Label& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(const Label& label) const;
  /// Throws NotAGroup when the label is not an element.
  std::size_t index_of(const Label& label) const;

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inv(std::size_t a) const { return inv_[a]; }
  std::size_t identity() const { return identity_; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }
  std::size_t element_order(std::size_t a) const;

  bool operator==(const FiniteGroup& other) const {
    return labels_ == other.labels_ && table_ == other.table_;
  }

 private:
  std::vector<Label> labels_;
  std::unordered_map<Label, std::size_t> index_;
  std::vector<std::vector<std::size_t>> table_;
  std::vector<std::size_t> inv_;
  std::size_t identity_ = 0;
};

/// Z(n) on "0".."n-1".
FiniteGroup cyclic(std::size_t n);
/// Componentwise product on "(a,b)" labels, a-major.
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
/// S_n on one-line labels such as "021"; n <= 9.
FiniteGroup symmetric_group(std::size_t n);
bool is_abelian(const FiniteGroup& g);

/// Smallest subgroup containing s, sorted.
std::vector<std::size_t> generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& s);
/// Subgroup on the given elements, keeping their labels. Throws NotAGroup.
FiniteGroup subgroup(const FiniteGroup& g, const std::vector<std::size_t>& elements);

class GroupHom {
 public:
  /// Throws NotAHomomorphism(witness pair).
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<std::size_t> map);
  static GroupHom from_labels(FiniteGroup domain, FiniteGroup codomain, const std::map<Label, Label>& map);
  static GroupHom from_function(FiniteGroup domain, FiniteGroup codomain,
                                const std::function<Label(const Label&)>& fn);

  const FiniteGroup& domain() const { return domain_; }
  const FiniteGroup& codomain() const { return codomain_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t a) const { return map_[a]; }

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<std::size_t> map_;
};

std::vector<std::size_t> kernel(const GroupHom& h);
bool is_surjective(const GroupHom& h);
GroupHom identity_hom(const FiniteGroup& g);

/// Every homomorphism a -> b, found by extending generator images.
std::vector<GroupHom> all_homomorphisms(const FiniteGroup& a, const FiniteGroup& b);

/// E = A x_C B = {(a,b) | eA(a) = eB(b)} with its projections.
struct SubdirectGroup {
  FiniteGroup e;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;  // element of e -> (a, b)
  GroupHom delta_a;
  GroupHom delta_b;
  FiniteGroup amalgam;
};

/// Throws NotSurjective, ShapeMismatch (different codomains) or Internal
/// when a structural invariant fails.
SubdirectGroup subdirect_group(const GroupHom& ea, const GroupHom& eb);

}  // namespace bundleforge
