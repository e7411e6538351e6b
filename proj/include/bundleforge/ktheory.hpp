#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bundleforge/bundle.hpp"
#include "bundleforge/graph.hpp"

namespace bundleforge {

inline constexpr std::size_t kDefaultNMax = 3;
inline constexpr std::size_t kMaxKBaseVertices = 6;
inline constexpr std::uint64_t kMaxVoltageAssignments = 1'000'000;
inline constexpr std::size_t kKFiberAutomorphismBound = 10;

/// F^n = F^{n-1} x F with F^0 a single vertex "1". Vertex indices of
/// F^a x F^b and F^(a+b) agree.
Graph fiber_power(const Graph& f, std::size_t n);

/// Class of an F^n-bundle; id 0 is the trivial class at every n.
struct ClassRef {
  std::size_t n = 0;
  std::size_t id = 0;

  auto operator<=>(const ClassRef&) const = default;
  std::string str() const;
};

struct BundleClass {
  ClassRef ref;
  FiberVoltage representative;
  std::size_t members = 0;
};

struct KLimits {
  std::size_t max_base_vertices = kMaxKBaseVertices;
  std::uint64_t max_assignments = kMaxVoltageAssignments;
  std::size_t max_fiber = kKFiberAutomorphismBound;
};

class KClassMonoid {
 public:
  const Graph& base() const { return base_; }
  const Graph& fiber() const { return fiber_; }
  std::size_t n_max() const { return n_max_; }

  const std::vector<BundleClass>& classes(std::size_t n) const { return classes_.at(n); }
  std::vector<ClassRef> all_classes() const;
  const BundleClass& at(ClassRef c) const { return classes_.at(c.n).at(c.id); }

  /// [X] + [Y]; nullopt when the fiber power exceeds n_max.
  std::optional<ClassRef> add(ClassRef a, ClassRef b) const;
  const std::map<std::pair<ClassRef, ClassRef>, ClassRef>& add_table() const { return add_table_; }

  /// Class of an F^n-voltage over the base. Throws BaseMismatch, FiberMismatch.
  ClassRef classify(std::size_t n, const FiberVoltage& fv) const;

  friend KClassMonoid enumerate_bundle_classes(const Graph& base, const Graph& f, std::size_t n_max,
                                               const KLimits& limits);

 private:
  Graph base_;
  Graph fiber_;
  std::size_t n_max_ = 0;
  std::vector<Graph> powers_;
  std::vector<AutomorphismTable> auts_;
  std::vector<std::vector<BundleClass>> classes_;
  std::vector<std::vector<IndexedVoltage>> indexed_;
  std::map<std::pair<ClassRef, ClassRef>, ClassRef> add_table_;
};

/// Every voltage assignment for 0 <= n <= n_max, quotiented by equivalence,
/// plus the in-bound addition table. Throws EnumerationBoundExceeded.
KClassMonoid enumerate_bundle_classes(const Graph& base, const Graph& f, std::size_t n_max,
                                      const KLimits& limits = {});

/// Formal difference positive - negative.
struct KGroupElement {
  ClassRef positive;
  ClassRef negative;
};

enum class Verdict { False, True, Unknown };
const char* to_string(Verdict v);

/// (a,b) ~ (c,d) iff a + d + r = b + c + r for some enumerated r. Unknown
/// when no in-bound r works but some r leaves the bound.
Verdict grothendieck_equal(const KClassMonoid& m, const KGroupElement& e1, const KGroupElement& e2);

/// [X] -> [f*X] on representatives.
std::map<ClassRef, ClassRef> k0_map(const GraphMorphism& f, const KClassMonoid& codomain,
                                    const KClassMonoid& domain);

}  // namespace bundleforge
