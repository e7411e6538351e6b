#include <doctest.h>

#include <functional>

#include "bundleforge/catalog.hpp"
#include "bundleforge/error.hpp"
#include "bundleforge/ktheory.hpp"
#include "bundleforge/perm.hpp"
#include "bundleforge/pullback.hpp"

using namespace bundleforge;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

const KClassMonoid& c3_k2() {
  static const KClassMonoid m = enumerate_bundle_classes(cycle_graph(3), complete_graph(2), 3);
  return m;
}

}  // namespace

TEST_CASE("fiber powers") {
  Graph f0 = fiber_power(complete_graph(2), 0);
  CHECK(f0.order() == 1);
  CHECK(f0.size() == 0);
  CHECK(fiber_power(complete_graph(2), 1) == complete_graph(2));
  CHECK(describe(fiber_power(complete_graph(2), 2)) == "C4");
  Graph cube = fiber_power(complete_graph(2), 3);
  CHECK(cube.order() == 8);
  CHECK(cube.size() == 12);
  for (std::size_t d : sorted_degrees(cube)) CHECK(d == 3);
}

TEST_CASE("class enumeration over C3 with K2") {
  const KClassMonoid& m = c3_k2();
  CHECK(m.classes(0).size() == 1);
  CHECK(m.classes(1).size() == 2);
  // regression values for the larger fiber powers
  CHECK(m.classes(2).size() == 5);
  CHECK(m.classes(3).size() == 10);

  // class 1:0 is the prism, 1:1 is M3
  CHECK(m.classify(1, FiberVoltage(cycle_graph(3), complete_graph(2))) == ClassRef{1, 0});
  CHECK(m.classify(1, m3_voltage()) == ClassRef{1, 1});
  std::size_t total = 0;
  for (const auto& c : m.classes(1)) total += c.members;
  CHECK(total == 8);
}

TEST_CASE("class enumeration at n = 0") {
  for (const Graph& base : {cycle_graph(4), path_graph(3), complete_graph(4)}) {
    KClassMonoid m = enumerate_bundle_classes(base, complete_graph(3), 0);
    CHECK(m.classes(0).size() == 1);
  }
}

TEST_CASE("enumeration bounds") {
  CHECK(code_of([] { enumerate_bundle_classes(cycle_graph(7), complete_graph(2), 1); }) ==
        ErrorCode::EnumerationBoundExceeded);
  CHECK(code_of([] { enumerate_bundle_classes(cycle_graph(6), complete_graph(2), 3); }) ==
        ErrorCode::EnumerationBoundExceeded);
}

TEST_CASE("monoid addition") {
  const KClassMonoid& m = c3_k2();
  ClassRef trivial1{1, 0}, twisted{1, 1};
  // M3 + M3 has monodromy swap x swap on C4, which is not trivial
  auto mm = m.add(twisted, twisted);
  REQUIRE(mm);
  CHECK(mm->n == 2);
  CHECK(mm->id != 0);
  CHECK(m.add(trivial1, trivial1) == ClassRef{2, 0});
  CHECK(m.add(ClassRef{0, 0}, twisted) == twisted);
  CHECK_FALSE(m.add(ClassRef{2, 1}, ClassRef{2, 1}));
  CHECK(m.add(ClassRef{2, 1}, twisted).has_value());
}

TEST_CASE("grothendieck verdicts") {
  const KClassMonoid& m = c3_k2();
  ClassRef twisted{1, 1}, trivial1{1, 0}, zero{0, 0};
  CHECK(grothendieck_equal(m, {twisted, twisted}, {trivial1, trivial1}) == Verdict::True);
  // fiber powers differ, so no r can balance the sums
  CHECK(grothendieck_equal(m, {twisted, zero}, {zero, zero}) == Verdict::False);
  // regression value: no witness r within n <= 3
  CHECK(grothendieck_equal(m, {twisted, trivial1}, {zero, zero}) == Verdict::Unknown);

  KClassMonoid tree = enumerate_bundle_classes(path_graph(3), complete_graph(2), 2);
  CHECK(grothendieck_equal(tree, {ClassRef{2, 0}, ClassRef{1, 0}}, {ClassRef{1, 0}, ClassRef{0, 0}}) == Verdict::True);
}

TEST_CASE("k0 maps") {
  KClassMonoid c3 = enumerate_bundle_classes(cycle_graph(3), complete_graph(2), 2);
  auto id = k0_map(identity_morphism(cycle_graph(3)), c3, c3);
  for (auto [from, to] : id) CHECK(from == to);

  KClassMonoid c6 = enumerate_bundle_classes(cycle_graph(6), complete_graph(2), 2);
  KClassMonoid p2 = enumerate_bundle_classes(path_graph(2), complete_graph(2), 2);
  GraphMorphism g = covering_c6_c3();
  GraphMorphism f = edge_inclusion_p2_c6();
  auto kg = k0_map(g, c3, c6);
  auto kf = k0_map(f, c6, p2);
  auto kgf = k0_map(compose(g, f), c3, p2);
  for (auto [c, image] : kg) {
    if (c.id == 0) CHECK(image.id == 0);
  }
  for (auto [c, image] : kgf) CHECK(kf.at(kg.at(c)) == image);
  // M3 pulls back to the M_{6,2} class, which is trivial
  CHECK(kg.at(ClassRef{1, 1}) == ClassRef{1, 0});
}

// Invariants

TEST_CASE("property: trivial class is neutral and addition is commutative and associative") {
  const KClassMonoid& m = c3_k2();
  auto classes = m.all_classes();
  for (ClassRef a : classes) {
    auto z = m.add(ClassRef{0, 0}, a);
    REQUIRE(z);
    CHECK(*z == a);
    for (ClassRef b : classes) {
      CHECK(m.add(a, b) == m.add(b, a));
      if (a.n + b.n <= m.n_max()) {
        // adding the trivial class of the same size never changes twistedness
        if (b.id == 0) {
          auto s = m.add(a, b);
          REQUIRE(s);
          CHECK((a.id == 0) == (s->id == 0));
        }
      }
      for (ClassRef c : classes) {
        if (a.n + b.n + c.n > m.n_max()) continue;
        CHECK(m.add(*m.add(a, b), c) == m.add(a, *m.add(b, c)));
      }
    }
  }
}

TEST_CASE("property: one class per n over trees") {
  struct Case {
    Graph fiber;
    std::size_t n_max;
  };
  // the largest n where |Aut(F^n)|^|E| and |V(F^n)| stay within the default caps
  std::vector<Case> fibers{{complete_graph(2), 3}, {empty_graph(2), 2}, {complete_graph(3), 2}};
  for (const Graph& tree : {path_graph(2), path_graph(3), path_graph(4), star_graph(3)}) {
    for (const auto& c : fibers) {
      KClassMonoid m = enumerate_bundle_classes(tree, c.fiber, c.n_max);
      for (std::size_t n = 0; n <= c.n_max; ++n) CHECK(m.classes(n).size() == 1);
    }
  }
}

TEST_CASE("property: k0 maps respect addition") {
  KClassMonoid c3 = enumerate_bundle_classes(cycle_graph(3), complete_graph(2), 2);
  KClassMonoid c6 = enumerate_bundle_classes(cycle_graph(6), complete_graph(2), 2);
  auto kg = k0_map(covering_c6_c3(), c3, c6);
  for (ClassRef a : c3.all_classes()) {
    for (ClassRef b : c3.all_classes()) {
      auto s = c3.add(a, b);
      if (!s) continue;
      CHECK(kg.at(*s) == c6.add(kg.at(a), kg.at(b)));
    }
  }
}
