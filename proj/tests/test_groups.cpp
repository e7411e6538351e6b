#include <doctest.h>

#include <functional>
#include <string>

#include "bundleforge/catalog.hpp"
#include "bundleforge/error.hpp"
#include "bundleforge/groups.hpp"
#include "sweep.hpp"

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

std::vector<std::string> labels_of(const FiniteGroup& g, const std::vector<std::size_t>& xs) {
  std::vector<std::string> out;
  for (std::size_t x : xs) out.push_back(g.label(x));
  return out;
}

}  // namespace

TEST_CASE("cyclic and direct products") {
  FiniteGroup z4 = cyclic(4);
  CHECK(z4.elements() == std::vector<Label>{"0", "1", "2", "3"});
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);

  FiniteGroup z2z3 = direct_product(cyclic(2), cyclic(3));
  CHECK(z2z3.order() == 6);
  CHECK(z2z3.label(4) == "(1,1)");
  // derived: an element of order 6 makes the group cyclic
  CHECK(z2z3.element_order(z2z3.index_of("(1,1)")) == 6);
  CHECK(is_abelian(z2z3));
  CHECK_FALSE(is_abelian(symmetric_group(3)));
  CHECK(symmetric_group(3).order() == 6);
}

TEST_CASE("group axioms are checked") {
  // a Latin square with identity 0 in which every element is its own inverse;
  // a group of order 5 is cyclic, so this loop cannot be associative
  std::vector<std::vector<std::size_t>> loop{
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  try {
    FiniteGroup({"a", "b", "c", "d", "e"}, loop);
    FAIL("loop accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAGroup);
    CHECK(std::string(e.what()).find("associativity") != std::string::npos);
  }
  CHECK(code_of([] { FiniteGroup({"a", "b"}, {{0, 0}, {0, 0}}); }) == ErrorCode::NotAGroup);
  CHECK(code_of([] { FiniteGroup({"a", "b"}, {{0, 1}, {1, 2}}); }) == ErrorCode::NotAGroup);
}

TEST_CASE("homomorphisms and kernels") {
  GroupHom phi2 = phi_z6_z3();
  CHECK(labels_of(phi2.domain(), kernel(phi2)) == std::vector<std::string>{"0", "3"});
  CHECK(subgroup(phi2.domain(), kernel(phi2)).order() == 2);

  GroupHom phi1 = phi_z2z3_z3();
  CHECK(labels_of(phi1.domain(), kernel(phi1)) == std::vector<std::string>{"(0,0)", "(1,0)"});

  CHECK(kernel(identity_hom(cyclic(5))).size() == 1);
  CHECK(is_surjective(phi1));
  CHECK(code_of([] { GroupHom(cyclic(3), cyclic(2), {0, 1, 0}); }) == ErrorCode::NotAHomomorphism);

  CHECK(all_homomorphisms(cyclic(4), cyclic(2)).size() == 2);
  CHECK(all_homomorphisms(cyclic(6), cyclic(3)).size() == 3);
  CHECK(all_homomorphisms(direct_product(cyclic(2), cyclic(2)), cyclic(2)).size() == 4);
  CHECK(all_homomorphisms(symmetric_group(3), cyclic(2)).size() == 2);
}

TEST_CASE("generated subgroups") {
  FiniteGroup z6 = cyclic(6);
  CHECK(generated_subgroup(z6, {2}) == std::vector<std::size_t>{0, 2, 4});
  CHECK(generated_subgroup(z6, {}) == std::vector<std::size_t>{0});
  CHECK(generated_subgroup(z6, {2, 3}).size() == 6);
  CHECK(code_of([&] { subgroup(z6, {0, 1}); }) == ErrorCode::NotAGroup);
}

TEST_CASE("subdirect groups") {
  SubdirectGroup e = subdirect_group(phi_z2z3_z3(), phi_z6_z3());
  CHECK(e.e.order() == 12);
  CHECK(e.amalgam.order() == 3);

  SubdirectGroup diag = subdirect_group(identity_hom(cyclic(4)), identity_hom(cyclic(4)));
  CHECK(diag.e.order() == 4);
  for (auto [a, b] : diag.pairs) CHECK(a == b);

  FiniteGroup one = cyclic(1);
  GroupHom ta(cyclic(2), one, {0, 0});
  GroupHom tb(cyclic(3), one, {0, 0, 0});
  CHECK(subdirect_group(ta, tb).e.order() == 6);

  GroupHom not_onto(cyclic(3), cyclic(3), {0, 0, 0});
  CHECK(code_of([&] { subdirect_group(not_onto, phi_z6_z3()); }) == ErrorCode::NotSurjective);
  CHECK(code_of([] { subdirect_group(phi_z6_z3(), identity_hom(cyclic(2))); }) == ErrorCode::ShapeMismatch);
}

// Invariants

TEST_CASE("property: subdirect group order") {
  auto groups = oracle::small_groups();
  groups.push_back(cyclic(1));
  for (const auto& b : groups) {
    std::vector<GroupHom> onto;
    for (const auto& a : groups)
      for (auto& h : all_homomorphisms(a, b))
        if (is_surjective(h)) onto.push_back(h);
    for (const auto& h1 : onto) {
      for (const auto& h2 : onto) {
        SubdirectGroup e = subdirect_group(h1, h2);
        CHECK(e.e.order() * b.order() == h1.domain().order() * h2.domain().order());
        for (std::size_t x = 0; x < e.e.order(); ++x) {
          CHECK(h1(e.delta_a(x)) == h2(e.delta_b(x)));
        }
      }
    }
  }
}

TEST_CASE("property: homomorphisms preserve products") {
  for (const auto& a : oracle::small_groups()) {
    for (const auto& b : oracle::small_groups()) {
      for (const auto& h : all_homomorphisms(a, b)) {
        CHECK(h(a.identity()) == b.identity());
        for (std::size_t x = 0; x < a.order(); ++x)
          for (std::size_t y = 0; y < a.order(); ++y) CHECK(h(a.mul(x, y)) == b.mul(h(x), h(y)));
      }
    }
  }
}
