#include <doctest.h>

#include <functional>

#include "bundleforge/catalog.hpp"
#include "bundleforge/cayley.hpp"
#include "bundleforge/error.hpp"
#include "bundleforge/pullback.hpp"
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

std::vector<std::size_t> idx(const FiniteGroup& g, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(g.index_of(l));
  return out;
}

std::vector<std::string> labels_of(const FiniteGroup& g, std::vector<std::size_t> xs) {
  std::sort(xs.begin(), xs.end());
  std::vector<std::string> out;
  for (std::size_t x : xs) out.push_back(g.label(x));
  return out;
}

// odd permutations of S3 map to 1
GroupHom sign_s3() {
  FiniteGroup s3 = symmetric_group(3);
  return GroupHom::from_function(s3, cyclic(2), [](const Label& p) {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) inversions += p[i] > p[j];
    return std::to_string(inversions % 2);
  });
}

}  // namespace

TEST_CASE("generator normalization") {
  FiniteGroup z6 = cyclic(6);
  auto n = normalize_generators(z6, {0, 1, 3});
  CHECK(n.dropped_identity);
  CHECK(n.elements == std::vector<std::size_t>{1, 3, 5});
  CHECK(n.added_inverses == std::vector<std::size_t>{5});
}

TEST_CASE("cayley graphs") {
  FiniteGroup z4 = cyclic(4);
  CHECK(describe(cayley_graph(z4, {1, 3})) == "C4");
  CHECK(describe(cayley_graph(z4, {1, 2, 3})) == "K4");
  Graph m = cayley_graph(cyclic(6), {1, 3, 5});
  CHECK(find_isomorphism(m, mobius_ladder_m3()));

  CHECK(code_of([&] { cayley_graph(z4, {1}); }) == ErrorCode::InvalidGeneratorSystem);
  CHECK(code_of([&] { cayley_graph(z4, {0, 1, 3}); }) == ErrorCode::InvalidGeneratorSystem);
  CHECK(code_of([&] { cayley_graph(z4, {2}); }) == ErrorCode::InvalidGeneratorSystem);
}

TEST_CASE("admissible sets") {
  FiniteGroup z6 = cyclic(6);
  CHECK(is_admissible(z6, {3}));
  CHECK(is_admissible(z6, {2, 4}));

  GroupHom sign = sign_s3();
  const FiniteGroup& s3 = sign.domain();
  auto k = kernel(sign);
  std::vector<std::size_t> s0;
  for (std::size_t x : k)
    if (x != s3.identity()) s0.push_back(x);
  CHECK(s0.size() == 2);
  CHECK(is_admissible(s3, s0));
  // a single transposition is not closed under conjugation
  CHECK_FALSE(is_admissible(s3, idx(s3, {"102"})));
}

TEST_CASE("transversal sections") {
  GroupHom phi1 = phi_z2z3_z3();
  CHECK(labels_of(phi1.domain(), transversal_section(phi1, {1, 2})) == std::vector<std::string>{"(0,1)", "(0,2)"});
  GroupHom phi2 = phi_z6_z3();
  CHECK(labels_of(phi2.domain(), transversal_section(phi2, {1, 2})) == std::vector<std::string>{"1", "5"});
  CHECK(transversal_section(identity_hom(cyclic(5)), {1, 4}) == std::vector<std::size_t>{1, 4});

  // the generator 1 of Z(2) is an involution; its preimages 1, 3 in Z(4) have order 4
  GroupHom mod2 = GroupHom::from_function(cyclic(4), cyclic(2), [](const Label& x) {
    return std::to_string(std::stoi(x) % 2);
  });
  CHECK(code_of([&] { transversal_section(mod2, {1}); }) == ErrorCode::NoTransversalSection);
}

TEST_CASE("induced generators") {
  GroupHom phi1 = phi_z2z3_z3();
  const FiniteGroup& a1 = phi1.domain();
  auto s1 = induced_generators(phi1, idx(a1, {"(1,0)"}), transversal_section(phi1, {1, 2}));
  CHECK(labels_of(a1, s1) == std::vector<std::string>{"(0,1)", "(0,2)", "(1,0)"});

  GroupHom phi2 = phi_z6_z3();
  auto s2 = induced_generators(phi2, {3}, transversal_section(phi2, {1, 2}));
  CHECK(labels_of(phi2.domain(), s2) == std::vector<std::string>{"1", "3", "5"});

  FiniteGroup z5 = cyclic(5);
  CHECK(induced_generators(identity_hom(z5), {}, {1, 4}) == std::vector<std::size_t>{1, 4});
}

TEST_CASE("cayley bundles") {
  CayleyBundle b1 = cayley_bundle(phi_z2z3_z3(), {1, 2}, idx(phi_z2z3_z3().domain(), {"(1,0)"}));
  CHECK(describe(b1.bundle.fiber) == "K2");
  CHECK(describe(b1.bundle.base()) == "C3");
  CHECK(is_trivial(b1.bundle));
  CHECK(find_isomorphism(b1.bundle.total, prism_bundle().total));

  CayleyBundle b2 = cayley_bundle(phi_z6_z3(), {1, 2}, {3});
  CHECK_FALSE(is_trivial(b2.bundle));
  CHECK(find_isomorphism(b2.bundle.total, mobius_ladder_m3()));

  GroupHom sign = sign_s3();
  std::vector<std::size_t> s0;
  for (std::size_t x : kernel(sign))
    if (x != sign.domain().identity()) s0.push_back(x);
  CayleyBundle b3 = cayley_bundle(sign, {1}, s0);
  CHECK(describe(b3.bundle.fiber) == "C3");
  CHECK(describe(b3.bundle.base()) == "K2");

  CHECK(code_of([&] { cayley_bundle(sign, {1}, idx(sign.domain(), {"102"})); }) == ErrorCode::InvalidGeneratorSystem);
}

TEST_CASE("invariance") {
  GroupHom phi1 = phi_z2z3_z3();
  InvarianceReport r = verify_invariance(phi1, phi_z6_z3(), {1, 2}, idx(phi1.domain(), {"(1,0)"}), {3});
  CHECK(r.equal);
  CHECK(r.cayley.order() == 12);
  CHECK(labels_of(r.group.e, r.s_phi) ==
        std::vector<std::string>{"((0,0),3)", "((0,1),1)", "((0,2),5)", "((1,0),0)"});

  FiniteGroup c = cyclic(5);
  InvarianceReport diag = verify_invariance(identity_hom(c), identity_hom(c), {1, 4}, {}, {});
  CHECK(diag.equal);
  CHECK(diag.cayley.order() == 5);

  CHECK(verify_invariance(phi_z6_z3(), phi_z6_z3(), {1, 2}, {3}, {3}).equal);
}

// Invariants

TEST_CASE("property: cayley graphs are vertex-transitive") {
  std::vector<FiniteGroup> groups = oracle::small_groups();
  groups.push_back(symmetric_group(3));
  groups.push_back(symmetric_group(4));
  for (const auto& g : groups) {
    auto systems = oracle::generator_systems(g, {});
    std::size_t checked = 0;
    for (const auto& s : systems) {
      if (++checked > 6) break;
      Graph c = cayley_graph(g, s);
      for (std::size_t x : sorted_degrees(c)) CHECK(x == s.size());
      for (std::size_t h = 0; h < g.order(); ++h) {
        Perm left(g.order());
        for (std::size_t y = 0; y < g.order(); ++y) left[y] = g.mul(h, y);
        CHECK(is_automorphism(c, left));
      }
    }
  }
}

TEST_CASE("property: cayley bundles verify over the small-group sweep") {
  auto groups = oracle::small_groups();
  std::size_t built = 0, no_section = 0;
  for (const auto& a : groups) {
    for (const auto& b : groups) {
      for (const auto& phi : all_homomorphisms(a, b)) {
        if (!is_surjective(phi)) continue;
        auto ker = kernel(phi);
        for (const auto& s1 : oracle::generator_systems(b, {})) {
          for (const auto& s0 : oracle::generator_systems(a, ker)) {
            if (!is_admissible(a, s0)) continue;
            try {
              CayleyBundle cb = cayley_bundle(phi, s1, s0);
              CHECK(cb.bundle.total.order() == a.order());
              ++built;
            } catch (const Error& e) {
              REQUIRE(e.code() == ErrorCode::NoTransversalSection);
              ++no_section;
            }
          }
        }
      }
    }
  }
  MESSAGE("cayley bundles built: " << built << ", skipped without an involutive lift: " << no_section);
  CHECK(built > 50);
}

TEST_CASE("property: invariance over the small-group sweep") {
  auto groups = oracle::small_groups();
  std::size_t checked = 0;
  for (const auto& b : groups) {
    std::vector<GroupHom> onto;
    for (const auto& a : groups)
      for (auto& h : all_homomorphisms(a, b))
        if (is_surjective(h)) onto.push_back(h);
    for (const auto& s1 : oracle::generator_systems(b, {})) {
      for (const auto& h1 : onto) {
        auto s01s = oracle::generator_systems(h1.domain(), kernel(h1));
        for (const auto& h2 : onto) {
          auto s02s = oracle::generator_systems(h2.domain(), kernel(h2));
          for (const auto& s01 : s01s) {
            for (const auto& s02 : s02s) {
              try {
                transversal_section(h1, s1);
                transversal_section(h2, s1);
              } catch (const Error&) {
                continue;
              }
              CHECK(verify_invariance(h1, h2, s1, s01, s02).equal);
              ++checked;
            }
          }
        }
      }
    }
  }
  MESSAGE("invariance instances: " << checked);
  CHECK(checked > 100);
}
