#include "bundleforge/ktheory.hpp"

#include "bundleforge/error.hpp"
#include "bundleforge/products.hpp"
#include "bundleforge/pullback.hpp"

namespace bundleforge {

Graph fiber_power(const Graph& f, std::size_t n) {
  Graph out({"1"}, {});
  if (n == 0) return out;
  out = f;
  for (std::size_t i = 1; i < n; ++i) out = cartesian_product(out, f);
  return out;
}

std::string ClassRef::str() const { return std::to_string(n) + ":" + std::to_string(id); }

std::vector<ClassRef> KClassMonoid::all_classes() const {
  std::vector<ClassRef> out;
  for (const auto& level : classes_)
    for (const auto& c : level) out.push_back(c.ref);
  return out;
}

std::optional<ClassRef> KClassMonoid::add(ClassRef a, ClassRef b) const {
  auto it = add_table_.find({a, b});
  if (it == add_table_.end()) return std::nullopt;
  return it->second;
}

ClassRef KClassMonoid::classify(std::size_t n, const FiberVoltage& fv) const {
  if (!(fv.base() == base_)) throw Error(ErrorCode::BaseMismatch, "voltage over another base");
  if (n > n_max_) throw Error(ErrorCode::EnumerationBoundExceeded, "fiber power above n_max");
  if (!(fv.fiber() == powers_[n])) throw Error(ErrorCode::FiberMismatch, "fiber is not F^" + std::to_string(n));
  IndexedVoltage iv = index_voltage(fv, auts_[n]);
  for (std::size_t id = 0; id < indexed_[n].size(); ++id) {
    if (solve_gauge(base_, auts_[n], iv, indexed_[n][id])) return {n, id};
  }
  throw Error(ErrorCode::Internal, "voltage outside every enumerated class");
}

KClassMonoid enumerate_bundle_classes(const Graph& base, const Graph& f, std::size_t n_max,
                                      const KLimits& limits) {
  if (base.order() > limits.max_base_vertices) {
    throw Error(ErrorCode::EnumerationBoundExceeded, "base has more than " +
                                                         std::to_string(limits.max_base_vertices) + " vertices");
  }
  KClassMonoid m;
  m.base_ = base;
  m.fiber_ = f;
  m.n_max_ = n_max;
  const auto& edges = base.edges();

  for (std::size_t n = 0; n <= n_max; ++n) {
    Graph power = fiber_power(f, n);
    AutomorphismTable aut(power, limits.max_fiber);
    std::uint64_t total = 1;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      total *= aut.size();
      if (total > limits.max_assignments) {
        throw Error(ErrorCode::EnumerationBoundExceeded,
                    "more than " + std::to_string(limits.max_assignments) + " voltage assignments at n=" +
                        std::to_string(n));
      }
    }

    std::vector<BundleClass> classes;
    std::vector<IndexedVoltage> indexed;
    std::vector<std::size_t> digits(edges.size(), 0);
    for (std::uint64_t count = 0; count < total; ++count) {
      FiberVoltage fv(base, power);
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (digits[e] != 0) fv.set(edges[e].first, edges[e].second, aut.perm(digits[e]));
      }
      IndexedVoltage iv = index_voltage(fv, aut);
      bool placed = false;
      for (std::size_t id = 0; id < classes.size() && !placed; ++id) {
        if (solve_gauge(base, aut, iv, indexed[id])) {
          ++classes[id].members;
          placed = true;
        }
      }
      if (!placed) {
        classes.push_back({ClassRef{n, classes.size()}, std::move(fv), 1});
        indexed.push_back(std::move(iv));
      }
      for (std::size_t e = edges.size(); e-- > 0;) {
        if (++digits[e] < aut.size()) break;
        digits[e] = 0;
      }
    }
    m.powers_.push_back(std::move(power));
    m.auts_.push_back(std::move(aut));
    m.classes_.push_back(std::move(classes));
    m.indexed_.push_back(std::move(indexed));
  }

  for (std::size_t n1 = 0; n1 <= n_max; ++n1) {
    for (std::size_t n2 = 0; n1 + n2 <= n_max; ++n2) {
      for (const auto& c1 : m.classes_[n1]) {
        GraphBundle x = voltage_bundle(c1.representative);
        for (const auto& c2 : m.classes_[n2]) {
          GraphBundle sum = subdirect_product(x, voltage_bundle(c2.representative));
          FiberVoltage raw = bundle_to_voltage(sum);
          const Graph& target = m.powers_[n1 + n2];
          if (!(relabeled(sum.fiber, target.vertices()) == target)) {
            throw Error(ErrorCode::Internal, "F^a x F^b does not align with F^(a+b)");
          }
          FiberVoltage moved(base, target);
          for (auto [v, w] : base.edges()) moved.set(v, w, raw.at(v, w));
          m.add_table_[{c1.ref, c2.ref}] = m.classify(n1 + n2, moved);
        }
      }
    }
  }
  return m;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

Verdict grothendieck_equal(const KClassMonoid& m, const KGroupElement& e1, const KGroupElement& e2) {
  const ClassRef a = e1.positive, b = e1.negative, c = e2.positive, d = e2.negative;
  if (a.n + d.n != b.n + c.n) return Verdict::False;
  auto left = m.add(a, d);
  auto right = m.add(b, c);
  if (!left || !right) return Verdict::Unknown;
  bool out_of_bound = false;
  for (ClassRef r : m.all_classes()) {
    auto l = m.add(*left, r);
    auto rr = m.add(*right, r);
    if (!l || !rr) {
      out_of_bound = true;
      continue;
    }
    if (*l == *rr) return Verdict::True;
  }
  return out_of_bound ? Verdict::Unknown : Verdict::False;
}

std::map<ClassRef, ClassRef> k0_map(const GraphMorphism& f, const KClassMonoid& codomain,
                                    const KClassMonoid& domain) {
  if (!(f.codomain() == codomain.base()) || !(f.domain() == domain.base())) {
    throw Error(ErrorCode::BaseMismatch, "morphism does not match the monoids");
  }
  if (!(codomain.fiber() == domain.fiber())) throw Error(ErrorCode::FiberMismatch, "monoids use different fibers");
  std::map<ClassRef, ClassRef> out;
  const std::size_t n_max = std::min(codomain.n_max(), domain.n_max());
  for (std::size_t n = 0; n <= n_max; ++n) {
    for (const auto& c : codomain.classes(n)) {
      out[c.ref] = domain.classify(n, pullback_voltage(f, c.representative));
    }
  }
  return out;
}

}  // namespace bundleforge
