#include "bundleforge/groups.hpp"

#include <algorithm>
#include <numeric>

#include "bundleforge/error.hpp"
#include "bundleforge/products.hpp"

namespace bundleforge {

namespace {

std::string pair_name(const FiniteGroup& g, std::size_t a, std::size_t b) {
  return "(" + g.label(a) + "," + g.label(b) + ")";
}

}  // namespace

FiniteGroup::FiniteGroup(std::vector<Label> elements, std::vector<std::vector<std::size_t>> table)
    : labels_(std::move(elements)), table_(std::move(table)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty set");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(labels_[i], i).second) throw Error(ErrorCode::NotAGroup, "duplicate element " + labels_[i]);
  }
  if (table_.size() != n) throw Error(ErrorCode::NotAGroup, "closure: table has wrong shape");
  for (const auto& row : table_) {
    if (row.size() != n) throw Error(ErrorCode::NotAGroup, "closure: table has wrong shape");
    for (std::size_t x : row)
      if (x >= n) throw Error(ErrorCode::NotAGroup, "closure: product outside the set");
  }

  std::optional<std::size_t> e;
  for (std::size_t i = 0; i < n && !e; ++i) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[i][x] == x && table_[x][i] == x;
    if (ok) e = i;
  }
  if (!e) throw Error(ErrorCode::NotAGroup, "identity: no two-sided identity");
  identity_ = *e;

  inv_.assign(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table_[a][b] == identity_ && table_[b][a] == identity_) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] == n) throw Error(ErrorCode::NotAGroup, "inverse: " + labels_[a] + " has no inverse");
  }

  // Exhaustive below the bound; above it, products with a sample of elements.
  std::vector<std::size_t> sample(n);
  std::iota(sample.begin(), sample.end(), std::size_t{0});
  if (n > kExhaustiveAssociativityBound) {
    std::vector<std::size_t> few;
    for (std::size_t i = 0; i < n; i += n / 16 + 1) few.push_back(i);
    sample = few;
  }
  for (std::size_t a : sample)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c : sample) {
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
          throw Error(ErrorCode::NotAGroup,
                      "associativity: (" + labels_[a] + "," + labels_[b] + "," + labels_[c] + ")");
        }
      }
}

FiniteGroup FiniteGroup::from_label_table(std::vector<Label> elements,
                                          const std::vector<std::vector<Label>>& table) {
  std::unordered_map<Label, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  std::vector<std::vector<std::size_t>> t;
  for (const auto& row : table) {
    std::vector<std::size_t> r;
    for (const auto& x : row) {
      auto it = index.find(x);
      if (it == index.end()) throw Error(ErrorCode::NotAGroup, "closure: " + x + " is not an element");
      r.push_back(it->second);
    }
    t.push_back(std::move(r));
  }
  return FiniteGroup(std::move(elements), std::move(t));
}

std::optional<std::size_t> FiniteGroup::find(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::index_of(const Label& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw Error(ErrorCode::NotAGroup, label + " is not an element");
  return it->second;
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
  std::size_t k = 1;
  for (std::size_t x = a; x != identity_; x = mul(x, a)) ++k;
  return k;
}

FiniteGroup cyclic(std::size_t n) {
  std::vector<Label> labels;
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t m = b.order();
  std::vector<Label> labels;
  for (const auto& x : a.elements())
    for (const auto& y : b.elements()) labels.push_back(pair_label(x, y));
  std::vector<std::vector<std::size_t>> table(labels.size(), std::vector<std::size_t>(labels.size()));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      table[i][j] = a.mul(i / m, j / m) * m + b.mul(i % m, j % m);
  return FiniteGroup(std::move(labels), std::move(table));
}

FiniteGroup symmetric_group(std::size_t n) {
  if (n == 0 || n > 9) throw Error(ErrorCode::NotAGroup, "symmetric group degree must be 1..9");
  std::vector<Perm> perms;
  Perm p = identity_perm(n);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::map<Perm, std::size_t> index;
  std::vector<Label> labels;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    index.emplace(perms[i], i);
    Label l;
    for (std::size_t x : perms[i]) l += std::to_string(x);
    labels.push_back(l);
  }
  std::vector<std::vector<std::size_t>> table(perms.size(), std::vector<std::size_t>(perms.size()));
  for (std::size_t i = 0; i < perms.size(); ++i)
    for (std::size_t j = 0; j < perms.size(); ++j) table[i][j] = index.at(compose(perms[i], perms[j]));
  return FiniteGroup(std::move(labels), std::move(table));
}

bool is_abelian(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.mul(a, b) != g.mul(b, a)) return false;
  return true;
}

std::vector<std::size_t> generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& s) {
  std::vector<char> in(g.order(), 0);
  std::vector<std::size_t> out{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t x : s) {
      std::size_t y = g.mul(out[i], x);
      if (!in[y]) {
        in[y] = 1;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup subgroup(const FiniteGroup& g, const std::vector<std::size_t>& elements) {
  std::vector<std::size_t> sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t i = 0; i < sorted.size(); ++i) pos.emplace(sorted[i], i);
  std::vector<Label> labels;
  std::vector<std::vector<std::size_t>> table;
  for (std::size_t a : sorted) {
    labels.push_back(g.label(a));
    std::vector<std::size_t> row;
    for (std::size_t b : sorted) {
      auto it = pos.find(g.mul(a, b));
      if (it == pos.end()) throw Error(ErrorCode::NotAGroup, "closure: subset is not closed");
      row.push_back(it->second);
    }
    table.push_back(std::move(row));
  }
  return FiniteGroup(std::move(labels), std::move(table));
}

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<std::size_t> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (map_.size() != domain_.order()) throw Error(ErrorCode::NotAHomomorphism, "map is not total");
  for (std::size_t x : map_)
    if (x >= codomain_.order()) throw Error(ErrorCode::NotAHomomorphism, "image outside the codomain");
  for (std::size_t a = 0; a < domain_.order(); ++a)
    for (std::size_t b = 0; b < domain_.order(); ++b)
      if (map_[domain_.mul(a, b)] != codomain_.mul(map_[a], map_[b])) {
        throw Error(ErrorCode::NotAHomomorphism, pair_name(domain_, a, b));
      }
}

GroupHom GroupHom::from_labels(FiniteGroup domain, FiniteGroup codomain, const std::map<Label, Label>& map) {
  std::vector<std::size_t> m;
  for (const auto& x : domain.elements()) {
    auto it = map.find(x);
    if (it == map.end()) throw Error(ErrorCode::NotAHomomorphism, "no image for " + x);
    m.push_back(codomain.index_of(it->second));
  }
  return GroupHom(std::move(domain), std::move(codomain), std::move(m));
}

GroupHom GroupHom::from_function(FiniteGroup domain, FiniteGroup codomain,
                                 const std::function<Label(const Label&)>& fn) {
  std::vector<std::size_t> m;
  for (const auto& x : domain.elements()) m.push_back(codomain.index_of(fn(x)));
  return GroupHom(std::move(domain), std::move(codomain), std::move(m));
}

std::vector<std::size_t> kernel(const GroupHom& h) {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < h.domain().order(); ++a)
    if (h(a) == h.codomain().identity()) out.push_back(a);
  return out;
}

bool is_surjective(const GroupHom& h) {
  std::vector<char> hit(h.codomain().order(), 0);
  for (std::size_t x : h.map()) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

GroupHom identity_hom(const FiniteGroup& g) {
  return GroupHom(g, g, identity_perm(g.order()));
}

std::vector<GroupHom> all_homomorphisms(const FiniteGroup& a, const FiniteGroup& b) {
  // Greedy generating set, smallest indices first.
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{a.identity()};
  for (std::size_t x = 0; x < a.order() && span.size() < a.order(); ++x) {
    if (!std::binary_search(span.begin(), span.end(), x)) {
      gens.push_back(x);
      span = generated_subgroup(a, gens);
    }
  }

  std::vector<GroupHom> out;
  std::vector<std::size_t> images(gens.size(), 0);
  while (true) {
    // Extend along words in the generators; reject on conflict.
    std::vector<std::size_t> map(a.order(), b.order());
    map[a.identity()] = b.identity();
    std::vector<std::size_t> queue{a.identity()};
    bool ok = true;
    for (std::size_t i = 0; i < queue.size() && ok; ++i) {
      for (std::size_t g = 0; g < gens.size() && ok; ++g) {
        std::size_t y = a.mul(queue[i], gens[g]);
        std::size_t img = b.mul(map[queue[i]], images[g]);
        if (map[y] == b.order()) {
          map[y] = img;
          queue.push_back(y);
        } else if (map[y] != img) {
          ok = false;
        }
      }
    }
    if (ok) {
      try {
        out.emplace_back(a, b, map);
      } catch (const Error&) {
      }
    }
    std::size_t k = gens.size();
    while (k > 0 && ++images[k - 1] == b.order()) images[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

SubdirectGroup subdirect_group(const GroupHom& ea, const GroupHom& eb) {
  if (!(ea.codomain() == eb.codomain())) throw Error(ErrorCode::ShapeMismatch, "epimorphisms have different targets");
  if (!is_surjective(ea) || !is_surjective(eb)) throw Error(ErrorCode::NotSurjective, "amalgamating map is not onto");
  const FiniteGroup& a = ea.domain();
  const FiniteGroup& b = eb.domain();
  const FiniteGroup& c = ea.codomain();

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos;
  std::vector<Label> labels;
  for (std::size_t x = 0; x < a.order(); ++x)
    for (std::size_t y = 0; y < b.order(); ++y)
      if (ea(x) == eb(y)) {
        pos.emplace(std::make_pair(x, y), pairs.size());
        pairs.emplace_back(x, y);
        labels.push_back(pair_label(a.label(x), b.label(y)));
      }
  std::vector<std::vector<std::size_t>> table(pairs.size(), std::vector<std::size_t>(pairs.size()));
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto it = pos.find({a.mul(pairs[i].first, pairs[j].first), b.mul(pairs[i].second, pairs[j].second)});
      if (it == pos.end()) throw Error(ErrorCode::Internal, "fiber product is not closed");
      table[i][j] = it->second;
    }
  FiniteGroup e(labels, std::move(table));

  std::vector<std::size_t> to_a, to_b, to_c;
  for (auto [x, y] : pairs) {
    to_a.push_back(x);
    to_b.push_back(y);
    to_c.push_back(ea(x));
  }
  SubdirectGroup out{e, pairs, GroupHom(e, a, to_a), GroupHom(e, b, to_b), c};

  auto fail = [](const std::string& what) { throw Error(ErrorCode::Internal, what); };
  if (!is_surjective(out.delta_a) || !is_surjective(out.delta_b)) fail("projections are not onto");
  if (e.order() * c.order() != a.order() * b.order()) fail("order is not |A||B|/|C|");
  // ker(delta_A) = 1 x ker(eB), ker(delta_B) = ker(eA) x 1.
  const auto ka = kernel(ea);
  const auto kb = kernel(eb);
  for (std::size_t i : kernel(out.delta_a)) {
    if (!std::binary_search(kb.begin(), kb.end(), pairs[i].second)) fail("ker(delta_A) is not ker(eB)");
  }
  if (kernel(out.delta_a).size() != kb.size() || kernel(out.delta_b).size() != ka.size()) {
    fail("kernel sizes disagree");
  }
  // E/(ker eA x ker eB) = C: the map to C is an onto homomorphism with exactly that kernel.
  GroupHom to_amalgam(e, c, to_c);
  const auto kq = kernel(to_amalgam);
  if (!is_surjective(to_amalgam) || kq.size() != ka.size() * kb.size()) fail("quotient is not the amalgam");
  for (std::size_t i : kq) {
    if (!std::binary_search(ka.begin(), ka.end(), pairs[i].first) ||
        !std::binary_search(kb.begin(), kb.end(), pairs[i].second)) {
      fail("quotient kernel is not ker(eA) x ker(eB)");
    }
  }
  return out;
}

}  // namespace bundleforge
