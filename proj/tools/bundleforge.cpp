// bundleforge: command-line front end for the graph bundle library.

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bundleforge/bundle.hpp"
#include "bundleforge/catalog.hpp"
#include "bundleforge/cayley.hpp"
#include "bundleforge/error.hpp"
#include "bundleforge/io.hpp"
#include "bundleforge/ktheory.hpp"
#include "bundleforge/products.hpp"
#include "bundleforge/pullback.hpp"

using namespace bundleforge;

namespace {

enum Exit { kOk = 0, kFalse = 1, kInput = 2, kBudget = 3, kInternal = 4 };

struct Options {
  bool json = false;
  std::uint64_t budget = kDefaultSearchBudget;
  std::size_t n_max = kDefaultNMax;
  double tolerance = kSpectrumTolerance;
  std::string out;
  std::string case_name;
};

// Every verb writes its report here; --out redirects it to a file.
void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + opt.out);
  f << text;
  if (!text.empty() && text.back() != '\n') f << '\n';
}

void emit(const Options& opt, const Json& j) { emit(opt, j.dump(2)); }

[[noreturn]] void unknown_case(const std::string& name) {
  throw Error(ErrorCode::ParseError, "unknown case \"" + name + "\"");
}

std::vector<std::size_t> parse_elements(const FiniteGroup& g, const std::string& text) {
  std::vector<std::size_t> out;
  if (text.empty()) return out;
  if (text.front() == '[') {
    for (const auto& x : parse_json(text)) {
      out.push_back(g.index_of(x.is_string() ? x.get<std::string>() : x.dump()));
    }
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(g.index_of(item));
  return out;
}

Json labels_json(const FiniteGroup& g, const std::vector<std::size_t>& s) {
  Json out = Json::array();
  for (std::size_t x : s) out.push_back(g.label(x));
  return out;
}

std::string digest(const FiberVoltage& fv) {
  std::string out;
  for (auto [v, w] : fv.base().edges()) {
    const Perm& p = fv.at(v, w);
    if (is_identity(p)) continue;
    if (!out.empty()) out += " ";
    out += fv.base().label(v) + "," + fv.base().label(w) + ":[";
    for (std::size_t i = 0; i < p.size(); ++i) out += (i ? " " : "") + fv.fiber().label(p[i]);
    out += "]";
  }
  return out.empty() ? "id" : out;
}

// ---------------------------------------------------------------------------
// Named cases
// ---------------------------------------------------------------------------

struct BundleCase {
  Graph total;
  GraphMorphism projection;
  Graph fiber;
};

BundleCase bundle_case(const std::string& name) {
  if (name == "m3") return {mobius_ladder_m3(), m3_projection(), complete_graph(2)};
  if (name == "m62") {
    Graph t = m62();
    return {t, fold12_projection(t), complete_graph(2)};
  }
  if (name == "c6k2") {
    Graph t = c6k2_numbered();
    return {t, fold12_projection(t), complete_graph(2)};
  }
  if (name == "prism") {
    auto b = prism_bundle();
    return {b.total, b.projection, b.fiber};
  }
  if (name == "c6-c3-covering") return {cycle_graph(6), covering_c6_c3(), empty_graph(2)};
  if (name == "c6-over-c3-k2") return {cycle_graph(6), covering_c6_c3(), complete_graph(2)};
  unknown_case(name);
}

struct HomCase {
  GroupHom left;
  GroupHom right;
  std::vector<std::size_t> s1, s01, s02;
};

HomCase hom_case(const std::string& name) {
  if (name == "z2z3-z6") {
    auto a = phi_z2z3_z3();
    return {a, phi_z6_z3(), {1, 2}, {a.domain().index_of("(1,0)")}, {3}};
  }
  if (name == "z6-z6") return {phi_z6_z3(), phi_z6_z3(), {1, 2}, {3}, {3}};
  if (name == "identity-z3") return {identity_hom(cyclic(3)), identity_hom(cyclic(3)), {1, 2}, {}, {}};
  unknown_case(name);
}

Graph export_case(const std::string& name) {
  if (name == "boxplus-figure") return subdirect_product(prism_bundle(), m3_bundle()).total;
  if (name == "equalizer") {
    Graph t = c6k2_numbered();
    return equalizer_graph(m3_projection(), compose(covering_c6_c3(), fold12_projection(t)));
  }
  if (name == "z4-c4") return cayley_graph(cyclic(4), {1, 3});
  if (name == "z4-k4") return cayley_graph(cyclic(4), {1, 2, 3});
  if (name == "z2z3-z6") {
    auto c = hom_case(name);
    return verify_invariance(c.left, c.right, c.s1, c.s01, c.s02).cayley;
  }
  if (name == "c6" ) return cycle_graph(6);
  return bundle_case(name).total;
}

// ---------------------------------------------------------------------------
// Verbs
// ---------------------------------------------------------------------------

// Rounded to 9 places so reports do not depend on the eigensolver's last bits.
double rounded(double x) {
  double r = std::round(x * 1e9) / 1e9;
  return r == 0.0 ? 0.0 : r;
}

Json rounded_values(const std::vector<double>& xs) {
  Json out = Json::array();
  for (double x : xs) out.push_back(rounded(x));
  return out;
}

int run_product(const Options& opt, const std::string& left, const std::string& right, const std::string& kind) {
  Graph g1 = graph_from_json(read_json_file(left));
  Graph g2 = graph_from_json(read_json_file(right));
  bool strong = kind == "strong";
  if (!strong && kind != "cartesian") throw Error(ErrorCode::ParseError, "kind must be cartesian or strong");
  Graph g = strong ? strong_product(g1, g2) : cartesian_product(g1, g2);
  Spectrum s1 = spectrum(adjacency_matrix(g1));
  Spectrum s2 = spectrum(adjacency_matrix(g2));
  Spectrum formula = strong ? strong_spectrum(s1, s2) : cartesian_spectrum(s1, s2);
  Spectrum direct = spectrum(adjacency_matrix(g));
  bool agree = spectra_equal(formula, direct, opt.tolerance);
  if (opt.json) {
    emit(opt, Json{{"graph", to_json(g)}, {"spectrum", rounded_values(direct.values)}, {"formula_agrees", agree}});
  } else {
    emit(opt, describe(g1) + (strong ? " strong " : " cartesian ") + describe(g2) + ": " + std::to_string(g.order()) +
                  " vertices, " + std::to_string(g.size()) + " edges\nspectrum: " + format_spectrum(direct) +
                  "\nformula " + (agree ? "agrees" : "DISAGREES"));
  }
  return agree ? kOk : kFalse;
}

int run_bundle_verify(const Options& opt, const std::string& total_path, const std::string& proj_path,
                      const std::string& fiber_path) {
  BundleCase c = [&] {
    if (!opt.case_name.empty()) return bundle_case(opt.case_name);
    if (total_path.empty() || proj_path.empty() || fiber_path.empty()) {
      throw Error(ErrorCode::ParseError, "need --total, --proj and --fiber, or --case");
    }
    Graph total = graph_from_json(read_json_file(total_path));
    Json pj = read_json_file(proj_path);
    if (!pj.contains("codomain")) throw Error(ErrorCode::ParseError, "projection needs a \"codomain\" graph");
    Graph base = graph_from_json(pj.at("codomain"));
    return BundleCase{total, morphism_from_json(pj, total, base), graph_from_json(read_json_file(fiber_path))};
  }();
  try {
    GraphBundle b = verify_bundle(c.total, c.projection, c.fiber, std::nullopt, opt.budget);
    std::optional<bool> trivial;
    if (b.fiber.order() <= kFiberAutomorphismBound) trivial = is_trivial(b);
    const std::string summary = "valid " + describe(b.fiber) + "-bundle over " + describe(b.base());
    if (opt.json) {
      Json j{{"valid", true}, {"fiber", describe(b.fiber)}, {"base", describe(b.base())},
             {"vertices", b.total.order()}, {"edges", b.total.size()}};
      j["trivial"] = trivial ? Json(*trivial) : Json(nullptr);
      j["voltage"] = to_json(bundle_to_voltage(b))["phi"];
      emit(opt, j);
    } else {
      std::string text = summary;
      if (trivial) text += *trivial ? " (trivial)" : " (not trivial)";
      emit(opt, text);
    }
    return kOk;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::FiberNotIsomorphic:
      case ErrorCode::NotACovering:
      case ErrorCode::TransitionNotIso:
      case ErrorCode::LocalTrivialityFails:
      case ErrorCode::NotAMorphism:
      case ErrorCode::NotSurjective:
        if (opt.json) {
          emit(opt, Json{{"valid", false}, {"error", std::string(to_string(e.code()))}, {"detail", e.what()}});
        } else {
          emit(opt, std::string("not a bundle: ") + e.what());
        }
        return kFalse;
      default:
        throw;
    }
  }
}

int run_bundle_build(const Options& opt, const std::string& voltage_path) {
  FiberVoltage fv = [&] {
    if (opt.case_name == "m3") return m3_voltage();
    if (!opt.case_name.empty()) unknown_case(opt.case_name);
    if (voltage_path.empty()) throw Error(ErrorCode::ParseError, "need --voltage or --case");
    return fiber_voltage_from_json(read_json_file(voltage_path));
  }();
  GraphBundle b = voltage_bundle(fv);
  bool formula = bundle_adjacency(fv) == adjacency_matrix(b.total);
  if (opt.json) {
    emit(opt, Json{{"total", to_json(b.total)}, {"formula_matches", formula}});
  } else {
    emit(opt, describe(b.fiber) + "-bundle over " + describe(b.base()) + ": " + std::to_string(b.total.order()) +
                  " vertices, " + std::to_string(b.total.size()) + " edges; adjacency formula " +
                  (formula ? "matches" : "DIFFERS"));
  }
  return formula ? kOk : kFalse;
}

int run_pullback(const Options& opt, const std::string& morphism_path, const std::string& voltage_path) {
  std::optional<GraphMorphism> f;
  std::optional<FiberVoltage> fv;
  if (opt.case_name == "c6-c3-m3") {
    f = covering_c6_c3();
    fv = m3_voltage();
  } else if (!opt.case_name.empty()) {
    unknown_case(opt.case_name);
  } else {
    if (morphism_path.empty() || voltage_path.empty()) {
      throw Error(ErrorCode::ParseError, "need --morphism and --voltage, or --case");
    }
    Json mj = read_json_file(morphism_path);
    fv = fiber_voltage_from_json(read_json_file(voltage_path));
    f = morphism_from_json(mj, graph_from_json(mj.at("domain")), fv->base());
  }
  Pullback pb = pullback(*f, voltage_bundle(*fv));
  bool formula = pullback_adjacency(*f, *fv) == adjacency_matrix(pb.bundle.total);
  if (opt.json) {
    Json j = typed_edges_json(pb.bundle.total, pb.edges, pb.counts);
    j["vertices"] = pb.bundle.total.order();
    j["formula_matches"] = formula;
    j["voltage"] = to_json(pullback_voltage(*f, *fv))["phi"];
    emit(opt, j);
  } else {
    emit(opt, "pullback: " + std::to_string(pb.bundle.total.order()) + " vertices; edges I=" +
                  std::to_string(pb.counts[0]) + " II=" + std::to_string(pb.counts[1]) +
                  " III=" + std::to_string(pb.counts[2]) + "; voltage " + digest(pullback_voltage(*f, *fv)) +
                  "; adjacency formula " + (formula ? "matches" : "DIFFERS"));
  }
  return formula ? kOk : kFalse;
}

int run_subdirect(const Options& opt, const std::string& left, const std::string& right) {
  std::optional<FiberVoltage> a, b;
  if (opt.case_name == "boxplus-figure") {
    a = FiberVoltage(cycle_graph(3), complete_graph(2));
    b = m3_voltage();
  } else if (!opt.case_name.empty()) {
    unknown_case(opt.case_name);
  } else {
    if (left.empty() || right.empty()) throw Error(ErrorCode::ParseError, "need --left and --right, or --case");
    a = fiber_voltage_from_json(read_json_file(left));
    b = fiber_voltage_from_json(read_json_file(right));
  }
  GraphBundle sum = subdirect_product(voltage_bundle(*a), voltage_bundle(*b));
  bool formula = subdirect_adjacency(*a, *b) == adjacency_matrix(sum.total);
  if (opt.json) {
    emit(opt, Json{{"total", to_json(sum.total)}, {"fiber", describe(sum.fiber)}, {"formula_matches", formula}});
  } else {
    emit(opt, describe(sum.fiber) + "-bundle over " + describe(sum.base()) + ": " +
                  std::to_string(sum.total.order()) + " vertices, " + std::to_string(sum.total.size()) +
                  " edges; adjacency formula " + (formula ? "matches" : "DIFFERS"));
  }
  return formula ? kOk : kFalse;
}

int run_spectrum(const Options& opt, const std::string& graph_path, const std::string& matrix_path) {
  Matrix m;
  if (!opt.case_name.empty()) {
    m = adjacency_matrix(export_case(opt.case_name));
  } else if (!graph_path.empty()) {
    m = adjacency_matrix(graph_from_json(read_json_file(graph_path)));
  } else if (!matrix_path.empty()) {
    m = matrix_from_json(read_json_file(matrix_path));
  } else {
    throw Error(ErrorCode::ParseError, "need --graph, --matrix or --case");
  }
  Spectrum s = spectrum(m);
  if (opt.json) {
    Json groups = Json::array();
    for (auto [v, k] : s.grouped(opt.tolerance)) groups.push_back({{"value", rounded(v)}, {"multiplicity", k}});
    emit(opt, Json{{"values", rounded_values(s.values)}, {"grouped", groups}});
  } else {
    emit(opt, format_spectrum(s));
  }
  return kOk;
}

int run_cayley(const Options& opt, const std::string& group_path, const std::string& gens) {
  FiniteGroup g;
  std::string raw = gens;
  if (opt.case_name == "z4-c4") {
    g = cyclic(4);
    raw = "1,3";
  } else if (opt.case_name == "z4-k4") {
    g = cyclic(4);
    raw = "1,2,3";
  } else if (!opt.case_name.empty()) {
    unknown_case(opt.case_name);
  } else {
    if (group_path.empty()) throw Error(ErrorCode::ParseError, "need --group or --case");
    g = group_from_json(read_json_file(group_path));
  }
  NormalizedGenerators norm = normalize_generators(g, parse_elements(g, raw));
  Graph c = cayley_graph(g, norm.elements);
  if (opt.json) {
    emit(opt, Json{{"graph", to_json(c)},
                   {"name", describe(c)},
                   {"generators", labels_json(g, norm.elements)},
                   {"dropped_identity", norm.dropped_identity},
                   {"added_inverses", labels_json(g, norm.added_inverses)}});
  } else {
    std::string text = "Cay = " + describe(c) + " (" + std::to_string(c.order()) + " vertices, " +
                       std::to_string(c.size()) + " edges)";
    if (norm.dropped_identity) text += "\nnormalized: dropped the identity";
    if (!norm.added_inverses.empty()) {
      text += "\nnormalized: added inverses " + labels_json(g, norm.added_inverses).dump();
    }
    emit(opt, text);
  }
  return kOk;
}

HomCase hom_inputs(const Options& opt, const std::string& left, const std::string& right, const std::string& s1,
                   const std::string& s01, const std::string& s02) {
  if (!opt.case_name.empty()) return hom_case(opt.case_name);
  if (left.empty() || right.empty()) throw Error(ErrorCode::ParseError, "need --left and --right, or --case");
  GroupHom a = hom_from_json(read_json_file(left));
  GroupHom b = hom_from_json(read_json_file(right));
  return {a, b, normalize_generators(a.codomain(), parse_elements(a.codomain(), s1)).elements,
          normalize_generators(a.domain(), parse_elements(a.domain(), s01)).elements,
          normalize_generators(b.domain(), parse_elements(b.domain(), s02)).elements};
}

int run_subdirect_group(const Options& opt, const HomCase& c) {
  SubdirectGroup sg = subdirect_group(c.left, c.right);
  bool order_ok = sg.e.order() * sg.amalgam.order() == c.left.domain().order() * c.right.domain().order();
  if (opt.json) {
    emit(opt, Json{{"order", sg.e.order()}, {"elements", sg.e.elements()}, {"order_formula", order_ok}});
  } else {
    emit(opt, "E has " + std::to_string(sg.e.order()) + " elements: " + Json(sg.e.elements()).dump());
  }
  return order_ok ? kOk : kFalse;
}

int run_invariance(const Options& opt, const HomCase& c) {
  InvarianceReport r = verify_invariance(c.left, c.right, c.s1, c.s01, c.s02);
  if (opt.json) {
    emit(opt, Json{{"equal", r.equal},
                   {"vertices", r.cayley.order()},
                   {"edges", r.cayley.size()},
                   {"generators", labels_json(r.group.e, r.s_phi)}});
  } else {
    emit(opt, std::string(r.equal ? "equal" : "DIFFERENT") + ": Cayley graph of the subdirect group on " +
                  std::to_string(r.cayley.order()) + " vertices, generators " +
                  labels_json(r.group.e, r.s_phi).dump());
  }
  return r.equal ? kOk : kFalse;
}

int run_ktheory(const Options& opt, const std::string& base_path, const std::string& fiber_path,
                const std::string& compare) {
  Graph base, fiber;
  if (opt.case_name == "c3-k2") {
    base = cycle_graph(3);
    fiber = complete_graph(2);
  } else if (opt.case_name == "p3-k2") {
    base = path_graph(3);
    fiber = complete_graph(2);
  } else if (!opt.case_name.empty()) {
    unknown_case(opt.case_name);
  } else {
    if (base_path.empty() || fiber_path.empty()) throw Error(ErrorCode::ParseError, "need --base and --fiber, or --case");
    base = graph_from_json(read_json_file(base_path));
    fiber = graph_from_json(read_json_file(fiber_path));
  }
  KClassMonoid m = enumerate_bundle_classes(base, fiber, opt.n_max);

  std::optional<Verdict> verdict;
  if (!compare.empty()) {
    std::vector<ClassRef> refs;
    std::stringstream ss(compare);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "class must be n:id");
      ClassRef r{std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1))};
      if (r.n > m.n_max() || r.id >= m.classes(r.n).size()) throw Error(ErrorCode::ParseError, "no class " + item);
      refs.push_back(r);
    }
    if (refs.size() != 4) throw Error(ErrorCode::ParseError, "--compare takes a,b,c,d");
    verdict = grothendieck_equal(m, {refs[0], refs[1]}, {refs[2], refs[3]});
  }

  if (opt.json) {
    Json levels = Json::array();
    for (std::size_t n = 0; n <= m.n_max(); ++n) {
      Json reps = Json::array();
      for (const auto& c : m.classes(n)) {
        reps.push_back({{"class", c.ref.str()}, {"members", c.members}, {"voltage", digest(c.representative)}});
      }
      levels.push_back({{"n", n}, {"count", m.classes(n).size()}, {"classes", reps}});
    }
    Json table = Json::object();
    for (const auto& [key, value] : m.add_table()) table[key.first.str() + "+" + key.second.str()] = value.str();
    Json j{{"levels", levels}, {"add_table", table}};
    if (verdict) j["verdict"] = to_string(*verdict);
    emit(opt, j);
  } else {
    std::string text;
    for (std::size_t n = 0; n <= m.n_max(); ++n) {
      text += "n=" + std::to_string(n) + " classes=" + std::to_string(m.classes(n).size()) + "\n";
      for (const auto& c : m.classes(n)) {
        text += "  " + c.ref.str() + " members=" + std::to_string(c.members) + " " + digest(c.representative) + "\n";
      }
    }
    if (verdict) text += std::string("verdict: ") + to_string(*verdict) + "\n";
    emit(opt, text);
  }
  if (verdict == Verdict::False) return kFalse;
  return kOk;
}

int run_export(const Options& opt, const std::string& graph_path, const std::string& format) {
  Graph g;
  if (!opt.case_name.empty()) {
    g = export_case(opt.case_name);
  } else if (!graph_path.empty()) {
    g = graph_from_json(read_json_file(graph_path));
  } else {
    throw Error(ErrorCode::ParseError, "need --graph or --case");
  }
  if (format == "dot") {
    emit(opt, to_dot(g, opt.case_name.empty() ? "G" : opt.case_name));
  } else if (format == "json") {
    emit(opt, to_json(g));
  } else {
    throw Error(ErrorCode::ParseError, "format must be dot or json");
  }
  return kOk;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchBudgetExceeded:
    case ErrorCode::EnumerationBoundExceeded:
      return kBudget;
    case ErrorCode::Internal:
      return kInternal;
    default:
      return kInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph bundles, pullbacks, subdirect products and Cayley graphs"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("BUNDLEFORGE_BUDGET")) {
    try {
      opt.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "error: BUNDLEFORGE_BUDGET must be a count\n";
      return kInput;
    }
  }

  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", opt.json, "Machine-readable report");
    sub->add_option("--budget", opt.budget, "Isomorphism search node budget");
    sub->add_option("--n-max", opt.n_max, "Largest fiber power for K-theory");
    sub->add_option("--tolerance", opt.tolerance, "Spectrum comparison tolerance");
    sub->add_option("--out", opt.out, "Write the report to a file");
    sub->add_option("--case", opt.case_name, "Built-in example");
  };

  std::string left, right, kind = "cartesian", total, proj, fiber, voltage, morphism, graph, matrix, group, gens,
                           s1, s01, s02, base, compare, format = "dot";
  std::function<int()> action;

  auto* product = app.add_subcommand("product", "Cartesian or strong product with spectrum check");
  common(product);
  product->add_option("--left", left)->required();
  product->add_option("--right", right)->required();
  product->add_option("--kind", kind, "cartesian or strong");
  product->callback([&] { action = [&] { return run_product(opt, left, right, kind); }; });

  auto* build = app.add_subcommand("bundle-build", "Total space of a fiber voltage");
  common(build);
  build->add_option("--voltage", voltage);
  build->callback([&] { action = [&] { return run_bundle_build(opt, voltage); }; });

  auto* verify = app.add_subcommand("bundle-verify", "Check that a projection is a graph bundle");
  common(verify);
  verify->add_option("--total", total);
  verify->add_option("--proj", proj);
  verify->add_option("--fiber", fiber);
  verify->callback([&] { action = [&] { return run_bundle_verify(opt, total, proj, fiber); }; });

  auto* pb = app.add_subcommand("pullback", "Pullback of a voltage bundle with typed edges");
  common(pb);
  pb->add_option("--morphism", morphism);
  pb->add_option("--voltage", voltage);
  pb->callback([&] { action = [&] { return run_pullback(opt, morphism, voltage); }; });

  auto* sd = app.add_subcommand("subdirect", "Subdirect product of two voltage bundles");
  common(sd);
  sd->add_option("--left", left);
  sd->add_option("--right", right);
  sd->callback([&] { action = [&] { return run_subdirect(opt, left, right); }; });

  auto* spec = app.add_subcommand("spectrum", "Adjacency spectrum");
  common(spec);
  spec->add_option("--graph", graph);
  spec->add_option("--matrix", matrix);
  spec->callback([&] { action = [&] { return run_spectrum(opt, graph, matrix); }; });

  auto* cay = app.add_subcommand("cayley", "Cayley graph of a finite group");
  common(cay);
  cay->add_option("--group", group);
  cay->add_option("--gens", gens, "Comma list or JSON array of element labels");
  cay->callback([&] { action = [&] { return run_cayley(opt, group, gens); }; });

  auto* sg = app.add_subcommand("subdirect-group", "Subdirect product of two groups over a common quotient");
  common(sg);
  sg->add_option("--left", left);
  sg->add_option("--right", right);
  sg->callback([&] { action = [&] { return run_subdirect_group(opt, hom_inputs(opt, left, right, "", "", "")); }; });

  auto* kt = app.add_subcommand("ktheory", "Bundle classes, addition table and Grothendieck verdicts");
  common(kt);
  kt->add_option("--base", base);
  kt->add_option("--fiber", fiber);
  kt->add_option("--compare", compare, "a,b,c,d as n:id; decides a-b = c-d");
  kt->callback([&] { action = [&] { return run_ktheory(opt, base, fiber, compare); }; });

  auto* inv = app.add_subcommand("invariance-check", "Cayley graph of a subdirect group against the bundle sum");
  common(inv);
  inv->add_option("--left", left);
  inv->add_option("--right", right);
  inv->add_option("--s1", s1);
  inv->add_option("--s01", s01);
  inv->add_option("--s02", s02);
  inv->callback([&] { action = [&] { return run_invariance(opt, hom_inputs(opt, left, right, s1, s01, s02)); }; });

  auto* ex = app.add_subcommand("export", "Write a graph as DOT or JSON");
  common(ex);
  ex->add_option("--graph", graph);
  ex->add_option("--format", format, "dot or json");
  ex->callback([&] { action = [&] { return run_export(opt, graph, format); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInput;
  }
}
