#include "bundleforge/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bundleforge/error.hpp"

namespace bundleforge {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

/// Labels may be written as strings or integers.
Label label_from(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad("label must be a string or an integer");
}

std::pair<Label, Label> edge_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) bad("edge key \"" + key + "\" is not \"v,w\"");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

std::string dot_id(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& [a, b] : g.labeled_edges()) edges.push_back({a, b});
  return Json{{"vertices", g.vertices()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const Json& vs = field(j, "vertices");
  const Json& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) bad("vertices and edges must be arrays");
  std::vector<Label> labels;
  for (const auto& v : vs) labels.push_back(label_from(v));
  std::vector<std::pair<Label, Label>> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) bad("edge must be a pair");
    edges.emplace_back(label_from(e[0]), label_from(e[1]));
  }
  return Graph(std::move(labels), edges);
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (const auto& row : m.to_rows()) {
    Json r = Json::array();
    for (double x : row) {
      if (x == std::floor(x) && std::abs(x) < 1e15) {
        r.push_back(static_cast<long long>(x));
      } else {
        r.push_back(x);
      }
    }
    rows.push_back(r);
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Matrix matrix_from_json(const Json& j) {
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) bad("entries must be an array");
  std::vector<std::vector<double>> rows;
  for (const auto& r : entries) {
    if (!r.is_array()) bad("matrix row must be an array");
    std::vector<double> row;
    for (const auto& x : r) {
      if (!x.is_number()) bad("matrix entry must be a number");
      row.push_back(x.get<double>());
    }
    rows.push_back(std::move(row));
  }
  Matrix m = Matrix::from_rows(rows);
  if (j.contains("rows") && j.at("rows") != m.rows()) bad("row count disagrees with entries");
  if (j.contains("cols") && j.at("cols") != m.cols()) bad("column count disagrees with entries");
  return m;
}

Json to_json(const GraphMorphism& f) {
  Json map = Json::object();
  for (std::size_t v = 0; v < f.domain().order(); ++v) {
    map[f.domain().label(v)] = f.codomain().label(f(v));
  }
  return Json{{"domain", to_json(f.domain())}, {"codomain", to_json(f.codomain())}, {"map", map}};
}

GraphMorphism morphism_from_json(const Json& j, const Graph& domain, const Graph& codomain) {
  const Json& m = field(j, "map");
  if (!m.is_object()) bad("map must be an object");
  std::map<Label, Label> map;
  for (const auto& [k, v] : m.items()) map[k] = label_from(v);
  return GraphMorphism::from_labels(domain, codomain, map);
}

Json to_json(const CoveringVoltage& cv) {
  Json sigma = Json::object();
  const Graph& base = cv.base();
  for (auto [v, w] : base.edges()) {
    Json perm = Json::array();
    for (std::size_t x : cv.at(v, w)) perm.push_back(x + 1);
    sigma[base.label(v) + "," + base.label(w)] = perm;
  }
  return Json{{"k", cv.k()}, {"sigma", sigma}};
}

CoveringVoltage covering_voltage_from_json(const Json& j, const Graph& base) {
  const Json& k = field(j, "k");
  const Json& sigma = field(j, "sigma");
  if (!k.is_number_unsigned() || !sigma.is_object()) bad("k must be a count and sigma an object");
  CoveringVoltage cv(base, k.get<std::size_t>());
  for (const auto& [key, value] : sigma.items()) {
    auto [v, w] = edge_key(key);
    if (!value.is_array()) bad("sigma entry must be an array");
    Perm p;
    for (const auto& x : value) {
      if (!x.is_number_unsigned() || x.get<std::size_t>() == 0) bad("sigma uses 1-based entries");
      p.push_back(x.get<std::size_t>() - 1);
    }
    cv.set(base.index_of(v), base.index_of(w), p);
  }
  cv.validate();
  return cv;
}

Json to_json(const FiberVoltage& fv) {
  Json phi = Json::object();
  const Graph& base = fv.base();
  const Graph& fiber = fv.fiber();
  for (auto [v, w] : base.edges()) {
    Json images = Json::array();
    for (std::size_t x : fv.at(v, w)) images.push_back(fiber.label(x));
    phi[base.label(v) + "," + base.label(w)] = images;
  }
  return Json{{"base", to_json(base)}, {"fiber", to_json(fiber)}, {"phi", phi}};
}

FiberVoltage fiber_voltage_from_json(const Json& j) {
  Graph base = graph_from_json(field(j, "base"));
  Graph fiber = graph_from_json(field(j, "fiber"));
  FiberVoltage fv(base, fiber);
  if (j.contains("phi")) {
    const Json& phi = j.at("phi");
    if (!phi.is_object()) bad("phi must be an object");
    for (const auto& [key, value] : phi.items()) {
      auto [v, w] = edge_key(key);
      if (!value.is_array() || value.size() != fiber.order()) bad("phi entry must list one image per fiber vertex");
      Perm p;
      for (const auto& x : value) p.push_back(fiber.index_of(label_from(x)));
      fv.set(v, w, p);
    }
  }
  return fv;
}

Json to_json(const FiniteGroup& g) {
  Json table = Json::array();
  for (std::size_t a = 0; a < g.order(); ++a) {
    Json row = Json::array();
    for (std::size_t b = 0; b < g.order(); ++b) row.push_back(g.label(g.mul(a, b)));
    table.push_back(row);
  }
  return Json{{"elements", g.elements()}, {"table", table}};
}

FiniteGroup group_from_json(const Json& j) {
  const Json& el = field(j, "elements");
  const Json& tb = field(j, "table");
  if (!el.is_array() || !tb.is_array()) bad("elements and table must be arrays");
  std::vector<Label> labels;
  for (const auto& x : el) labels.push_back(label_from(x));
  std::vector<std::vector<Label>> table;
  for (const auto& row : tb) {
    if (!row.is_array()) bad("table row must be an array");
    std::vector<Label> r;
    for (const auto& x : row) r.push_back(label_from(x));
    table.push_back(std::move(r));
  }
  return FiniteGroup::from_label_table(std::move(labels), table);
}

Json to_json(const GroupHom& h) {
  Json map = Json::object();
  for (std::size_t a = 0; a < h.domain().order(); ++a) map[h.domain().label(a)] = h.codomain().label(h(a));
  return Json{{"domain", to_json(h.domain())}, {"codomain", to_json(h.codomain())}, {"map", map}};
}

GroupHom hom_from_json(const Json& j) {
  FiniteGroup domain = group_from_json(field(j, "domain"));
  FiniteGroup codomain = group_from_json(field(j, "codomain"));
  const Json& m = field(j, "map");
  if (!m.is_object()) bad("map must be an object");
  std::map<Label, Label> map;
  for (const auto& [k, v] : m.items()) map[k] = label_from(v);
  return GroupHom::from_labels(std::move(domain), std::move(codomain), map);
}

Json typed_edges_json(const Graph& total, const std::vector<TypedEdge>& edges,
                      const std::array<std::size_t, 3>& counts) {
  Json list = Json::array();
  for (const auto& e : edges) list.push_back({total.label(e.a), total.label(e.b), to_string(e.kind)});
  return Json{{"I", counts[0]}, {"II", counts[1]}, {"III", counts[2]}, {"edges", list}};
}

std::string format_spectrum(const Spectrum& s) {
  std::string out;
  char buf[64];
  for (std::size_t i = 0; i < s.size(); ++i) {
    double x = s.values[i];
    if (std::abs(x) < 5e-7) x = 0.0;
    std::snprintf(buf, sizeof buf, "%.6f", x);
    if (i) out += ", ";
    out += buf;
  }
  return out;
}

std::string to_dot(const Graph& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << dot_id(name) << " {\n";
  for (const auto& v : g.vertices()) out << "  " << dot_id(v) << ";\n";
  for (const auto& [a, b] : g.labeled_edges()) out << "  " << dot_id(a) << " -- " << dot_id(b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace bundleforge
