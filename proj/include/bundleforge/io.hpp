#pragma once

#include <string>

#include <json.hpp>

#include "bundleforge/bundle.hpp"
#include "bundleforge/graph.hpp"
#include "bundleforge/groups.hpp"
#include "bundleforge/matrix.hpp"
#include "bundleforge/products.hpp"
#include "bundleforge/pullback.hpp"

namespace bundleforge {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file. Throws ParseError.
Json read_json_file(const std::string& path);
/// Parses inline JSON text. Throws ParseError.
Json parse_json(const std::string& text);

// All from_json readers throw ParseError on schema violations; semantic
// errors (duplicate vertices, invalid voltages...) keep their own codes.

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"domain"?: graph, "codomain": graph, "map": {"x": "y"}}.
Json to_json(const GraphMorphism& f);
GraphMorphism morphism_from_json(const Json& j, const Graph& domain, const Graph& codomain);

/// {"k": k, "sigma": {"v,w": [1-based one-line]}}, one orientation per edge.
Json to_json(const CoveringVoltage& cv);
CoveringVoltage covering_voltage_from_json(const Json& j, const Graph& base);

/// {"base", "fiber", "phi": {"v,w": [images of the fiber vertices in order]}}.
Json to_json(const FiberVoltage& fv);
FiberVoltage fiber_voltage_from_json(const Json& j);

/// {"elements": [...], "table": [[labels]]}.
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// {"domain": group, "codomain": group, "map": {"a": "b"}}.
Json to_json(const GroupHom& h);
GroupHom hom_from_json(const Json& j);

/// {"I": n1, "II": n2, "III": n3, "edges": [[x, y, kind], ...]}.
Json typed_edges_json(const Graph& total, const std::vector<TypedEdge>& edges,
                      const std::array<std::size_t, 3>& counts);

/// Descending values with six decimals, comma separated.
std::string format_spectrum(const Spectrum& s);

/// Undirected DOT with node ids equal to labels.
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace bundleforge
