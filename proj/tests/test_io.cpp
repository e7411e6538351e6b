#include <doctest.h>

#include <functional>

#include "bundleforge/catalog.hpp"
#include "bundleforge/error.hpp"
#include "bundleforge/io.hpp"

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

}  // namespace

TEST_CASE("graph round trip") {
  for (const Graph& g : {mobius_ladder_m3(), cycle_graph(5), empty_graph(3), m62()}) {
    CHECK(graph_from_json(parse_json(to_json(g).dump())) == g);
  }
  Graph ints = graph_from_json(parse_json(R"({"vertices": [1, 2, 3], "edges": [[1, 2], [2, 3]]})"));
  CHECK(ints == path_graph(3));
}

TEST_CASE("matrix round trip") {
  Matrix a = adjacency_matrix(cycle_graph(4));
  Json j = to_json(a);
  CHECK(j.at("entries").dump() == "[[0,1,0,1],[1,0,1,0],[0,1,0,1],[1,0,1,0]]");
  CHECK(matrix_from_json(j) == a);
  Matrix f = Matrix::from_rows({{0.5, -1.25}, {2, 3}});
  CHECK(matrix_from_json(parse_json(to_json(f).dump())) == f);
}

TEST_CASE("morphism and voltage round trips") {
  GraphMorphism q = m3_projection();
  Json j = to_json(q);
  GraphMorphism back = morphism_from_json(j, graph_from_json(j.at("domain")), graph_from_json(j.at("codomain")));
  CHECK(back.map() == q.map());

  FiberVoltage fv = m3_voltage();
  CHECK(fiber_voltage_from_json(parse_json(to_json(fv).dump())) == fv);

  CoveringVoltage cv = covering_voltage(verify_kfold_covering(covering_c6_c3(), 2));
  CoveringVoltage cv2 = covering_voltage_from_json(parse_json(to_json(cv).dump()), cycle_graph(3));
  CHECK(cv2.sigma() == cv.sigma());
}

TEST_CASE("group and homomorphism round trips") {
  FiniteGroup s3 = symmetric_group(3);
  CHECK(group_from_json(to_json(s3)) == s3);
  GroupHom phi = phi_z6_z3();
  GroupHom back = hom_from_json(parse_json(to_json(phi).dump()));
  for (std::size_t a = 0; a < 6; ++a) CHECK(back(a) == phi(a));
}

TEST_CASE("parse errors") {
  CHECK(code_of([] { parse_json("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_json_file("/nonexistent/graph.json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { graph_from_json(parse_json(R"({"vertices": ["a"]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { graph_from_json(parse_json(R"({"vertices": ["a"], "edges": [["a"]]})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { graph_from_json(parse_json(R"({"vertices": [true], "edges": []})")); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { matrix_from_json(parse_json(R"({"entries": [[1, "x"]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { matrix_from_json(parse_json(R"({"rows": 3, "entries": [[1]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          covering_voltage_from_json(parse_json(R"({"k": 2, "sigma": {"1,2": [0, 1]}})"), cycle_graph(3));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          fiber_voltage_from_json(parse_json(R"({"base": {"vertices": [1,2], "edges": [[1,2]]},
                                                 "fiber": {"vertices": [1,2], "edges": [[1,2]]},
                                                 "phi": {"12": [2, 1]}})"));
        }) == ErrorCode::ParseError);
  // semantic errors keep their own codes
  CHECK(code_of([] { graph_from_json(parse_json(R"({"vertices": ["a", "a"], "edges": []})")); }) !=
        ErrorCode::ParseError);
}

TEST_CASE("formatting") {
  CHECK(format_spectrum(spectrum(adjacency_matrix(complete_graph(3)))) == "2.000000, -1.000000, -1.000000");
  CHECK(format_spectrum(spectrum(adjacency_matrix(path_graph(2)))) == "1.000000, -1.000000");
  CHECK(format_spectrum(spectrum(adjacency_matrix(empty_graph(1)))) == "0.000000");
  CHECK(to_dot(path_graph(2), "P2") == "graph \"P2\" {\n  \"1\";\n  \"2\";\n  \"1\" -- \"2\";\n}\n");
}
