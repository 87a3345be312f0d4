#include "zxmbqc/serialize.hpp"
#include "zxmbqc/simplify.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace zxmbqc;

namespace {

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, DiagramRoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    ZxDiagram d = zxtest::random_diagram(rng, 1 + zxtest::below(rng, 6), zxtest::below(rng, 8));
    d.spider(d.spiders().begin()->first).parametric = true;
    const ZxDiagram back = diagram_from_json(Json::parse(diagram_to_json(d).dump()));
    EXPECT_EQ(compacted(back), compacted(d));
    EXPECT_TRUE(diagrams_equivalent(back, d));
  }
}

TEST(Json, CircuitRoundTrip) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 50; ++i) {
    const Circuit c = zxtest::random_circuit(rng, 1 + zxtest::below(rng, 3), zxtest::below(rng, 8));
    const Circuit back = circuit_from_json(Json::parse(circuit_to_json(c).dump()));
    EXPECT_EQ(back.width, c.width);
    EXPECT_EQ(back.gates, c.gates);
  }
  const Json j = circuit_to_json(Circuit{1, {Gate::P(0, Phase(3, 2))}});
  EXPECT_EQ(j.dump(), R"({"width":1,"gates":[{"op":"P","qubits":[0],"phase":"3/2"}]})");
}

TEST(Json, PatternRoundTrip) {
  for (const MeasurementPattern& p : {dj_pattern_3q(BooleanFunction(3, 23)), lattice_pattern_3q(BooleanFunction(3, 15)),
                                      dj_pattern_2q(BooleanFunction(2, 5))}) {
    const MeasurementPattern back = pattern_from_json(Json::parse(pattern_to_json(p).dump()));
    EXPECT_TRUE(same_structure(back, p));
    EXPECT_EQ(back.qubits, p.qubits);
    EXPECT_EQ(back.readouts, p.readouts);
  }
}

TEST(Json, PatternDefaults) {
  const MeasurementPattern p = pattern_from_json(Json::parse(R"({"qubits":[{"id":4,"angle":"1/4"},{"id":2,"angle":0}],
                                                                 "edges":[[4,2]]})"));
  EXPECT_EQ(p.order, (std::vector<QubitId>{2, 4}));
  EXPECT_EQ(p.qubits.at(4).angle, Phase(1, 4));
  EXPECT_EQ(p.edges.count({2, 4}), 1u);
}

TEST(Json, ParseErrors) {
  EXPECT_THROW(diagram_from_json(Json::parse("{}")), ParseError);
  EXPECT_THROW(diagram_from_json(Json::parse(R"({"spiders":[{"id":0,"kind":"Y","phase":"0"}],"edges":[]})")),
               ParseError);
  EXPECT_THROW(diagram_from_json(Json::parse(R"({"spiders":[{"id":0,"kind":"Z","phase":"x"}],"edges":[]})")),
               ParseError);
  EXPECT_THROW(diagram_from_json(Json::parse(R"({"spiders":[{"id":0,"kind":"Z","phase":"0"}],"edges":[{"a":0,"b":0}]})")),
               ParseError);
  EXPECT_THROW(diagram_from_json(Json::parse(R"({"spiders":[],"edges":[],"inputs":[3]})")), ParseError);
  EXPECT_THROW(circuit_from_json(Json::parse(R"({"width":1,"gates":[{"op":"T","qubits":[0]}]})")), ParseError);
  EXPECT_THROW(circuit_from_json(Json::parse(R"({"width":1,"gates":[{"op":"H","qubits":[1]}]})")), ParseError);
  EXPECT_THROW(circuit_from_json(Json::parse(R"({"width":"1","gates":[]})")), ParseError);
  EXPECT_THROW(pattern_from_json(Json::parse(R"({"qubits":[{"id":0,"angle":"0"}],"edges":[[0]]})")), ParseError);
  EXPECT_THROW(pattern_from_json(Json::parse(R"({"qubits":[{"id":0,"angle":"0","basis":"Y"}],"edges":[]})")),
               ParseError);
  EXPECT_THROW(pattern_from_json(Json::parse(R"({"qubits":[{"id":0,"angle":"0"}],"edges":[[0,1]]})")), ParseError);
}

TEST(Json, Steps) {
  const SimplifyResult r = simplify_mbqc(plug_plus_states(to_zx(Circuit{1, {Gate::P(0, Phase(1, 4))}})));
  const Json j = steps_to_json(r.steps);
  ASSERT_EQ(j.size(), r.steps.size());
  for (const Json& s : j) {
    EXPECT_TRUE(s["rule"].is_string());
    EXPECT_TRUE(s["before"].is_array());
    EXPECT_TRUE(s["after"].is_array());
  }
}

TEST(Dot, PatternCounts) {
  const std::string dot = to_dot(dj_pattern_3q(BooleanFunction(3, 23)));
  EXPECT_EQ(dot.rfind("graph pattern {", 0), 0u);
  EXPECT_EQ(count(dot, "shape=ellipse"), 11u);
  EXPECT_EQ(count(dot, " -- "), 12u);
  EXPECT_EQ(count(dot, "style=dashed"), 12u);
  EXPECT_NE(dot.find("label=\"T3\\n1/2pi\""), std::string::npos);
  EXPECT_NE(dot.find("label=\"T2\\n0\""), std::string::npos);
}

TEST(Dot, DiagramShapes) {
  const std::string dot = to_dot(to_zx(Circuit{2, {Gate::CX(0, 1), Gate::H(0)}}));
  EXPECT_EQ(dot.rfind("graph zx {", 0), 0u);
  EXPECT_EQ(count(dot, "shape=box"), 1u);
  EXPECT_EQ(count(dot, "style=dashed"), 1u);
  EXPECT_EQ(count(dot, "shape=point"), 4u);
}

TEST(Dot, EmptyGraphs) {
  EXPECT_EQ(to_dot(ZxDiagram{}), "graph zx {\n}\n");
  EXPECT_EQ(to_dot(MeasurementPattern{}), "graph pattern {\n}\n");
}
