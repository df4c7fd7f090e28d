#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plumb/graph_io.hpp"
#include "plumb/report.hpp"

using namespace plumb;

namespace {

Error error_of(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "expected an error";
  return Error(ErrorCode::ValidationError, "");
}

}  // namespace

TEST(ParseGraph, Basic) {
  const auto g = parse_graph(R"({"vertices": [{"id": 1, "genus": 0, "self_int": -2},
                                               {"id": 2, "genus": 1, "self_int": "inf"}],
                                  "edges": [[1, 2]]})");
  EXPECT_EQ(g.size(), 2u);
  EXPECT_TRUE(g.vertex(2).self_int.is_inf());
  EXPECT_EQ(g.vertex(2).genus, 1);
  EXPECT_EQ(g.edges().size(), 1u);
}

TEST(ParseGraph, EdgesOptionalForOneVertex) {
  EXPECT_EQ(parse_graph(R"({"vertices": [{"id": 3, "genus": 0, "self_int": -5}]})").size(), 1u);
}

TEST(ParseGraph, SyntaxErrorHasLocation) {
  const auto e = error_of("{\n  \"vertices\": [\n    {\"id\": 1,}\n  ]\n}");
  EXPECT_EQ(e.code(), ErrorCode::ParseError);
  EXPECT_EQ(std::string(e.what()).rfind("line 3, column 14:", 0), 0u) << e.what();
}

TEST(ParseGraph, ShapeErrorsNamePath) {
  auto e = error_of(R"({"vertices": [{"id": 1, "genus": 0}]})");
  EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  EXPECT_NE(std::string(e.what()).find("/vertices/0"), std::string::npos) << e.what();
  e = error_of(R"({"vertices": [{"id": 1, "genus": 0, "self_int": "big"}]})");
  EXPECT_NE(std::string(e.what()).find("/vertices/0/self_int"), std::string::npos) << e.what();
  e = error_of(R"({"vertices": [{"id": 1, "genus": 0, "self_int": -2}], "edges": [[1]]})");
  EXPECT_NE(std::string(e.what()).find("/edges/0"), std::string::npos) << e.what();
  e = error_of(R"([1, 2])");
  EXPECT_EQ(e.code(), ErrorCode::ValidationError);
}

TEST(ParseGraph, GraphErrorsNameVertices) {
  const auto e = error_of(R"({"vertices": [{"id": 1, "genus": 0, "self_int": -2},
                                            {"id": 2, "genus": 0, "self_int": -2}], "edges": []})");
  EXPECT_EQ(e.code(), ErrorCode::ValidationError);
  EXPECT_NE(std::string(e.what()).find("Disconnected"), std::string::npos);
  EXPECT_EQ(e.vertices(), (std::vector<int>{1, 2}));
}

TEST(EmitGraph, RoundTrip) {
  for (const char* f : {"a4.json", "a4_blowup.json", "star.json", "va_comb.json", "vb_comb.json",
                        "genus1_linear.json", "inf_linear.json", "triangle.json"}) {
    const auto g = fixtures::load(f);
    const auto text = emit_graph(g);
    EXPECT_EQ(parse_graph(text), g) << f;
    EXPECT_EQ(emit_graph(parse_graph(text)), text) << f;
  }
}

TEST(EmitGraph, CanonicalFilesAreFixedPoints) {
  for (const char* f : {"a4.json", "a4_blowup.json", "star.json"})
    EXPECT_EQ(emit_graph(fixtures::load(f)), read_file(std::string(PLUMB_TEST_DATA) + "/" + f)) << f;
}

TEST(ReadFile, Missing) { EXPECT_THROW(read_file("/nonexistent/file.json"), std::runtime_error); }

TEST(Report, FieldOrderAndContent) {
  const auto r = analyze_report(fixtures::load("a4.json"));
  std::vector<std::string> keys;
  for (const auto& [k, v] : r.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"graph", "shape", "flags", "theorem", "verdicts", "presentation"}));
  EXPECT_EQ(r["theorem"]["applied"], "c");
  ASSERT_EQ(r["verdicts"].size(), 4u);
  for (const auto& v : r["verdicts"]) {
    EXPECT_EQ(v["status"], "Finite");
    EXPECT_EQ(v["order"], "5");
  }
}

TEST(Report, HypothesisFailuresAreData) {
  AnalyzeOptions opt;
  opt.theorem = "a";
  opt.oracle = true;
  const auto r = analyze_report(fixtures::load("a4_blowup.json"), opt);
  ASSERT_EQ(r["theorem"]["errors"].size(), 1u);
  EXPECT_EQ(r["theorem"]["errors"][0]["code"], "HypothesisViolated");
  EXPECT_TRUE(r["verdicts"].empty());
  EXPECT_EQ(r["oracle"]["group_order"], 5);
  EXPECT_EQ(r["oracle"]["elements"][4]["vertex"], 5);
  EXPECT_EQ(r["oracle"]["elements"][4]["order"], 1);
}

TEST(Report, OracleConfirmsVa) {
  AnalyzeOptions opt;
  opt.oracle = true;
  const auto r = analyze_report(fixtures::load("va_comb.json"), opt);
  EXPECT_EQ(r["oracle"]["group_order"], 24);
  EXPECT_EQ(r["oracle"]["elements"][0]["order"], 4);
  EXPECT_EQ(r["oracle"]["elements"][0]["check"], "consistent");
}

TEST(Report, PrettyMentionsVerdicts) {
  const auto text = render_pretty(analyze_report(fixtures::load("a4.json")));
  EXPECT_NE(text.find("g1: Finite(5)"), std::string::npos) << text;
}
