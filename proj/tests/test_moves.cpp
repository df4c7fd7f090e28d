#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "plumb/moves.hpp"

using namespace plumb;
using fixtures::chain;

namespace {

std::vector<std::int64_t> weights(const PlumbingGraph& g) {
  std::vector<std::int64_t> out;
  for (int id : path_order(g)) out.push_back(g.vertex(id).self_int.value());
  return out;
}

ErrorCode code_of(const auto& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::ValidationError;
}

}  // namespace

TEST(BlowUpEdge, A4CentralEdge) {
  const auto r = blow_up_edge(chain({2, 2, 2, 2}), {2, 3});
  EXPECT_EQ(r.graph.size(), 5u);
  EXPECT_EQ(weights(r.graph), (std::vector<std::int64_t>{-2, -3, -1, -3, -2}));
  EXPECT_EQ(r.record.vertex, 5);
  EXPECT_EQ(r.graph, fixtures::load("a4_blowup.json"));
}

TEST(BlowUpEdge, TwoChain) {
  EXPECT_EQ(weights(blow_up_edge(chain({2, 2}), {1, 2}).graph), (std::vector<std::int64_t>{-3, -1, -3}));
  EXPECT_EQ(code_of([] { blow_up_edge(chain({2, 2, 2}), {1, 3}); }), ErrorCode::NoSuchEdge);
}

TEST(BlowUpPoint, Examples) {
  const PlumbingGraph one({{1, 0, SelfInt(-2)}}, {});
  EXPECT_EQ(weights(blow_up_point(one, 1).graph), (std::vector<std::int64_t>{-3, -1}));
  EXPECT_EQ(code_of([&] { blow_up_point(one, 4); }), ErrorCode::NoSuchVertex);
  const auto twice = blow_up_point(blow_up_point(one, 1).graph, 1).graph;
  EXPECT_EQ(twice.vertex(1).self_int, SelfInt(-4));
  EXPECT_EQ(twice.vertex(2).self_int, SelfInt(-1));
  EXPECT_EQ(twice.vertex(3).self_int, SelfInt(-1));
  EXPECT_EQ(twice.valency(1), 2);
}

TEST(BlowUp, RejectsInfinite) {
  const PlumbingGraph g({{1, 0, SelfInt::inf()}, {2, 0, SelfInt(-2)}}, {{1, 2}});
  EXPECT_EQ(code_of([&] { blow_up_point(g, 1); }), ErrorCode::InfiniteWeight);
  EXPECT_EQ(code_of([&] { blow_up_edge(g, {1, 2}); }), ErrorCode::InfiniteWeight);
}

TEST(BlowDown, Examples) {
  const auto up = blow_up_edge(chain({2, 2}), {1, 2}).graph;
  const auto down = blow_down(up, 3);
  EXPECT_EQ(down.graph, chain({2, 2}));
  EXPECT_FALSE(down.record.multi_edge);
  EXPECT_EQ(code_of([] { blow_down(chain({2, 2}), 1); }), ErrorCode::NotContractible);
  // valency 3 (-1)-curve
  const PlumbingGraph s({{1, 0, SelfInt(-1)}, {2, 0, SelfInt(-2)}, {3, 0, SelfInt(-2)}, {4, 0, SelfInt(-2)}},
                        {{1, 2}, {1, 3}, {1, 4}});
  EXPECT_EQ(code_of([&] { blow_down(s, 1); }), ErrorCode::NotContractible);
  // positive genus
  const PlumbingGraph e({{1, 1, SelfInt(-1)}}, {});
  EXPECT_EQ(code_of([&] { blow_down(e, 1); }), ErrorCode::NotContractible);
}

TEST(BlowDown, MultiEdgeIsRecorded) {
  const PlumbingGraph tri({{1, 0, SelfInt(-2)}, {2, 0, SelfInt(-2)}, {3, 0, SelfInt(-1)}}, {{1, 2}, {1, 3}, {2, 3}});
  const auto r = blow_down(tri, 3);
  EXPECT_TRUE(r.record.multi_edge);
  EXPECT_EQ(r.graph.edge_multiplicity(1, 2), 2);
  EXPECT_EQ(code_of([&] { full_blow_down(tri); }), ErrorCode::MultiEdgeCreated);
}

TEST(FullBlowDown, Examples) {
  const auto a = full_blow_down(fixtures::load("a4_blowup.json"));
  EXPECT_EQ(a.graph, chain({2, 2, 2, 2}));
  EXPECT_EQ(a.moves.size(), 1u);

  const auto b = full_blow_down(chain({2, 3, 2}));
  EXPECT_EQ(b.graph, chain({2, 3, 2}));
  EXPECT_TRUE(b.moves.empty());

  const auto c = full_blow_down(chain({1, 2, 1}));
  ASSERT_EQ(c.graph.size(), 1u);
  EXPECT_EQ(c.graph.vertices()[0].self_int, SelfInt(0));
  EXPECT_EQ(c.moves.size(), 2u);
}

TEST(Replay, ReproducesMoves) {
  const auto g = fixtures::load("a4_blowup.json");
  const auto seq = full_blow_down(g);
  EXPECT_EQ(replay(g, seq.moves), seq.graph);
  EXPECT_EQ(to_string(seq.moves[0]), "blowdown 5");
  EXPECT_EQ(contractible_vertices(g), std::vector<int>{5});
}
