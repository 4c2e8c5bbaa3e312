#include <gtest/gtest.h>

#include "cgt/error.hpp"
#include "cgt/graph_ops.hpp"
#include "cgt/oracle.hpp"
#include "cgt/tjoin.hpp"
#include "test_support.hpp"

namespace cgt {
namespace {

using testing::make_graph;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidInput;
}

TEST(MinTJoinNonneg, PathExample) {
  const auto g = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
  const auto r = min_tjoin_nonneg(g, TerminalSet{1, 3});
  EXPECT_EQ(r.join, (EdgeSet{1, 2}));
  EXPECT_EQ(r.weight, 2);
}

TEST(MinTJoinNonneg, EmptyTerminalSet) {
  const auto g = make_graph(3, {{1, 2, 4}, {2, 3, 0}});
  const auto r = min_tjoin_nonneg(g, {});
  EXPECT_TRUE(r.join.empty());
  EXPECT_EQ(r.weight, 0);
}

TEST(MinTJoinNonneg, StarExample) {
  const auto g = make_graph(4, {{4, 1, 1}, {4, 2, 1}, {4, 3, 1}});
  const auto r = min_tjoin_nonneg(g, TerminalSet{1, 2});
  EXPECT_EQ(r.join, (EdgeSet{1, 2}));
  EXPECT_EQ(r.weight, 2);
}

TEST(MinTJoinNonneg, Errors) {
  const auto g = make_graph(4, {{1, 2, 1}, {3, 4, 1}});
  EXPECT_EQ(code_of([&] { min_tjoin_nonneg(g, TerminalSet{1, 2, 3}); }),
            ErrorCode::kOddTerminalCount);
  EXPECT_EQ(code_of([&] { min_tjoin_nonneg(g, TerminalSet{1, 3}); }), ErrorCode::kInfeasible);
  const auto neg = make_graph(2, {{1, 2, -1}});
  EXPECT_EQ(code_of([&] { min_tjoin_nonneg(neg, {}); }), ErrorCode::kNegativeWeight);
}

TEST(MinTJoin, SingleNegativeEdge) {
  const auto g = make_graph(2, {{1, 2, -2}});
  const auto r = min_tjoin(g, TerminalSet{1, 2});
  EXPECT_EQ(r.join, (EdgeSet{1}));
  EXPECT_EQ(r.weight, -2);
}

TEST(MinTJoin, NegativeTriangleEmptyT) {
  const auto g = make_graph(3, {{1, 2, -1}, {2, 3, -1}, {1, 3, 1}});
  const auto r = min_tjoin(g, {});
  EXPECT_EQ(r.join, (EdgeSet{1, 2, 3}));
  EXPECT_EQ(r.weight, -1);
}

TEST(MinTJoin, TriangleWithNegativeChord) {
  const auto g = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, -1}});
  const auto r = min_tjoin(g, TerminalSet{1, 3});
  EXPECT_EQ(r.join, (EdgeSet{3}));
  EXPECT_EQ(r.weight, -1);
}

TEST(MinTJoin, AgreesWithSubsetEnumeration) {
  Rng rng(31);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(rng.uniform(2, 8));
    const auto g = testing::random_graph(rng, n, static_cast<int>(rng.uniform(0, 14)), -3, 3);
    const auto t = testing::random_feasible_terminals(g, rng);
    const auto expected = oracle::bf_min_tjoin(g, t);
    ASSERT_TRUE(expected.has_value());
    const auto r = min_tjoin(g, t);
    ASSERT_EQ(r.weight, expected->weight) << "case " << i;
    ASSERT_TRUE(is_tjoin(g, t, r.join));
    ASSERT_EQ(weight(g, r.join), r.weight);
  }
}

TEST(MinTJoin, FlipOnOptimumIsConservative) {
  Rng rng(32);
  for (int i = 0; i < 300; ++i) {
    const auto g = testing::random_graph(rng, 7, 13, -4, 4);
    const auto t = testing::random_feasible_terminals(g, rng);
    const auto f = min_tjoin(g, t);
    ASSERT_TRUE(is_conservative(weight_flip(g, f.join)));
    ASSERT_FALSE(oracle::bf_has_negative_cycle(weight_flip(g, f.join)));
  }
}

TEST(IsConservative, Examples) {
  EXPECT_TRUE(is_conservative(make_graph(5, {{1, 2, -5}, {2, 3, -1}, {3, 4, -7}, {2, 5, -2}})));
  EXPECT_TRUE(is_conservative(make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, -1}})));
  EXPECT_FALSE(is_conservative(make_graph(3, {{1, 2, -1}, {2, 3, -1}, {1, 3, 1}})));
  // A negative two-edge cycle through parallel edges.
  EXPECT_FALSE(is_conservative(make_graph(2, {{1, 2, 1}, {1, 2, -2}})));
  EXPECT_TRUE(is_conservative(UndirectedGraph(0)));
}

TEST(IsConservative, AgreesWithCycleEnumeration) {
  Rng rng(33);
  for (int i = 0; i < 500; ++i) {
    const auto g = testing::random_graph(rng, 7, 12, -3, 5);
    ASSERT_EQ(is_conservative(g), !oracle::bf_has_negative_cycle(g)) << "case " << i;
  }
}

TEST(ShortestPathConservative, Examples) {
  const auto tri = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, -1}});
  auto r = shortest_path_conservative(tri, 1, 3);
  EXPECT_EQ(r.edges, (EdgeSet{3}));
  EXPECT_EQ(r.weight, -1);

  const auto path = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
  r = shortest_path_conservative(path, 1, 3);
  EXPECT_EQ(r.edges, (EdgeSet{1, 2}));
  EXPECT_EQ(r.weight, 2);

  const auto square = make_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}});
  r = shortest_path_conservative(square, 1, 3);
  EXPECT_EQ(r.weight, 2);
  EXPECT_TRUE(is_path(square, r.edges, 1, 3));
}

TEST(ShortestPathConservative, Errors) {
  const auto two = make_graph(4, {{1, 2, 1}, {3, 4, 1}});
  EXPECT_EQ(code_of([&] { shortest_path_conservative(two, 1, 4); }), ErrorCode::kInfeasible);
  const auto bad = make_graph(3, {{1, 2, -1}, {2, 3, -1}, {1, 3, 1}});
  EXPECT_EQ(code_of([&] { shortest_path_conservative(bad, 1, 3); }), ErrorCode::kNotConservative);
  EXPECT_EQ(code_of([&] { shortest_path_conservative(two, 1, 1); }), ErrorCode::kInvalidInput);
}

TEST(ShortestPathConservative, MatchesJoinWeightAndPathOracle) {
  Rng rng(34);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const auto g = gen_conservative({8, 13, 4, rng.next()});
    const auto s = static_cast<VertexId>(rng.uniform(1, 8));
    auto t = static_cast<VertexId>(rng.uniform(1, 7));
    if (t >= s) ++t;
    const auto expected = oracle::bf_min_path(g, s, t);
    if (!expected) continue;
    ++checked;
    const auto r = shortest_path_conservative(g, s, t);
    ASSERT_TRUE(is_path(g, r.edges, s, t));
    ASSERT_EQ(r.weight, expected->weight);
    ASSERT_EQ(r.weight, min_tjoin(g, TerminalSet{s, t}).weight);
  }
  EXPECT_GT(checked, 200);
}

TEST(PeelMinimalJoin, Examples) {
  const auto path = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(peel_minimal_join(path, TerminalSet{1, 3}, EdgeSet{1, 2}), (EdgeSet{1, 2}));
  EXPECT_EQ(peel_minimal_join(path, {}, {}), EdgeSet{});

  // Path 1-2-3 plus a zero-weight 2-cycle on parallel edges 4-5.
  const auto g = make_graph(5, {{1, 2, 1}, {2, 3, 1}, {4, 5, 1}, {4, 5, -1}});
  EXPECT_EQ(peel_minimal_join(g, TerminalSet{1, 3}, EdgeSet{1, 2, 3, 4}), (EdgeSet{1, 2}));
}

TEST(PeelMinimalJoin, RejectsNonJoins) {
  const auto path = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
  EXPECT_EQ(code_of([&] { peel_minimal_join(path, TerminalSet{1, 3}, EdgeSet{1}); }),
            ErrorCode::kNotATJoin);
}

TEST(PeelMinimalJoin, ResultIsMinimalOnRandomOptima) {
  Rng rng(35);
  for (int i = 0; i < 200; ++i) {
    const auto g = gen_conservative({7, 12, 2, rng.next()});
    const auto t = testing::random_feasible_terminals(g, rng, 4);
    const auto j = min_tjoin(g, t);
    const auto peeled = peel_minimal_join(g, t, j.join);
    ASSERT_TRUE(is_tjoin(g, t, peeled));
    ASSERT_EQ(weight(g, peeled), j.weight);
    // Minimal: the spanning forest of the result carries no cycle.
    int comps = 0;
    const auto touched = touched_vertices(g, peeled);
    UndirectedGraph sub(g.num_vertices());
    for (EdgeId e : peeled) sub.add_edge(g.edge(e).u, g.edge(e).v, 0);
    const auto comp = connected_components(sub);
    std::vector<bool> seen(static_cast<std::size_t>(g.num_vertices()) + 1, false);
    for (VertexId v : touched) {
      const auto c = static_cast<std::size_t>(comp[static_cast<std::size_t>(v)]);
      if (!seen[c]) {
        seen[c] = true;
        ++comps;
      }
    }
    ASSERT_EQ(peeled.size(), static_cast<int>(touched.size()) - comps) << "case " << i;
  }
}

}  // namespace
}  // namespace cgt
