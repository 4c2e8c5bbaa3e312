#include <gtest/gtest.h>

#include "cgt/error.hpp"
#include "cgt/graph_ops.hpp"
#include "cgt/oracle.hpp"
#include "cgt/reductions.hpp"
#include "cgt/tjoin.hpp"
#include "test_support.hpp"

namespace cgt {
namespace {

using oracle::CycleParity;
using testing::make_digraph;
using testing::make_graph;

TEST(BfMinCycle, Examples) {
  const auto tri = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, -1}});
  const auto r = oracle::bf_min_cycle(tri, CycleParity::kOdd);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->weight, 1);
  const auto square = make_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}});
  EXPECT_FALSE(oracle::bf_min_cycle(square, CycleParity::kOdd));
  EXPECT_EQ(oracle::bf_min_cycle(square, CycleParity::kEven)->weight, 4);
}

TEST(BfMinCycle, ReducedYesInstance) {
  const auto d = make_digraph(2, {{1, 2}, {2, 1}});
  const auto r = reduce_bfp_to_socp(d, 1, 2);
  const auto c = oracle::bf_min_cycle(r.instance.graph, CycleParity::kOdd, r.instance.roles.at("p"));
  ASSERT_TRUE(c);
  EXPECT_EQ(c->weight, 1);
}

TEST(BfMinCycle, ParallelEdgesFormTwoCycles) {
  const auto g = make_graph(2, {{1, 2, 3}, {1, 2, -5}});
  const auto r = oracle::bf_min_cycle(g, CycleParity::kAny);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->edges, (EdgeSet{1, 2}));
  EXPECT_EQ(r->weight, -2);
}

TEST(BfMinCycle, WitnessesAreCyclesOfTheRequestedShape) {
  Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const auto g = testing::random_graph(rng, 7, 12, -3, 3);
    const auto p = static_cast<VertexId>(rng.uniform(1, 7));
    for (auto parity : {CycleParity::kAny, CycleParity::kOdd, CycleParity::kEven}) {
      const auto r = oracle::bf_min_cycle(g, parity, p);
      if (!r) continue;
      ASSERT_TRUE(is_cycle(g, r->edges));
      ASSERT_EQ(degrees(g, r->edges)[static_cast<std::size_t>(p)], 2);
      if (parity == CycleParity::kOdd) ASSERT_TRUE(r->edges.is_odd());
      if (parity == CycleParity::kEven) ASSERT_FALSE(r->edges.is_odd());
      ASSERT_EQ(weight(g, r->edges), r->weight);
    }
  }
}

TEST(BfMinOddPath, Examples) {
  const auto path = make_graph(3, {{1, 2, 1}, {2, 3, 1}});
  EXPECT_FALSE(oracle::bf_min_odd_path(path, 1, 3));
  const auto tri = make_graph(3, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}});
  const auto r = oracle::bf_min_odd_path(tri, 1, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->edges, (EdgeSet{3}));
  EXPECT_EQ(r->weight, 1);
}

TEST(BfMinOddPath, CorollaryInstance) {
  const auto d = make_digraph(2, {{1, 2}, {2, 1}});
  const auto socp = reduce_bfp_to_socp(d, 1, 2);
  const auto sop = reduce_socp_to_sop(socp.instance.graph, socp.instance.roles.at("p"), 1);
  const auto r = oracle::bf_min_odd_path(sop.instance.graph, sop.instance.roles.at("s"),
                                         sop.instance.roles.at("t"));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->weight, 1);
}

TEST(BfDisp, Examples) {
  const auto d = make_digraph(2, {{1, 2}, {2, 1}});
  const auto disp = reduce_bfp_to_disp(d, 1, 2);
  const auto& roles = disp.instance.roles;
  const auto r = oracle::bf_disp(disp.instance.graph, roles.at("s1"), roles.at("s2"),
                                 roles.at("t1"), roles.at("t2"), 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->total, 2);

  const auto pairs = make_graph(4, {{1, 3, 1}, {2, 4, 1}});
  const auto q = oracle::bf_disp(pairs, 1, 2, 3, 4);
  ASSERT_TRUE(q);
  EXPECT_EQ(q->total, 2);
  EXPECT_FALSE(oracle::bf_disp(pairs, 1, 2, 3, 4, 1));

  // Star: every terminal path runs through the centre 5.
  const auto star = make_graph(5, {{1, 5, 1}, {2, 5, 1}, {3, 5, 1}, {4, 5, 1}});
  EXPECT_FALSE(oracle::bf_disp(star, 1, 2, 3, 4));
}

TEST(BfDisp, RequiresDistinctTerminals) {
  const auto g = make_graph(4, {{1, 2, 1}});
  EXPECT_THROW(oracle::bf_disp(g, 1, 1, 3, 4), Error);
}

TEST(BfMotj, Examples) {
  const auto g = make_graph(4, {{1, 2, 1}, {2, 3, 1}, {1, 3, 1}, {3, 4, 1}});
  const auto r = oracle::bf_motj(g, TerminalSet{1, 4});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->weight, 3);
  EXPECT_EQ(r->join, (EdgeSet{1, 2, 4}));

  const auto edge = make_graph(2, {{1, 2, 6}});
  EXPECT_EQ(oracle::bf_motj(edge, TerminalSet{1, 2})->join, (EdgeSet{1}));

  const auto square = make_graph(4, {{1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 1, 1}});
  EXPECT_FALSE(oracle::bf_motj(square, {}));
}

TEST(BfMotj, TooLarge) {
  UndirectedGraph g(2);
  for (int i = 0; i < oracle::kMaxEnumerationEdges + 1; ++i) g.add_edge(1, 2, 1);
  try {
    oracle::bf_motj(g, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(BfBfp, Examples) {
  EXPECT_TRUE(oracle::bf_bfp(make_digraph(2, {{1, 2}, {2, 1}}), 1, 2));
  EXPECT_FALSE(oracle::bf_bfp(make_digraph(2, {{1, 2}}), 1, 2));
  // s=1 -> a=2 -> t=3 -> b=4 -> s.
  const auto d = make_digraph(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const auto r = oracle::bf_bfp(d, 1, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->forward, (std::vector<ArcId>{1, 2}));
  EXPECT_EQ(r->backward, (std::vector<ArcId>{3, 4}));
  EXPECT_TRUE(oracle::is_back_and_forth(d, 1, 3, *r));
}

TEST(BfBfp, SharedInnerVertexIsNo) {
  // Both directions must pass through vertex 2.
  const auto d = make_digraph(3, {{1, 2}, {2, 3}, {3, 2}, {2, 1}});
  EXPECT_FALSE(oracle::bf_bfp(d, 1, 3));
}

TEST(Budget, ExceededIsAnExplicitOutcome) {
  Rng rng(52);
  const auto g = testing::random_graph(rng, 12, 40, -3, 3);
  try {
    oracle::bf_min_cycle(g, CycleParity::kAny, std::nullopt, {100});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudgetExceeded);
  }
  EXPECT_THROW(oracle::bf_min_path(g, 1, 12, {50}), Error);
  // No arc enters s, so the search must exhaust a complete digraph on 2..9.
  Digraph d(9);
  for (VertexId u = 2; u <= 9; ++u) {
    d.add_arc(1, u);
    for (VertexId v = 2; v <= 9; ++v) {
      if (u != v) d.add_arc(u, v);
    }
  }
  EXPECT_THROW(oracle::bf_bfp(d, 1, 2, {20}), Error);
}

TEST(Determinism, IdenticalInputsGiveIdenticalOutputs) {
  Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    const auto g = testing::random_graph(rng, 7, 13, -2, 3);
    const auto a = oracle::bf_min_cycle(g, CycleParity::kOdd);
    const auto b = oracle::bf_min_cycle(g, CycleParity::kOdd);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) ASSERT_EQ(a->edges, b->edges);
  }
}

TEST(BfMinCycle, NonNegativeCyclesIffConservativeOnSmallGraphs) {
  // All simple graphs on 4 labelled vertices, all +-1 weightings.
  const std::vector<std::pair<VertexId, VertexId>> pairs = {{1, 2}, {1, 3}, {1, 4},
                                                            {2, 3}, {2, 4}, {3, 4}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (unsigned b = 0; b < 6; ++b) {
      if (mask >> b & 1U) edges.push_back(pairs[b]);
    }
    for (unsigned signs = 0; signs < (1U << edges.size()); ++signs) {
      UndirectedGraph g(4);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        g.add_edge(edges[k].first, edges[k].second, (signs >> k & 1U) ? -1 : 1);
      }
      const auto c = oracle::bf_min_cycle(g, CycleParity::kAny);
      ASSERT_EQ(!c || c->weight >= 0, is_conservative(g));
    }
  }
}

}  // namespace
}  // namespace cgt
