#include <gtest/gtest.h>

#include <sstream>

#include "ftspanner/spanner_graph.hpp"

using namespace ftspanner;

TEST(SpannerGraph, FromEdgesSortsAndValidates) {
  const SpannerGraph g = SpannerGraph::from_edges(4, {{3, 1, 2.0, 0, 0}, {0, 2, 1.0, 0, 0}, {1, 0, 0.5, 0, 0}});
  ASSERT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.edges()[0].u, 0u);
  EXPECT_EQ(g.edges()[0].v, 1u);
  EXPECT_EQ(g.edges()[2].u, 1u);
  EXPECT_EQ(g.edges()[2].v, 3u);
  EXPECT_TRUE(g.contains(3, 1));
  EXPECT_FALSE(g.contains(2, 3));
  EXPECT_EQ(g.total_weight(), 3.5);
  EXPECT_EQ(g.max_degree(), 2u);
  EXPECT_EQ(g.degrees(), (std::vector<std::uint32_t>{2, 2, 1, 1}));
  EXPECT_THROW(SpannerGraph::from_edges(2, {{0, 0, 1.0, 0, 0}}), InputError);
  EXPECT_THROW(SpannerGraph::from_edges(2, {{0, 2, 1.0, 0, 0}}), InputError);
  EXPECT_THROW(SpannerGraph::from_edges(3, {{0, 1, 1.0, 0, 0}, {1, 0, 1.0, 0, 0}}), InputError);
}

TEST(SpannerGraph, BuilderKeepsLowestRankThenEarliest) {
  SpannerGraph::Builder b(3);
  EXPECT_FALSE(b.add(1, 1, 0.0, 0, 0, 0));
  EXPECT_TRUE(b.add(0, 1, 1.0, 5, 6, 3));
  EXPECT_TRUE(b.add(1, 0, 1.0, 7, 8, 2));
  EXPECT_TRUE(b.add(0, 1, 1.0, 9, 9, 2));
  EXPECT_TRUE(b.add(2, 1, 4.0, 1, 2, 0));
  EXPECT_EQ(b.candidates(), 4u);
  const SpannerGraph g = std::move(b).finish();
  ASSERT_EQ(g.num_edges(), 2u);
  const SpannerEdge* e = g.find(0, 1);
  ASSERT_NE(e, nullptr);
  EXPECT_EQ(e->u, 0u);
  EXPECT_EQ(e->anchor_u, 8u) << "anchors follow the point order";
  EXPECT_EQ(e->anchor_v, 7u);
  EXPECT_EQ(g.find(1, 2)->anchor_u, 2u);
}

TEST(SpannerGraph, MergeMatchesBuilder) {
  const SpannerGraph a = SpannerGraph::from_edges(4, {{0, 1, 1.0, 3, 3}, {1, 2, 1.0, 1, 1}, {2, 3, 1.0, 2, 2}});
  const SpannerGraph b = SpannerGraph::from_edges(4, {{0, 1, 1.0, 2, 2}, {0, 3, 1.0, 0, 0}, {2, 1, 1.0, 1, 1}});
  auto rank = [](const SpannerEdge& e) { return static_cast<int>(e.anchor_u); };
  SpannerGraph::Builder builder(4);
  for (const SpannerGraph* g : {&a, &b}) {
    for (const SpannerEdge& e : g->edges()) builder.add(e.u, e.v, e.weight, e.anchor_u, e.anchor_v, rank(e));
  }
  const SpannerGraph expected = std::move(builder).finish();
  const SpannerGraph merged = SpannerGraph::merge(a, b, rank);
  ASSERT_EQ(merged.num_edges(), expected.num_edges());
  for (std::size_t i = 0; i < merged.num_edges(); ++i) {
    EXPECT_EQ(merged.edges()[i].u, expected.edges()[i].u);
    EXPECT_EQ(merged.edges()[i].v, expected.edges()[i].v);
    EXPECT_EQ(merged.edges()[i].anchor_u, expected.edges()[i].anchor_u);
  }
  EXPECT_EQ(merged.find(0, 1)->anchor_u, 2u);
  EXPECT_THROW(SpannerGraph::merge(a, SpannerGraph(5), rank), std::invalid_argument);
}

TEST(SpannerGraph, AdjacencyDropsDeadPoints) {
  const SpannerGraph g = SpannerGraph::from_edges(4, {{0, 1, 1, 0, 0}, {1, 2, 1, 0, 0}, {2, 3, 1, 0, 0}, {0, 3, 5, 0, 0}});
  const Adjacency all = g.adjacency();
  EXPECT_EQ(all.degree(0), 2u);
  const std::vector<char> dead{0, 1, 0, 0};
  const Adjacency live = g.adjacency(&dead);
  EXPECT_EQ(live.degree(0), 1u);
  EXPECT_EQ(live.degree(1), 0u);
  EXPECT_EQ(live.degree(2), 1u);
  EXPECT_EQ(live.target[live.offset[0]], 3u);
}

TEST(SpannerFile, RoundTrip) {
  const SpannerGraph g =
      SpannerGraph::from_edges(5, {{0, 4, 0.1 + 0.2, 3, 1}, {1, 2, 1.0 / 3.0, 0, 2}, {2, 3, 0.0, 4, 4}});
  std::stringstream s;
  write_spanner(s, g, 0.25, 3);
  const SpannerFile f = read_spanner(s);
  EXPECT_EQ(f.epsilon, 0.25);
  EXPECT_EQ(f.k, 3);
  EXPECT_EQ(f.graph.num_points(), 5u);
  EXPECT_EQ(f.graph.edges(), g.edges());
}

TEST(SpannerFile, RejectsBadInput) {
  auto parse = [](const std::string& text) {
    std::stringstream s(text);
    return read_spanner(s);
  };
  EXPECT_THROW(parse(""), InputError);
  EXPECT_THROW(parse("# n=3\n"), InputError);
  EXPECT_THROW(parse("# n=3 eps=0.5 k=0\n0 1\n"), InputError);
  EXPECT_THROW(parse("# n=3 eps=0.5 k=0\n0 5 1 0 0\n"), InputError);
  EXPECT_THROW(parse("# n=3 eps=0.5 k=0\n0 1 -1 0 0\n"), InputError);
  EXPECT_THROW(parse("# n=3 eps=0.5 k=0\n0 1 1 0 0\n1 0 1 0 0\n"), InputError);
  try {
    parse("# n=3 eps=0.5 k=0\n0 1 1 0 0\n0 2 nan 0 0\n");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}
