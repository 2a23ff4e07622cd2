#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "ftspanner/constants.hpp"
#include "ftspanner/fault_tolerant.hpp"
#include "ftspanner/verify.hpp"
#include "oracles.hpp"

using namespace ftspanner;

namespace {

BuildOptions options() { return BuildOptions{}; }

}  // namespace

TEST(FaultBudget, Range) {
  EXPECT_NO_THROW(check_fault_budget(0, 2));
  EXPECT_NO_THROW(check_fault_budget(8, 10));
  EXPECT_THROW(check_fault_budget(-1, 10), std::out_of_range);
  EXPECT_THROW(check_fault_budget(9, 10), std::out_of_range);
  EXPECT_THROW(check_fault_budget(0, 1), std::out_of_range);
  const Metric m(gen_uniform_cube(10, 2, 1));
  EXPECT_THROW(build_ft_spanner(m, options(), 9), std::out_of_range);
}

TEST(RepSets, DescendantSampleIsBreadthFirst) {
  const Metric m(gen_uniform_cube(300, 2, 2));
  const TreeSkeleton t = assign_representatives(build_net_tree(m), m);
  for (int k : {1, 2, 3}) {
    const std::vector<VertexId> d = descendant_sample(t, t.root(), k, 2);
    EXPECT_EQ(d.size(), 2u * k + 1);
    EXPECT_EQ(d.front(), t.root());
    // Oracle: the first 2k+1 vertices of the subtree in (depth, id) order.
    std::vector<std::pair<int, VertexId>> all;
    for (VertexId v : t.subtree(t.root())) {
      int depth = 0;
      for (VertexId u = v; u != t.root(); u = t.vertex(u).parent) ++depth;
      all.emplace_back(depth, v);
    }
    std::sort(all.begin(), all.end());
    for (std::size_t i = 0; i < d.size(); ++i) EXPECT_EQ(d[i], all[i].second);
  }
  const VertexId leaf = t.leaf_of(0);
  EXPECT_EQ(descendant_sample(t, leaf, 3, 2), std::vector<VertexId>{leaf});
}

TEST(RepSets, CountingInvariants) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Metric m(gen_uniform_cube(400, 2, seed));
    const TreeSkeleton t = assign_representatives(build_net_tree(m), m);
    for (int k : {0, 1, 2, 4}) {
      const RepSets rs = rep_sets(t, k);
      std::vector<std::size_t> membership(m.size(), 0);
      for (VertexId v = 0; v < t.size(); ++v) {
        const auto& d = rs.d_star[v];
        const auto& r = rs.r_star[v];
        EXPECT_LE(d.size(), 2u * k + 1);
        for (VertexId x : d) EXPECT_TRUE(t.is_ancestor(v, x));
        if (d.size() == 2u * k + 1) EXPECT_GE(r.size(), static_cast<std::size_t>(k) + 1);
        if (d.size() < 2u * k + 1) EXPECT_EQ(d.size(), t.subtree(v).size()) << "short samples take the whole subtree";
        EXPECT_TRUE(std::is_sorted(r.begin(), r.end()));
        for (PointId p : r) ++membership[p];
      }
      for (std::size_t c : membership) EXPECT_LE(c, 4u * k + 2);
    }
  }
}

TEST(FtSpanner, ZeroFaultsAddsNothing) {
  const Metric m(gen_uniform_cube(300, 2, 4));
  BasicSpanner b;
  const FTSpanner ft = build_ft_spanner(m, options(), 0, &b);
  ASSERT_EQ(ft.graph.num_edges(), b.graph.num_edges());
  for (std::size_t i = 0; i < ft.graph.num_edges(); ++i) {
    EXPECT_EQ(ft.graph.edges()[i].u, b.graph.edges()[i].u);
    EXPECT_EQ(ft.graph.edges()[i].v, b.graph.edges()[i].v);
  }
}

TEST(FtSpanner, ContainsBasicAndBipartiteLinks) {
  const Metric m(gen_uniform_cube(200, 2, 5));
  BasicSpanner b;
  const FTSpanner ft = build_ft_spanner(m, options(), 2, &b);
  EXPECT_TRUE(weight_mismatches(m, ft.graph).empty());
  for (const SpannerEdge& e : b.graph.edges()) EXPECT_TRUE(ft.graph.contains(e.u, e.v));
  for (const SpannerEdge& e : b.links) {
    for (PointId x : ft.reps.r_star[e.anchor_u]) {
      for (PointId y : ft.reps.r_star[e.anchor_v]) {
        if (x != y) EXPECT_TRUE(ft.graph.contains(x, y));
      }
    }
  }
}

TEST(FtSpanner, SmallInstancesSurviveEveryFaultSet) {
  // Exhaustive oracle: every fault set of size <= k on a dozen points.
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const Metric m(gen_uniform_cube(12, 2, seed));
    for (int k : {1, 2}) {
      const FTSpanner ft = build_ft_spanner(m, options(), k);
      const std::size_t n = m.size();
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) > k) continue;
        std::vector<char> dead(n, 0);
        for (std::size_t i = 0; i < n; ++i) dead[i] = (mask >> i) & 1;
        const double s = oracle::max_stretch(m, ft.graph, &dead);
        EXPECT_LE(s, 1.0 + default_constants().c_ft * 0.5) << "seed " << seed << " k " << k << " mask " << mask;
      }
    }
  }
}

TEST(FtSpanner, NoSeparationUnderAdversarialFaults) {
  const Metric m(gen_uniform_cube(256, 2, 6));
  for (int k : {1, 2, 3}) {
    const FTSpanner ft = build_ft_spanner(m, options(), k);
    FaultTrialOptions fo;
    fo.random_trials = 10;
    fo.adversarial_trials = 6;
    fo.hops = static_cast<int>(m.size());
    fo.tolerance = 1e9;
    for (const FaultTrial& t : fault_trials(m, ft, fo)) {
      EXPECT_EQ(t.separated, 0u) << to_string(t.strategy);
      EXPECT_LE(t.faults.size(), static_cast<std::size_t>(k));
    }
  }
}
