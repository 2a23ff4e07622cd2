#pragma once

#include <vector>

#include "ftspanner/assembly.hpp"
#include "ftspanner/net_tree.hpp"
#include "ftspanner/spanner_graph.hpp"

namespace ftspanner {

/// Throws std::out_of_range unless 0 <= k <= n - 2.
void check_fault_budget(int k, std::size_t n);

/// The first beta*k + 1 vertices of v's subtree in (hop distance, id) order,
/// v included.
std::vector<VertexId> descendant_sample(const TreeSkeleton& tree, VertexId v, int k, int beta = 2);

struct RepSets {
  int k = 0;
  int beta = 2;
  std::vector<std::vector<VertexId>> d_star;
  /// Sorted, without repeats.
  std::vector<std::vector<PointId>> r_star;
};

/// beta defaults to the skeleton's representative multiplicity bound.
RepSets rep_sets(const TreeSkeleton& tree, int k);

struct FTSpanner {
  /// Each edge's anchor is the anchor of the H* edge it was derived from.
  SpannerGraph graph;
  int k = 0;
  RepSets reps;
};

/// Keeps every edge of basic.graph and adds, for each link (p, q) anchored
/// at (a, b), the complete bipartite graph between R*(a) + p and R*(b) + q.
/// The endpoint joins its side because a delegated lateral edge need not
/// start at a member of R*. With k = 0 nothing can fail and H* is returned
/// as is.
FTSpanner ft_augment(const BasicSpanner& basic, const Metric& metric, int k);

/// build_basic_spanner followed by ft_augment. `basic` receives the
/// intermediate spanner when non-null.
FTSpanner build_ft_spanner(const Metric& metric, const BuildOptions& options, int k, BasicSpanner* basic = nullptr);

}  // namespace ftspanner
