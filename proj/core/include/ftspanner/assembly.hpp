#pragma once

#include <vector>

#include "ftspanner/net_tree.hpp"
#include "ftspanner/spanner_graph.hpp"
#include "ftspanner/tree_like_spanner.hpp"
#include "ftspanner/tree_shortcut.hpp"

namespace ftspanner {

struct LightForest {
  std::vector<VertexId> roots;
  double threshold = 0.0;
};

/// Roots of the maximal subtrees whose radii are all below delta_max / n.
/// The comparison is strict.
LightForest light_subtrees(const TreeSkeleton& tree, const Metric& metric);

/// The subtree under `root` as a WeightedTree whose edge weights are the
/// distances between representatives. vertex_of maps local ids back.
WeightedTree induced_tree(const TreeSkeleton& tree, const Metric& metric, VertexId root,
                          std::vector<VertexId>& vertex_of);

struct BuildOptions {
  /// Target stretch 1 + epsilon.
  double epsilon = 0.5;
  /// Internal epsilon is eps_scale * epsilon; zero selects the frozen constant.
  double eps_scale = 0.0;
  /// Zero derives gamma from the internal epsilon.
  double gamma = 0.0;
  bool delegate = true;
  int delegate_depth = 2;
  double delegate_reach = 0.5;
};

struct BasicSpanner {
  TreeSkeleton skeleton;
  TreeLikeSpanner tree_like;
  LightForest forest;
  SpannerGraph graph;
  /// Every edge between tree vertices, before parallel point pairs are
  /// merged: tree edges, lateral edges anchored at their origins, and
  /// shortcuts. A tree edge whose two vertices share a representative is
  /// kept here with u == v.
  std::vector<SpannerEdge> links;
  /// Point pairs contributed only by shortcuts.
  std::size_t shortcut_edges = 0;
  double eps_int = 0.0;
};

/// Net tree, tree-like spanner, and one shortcut graph per light subtree
/// mapped onto representatives, merged into one graph.
BasicSpanner build_basic_spanner(const Metric& metric, const BuildOptions& options);

}  // namespace ftspanner
