#pragma once

#include <utility>
#include <vector>

#include "ftspanner/net_tree.hpp"
#include "ftspanner/spanner_graph.hpp"

namespace ftspanner {

/// A lateral edge between two vertices holding level-`level` net points.
/// (a, b) are the vertices whose representatives carry the edge after
/// delegation; (origin_a, origin_b) the pair that asked for it. The graph
/// edge is anchored at the origins: a delegate's subtree may lie entirely
/// inside a fault set, an origin's subtree holds the endpoint it serves.
struct LateralEdge {
  VertexId a = kNoVertex, b = kNoVertex;
  int level = 0;
  VertexId origin_a = kNoVertex, origin_b = kNoVertex;
};

struct TreeLikeOptions {
  double eps_int = 0.0;
  /// Zero selects 4 + 16 / eps_int.
  double gamma = 0.0;
  bool delegate = true;
  /// How many generations below a vertex may carry its lateral edges.
  int delegate_depth = 2;
  /// A delegate's representative lies within this multiple of r_i of the
  /// vertex center.
  double delegate_reach = 0.5;
};

struct TreeLikeSpanner {
  SpannerGraph graph;
  std::vector<std::pair<VertexId, VertexId>> tree_edges;  // (parent, child)
  std::vector<LateralEdge> lateral_edges;
  double gamma = 0.0;
};

double default_gamma(double eps_int);

/// Anchor rank used to resolve parallel point edges: the higher level of the
/// two anchor vertices.
int anchor_rank(const TreeSkeleton& tree, VertexId a, VertexId b);

/// Tree edges join the representatives of each parent and child. A pair of
/// level-i net points within gamma * r_i gets a lateral edge at the lowest
/// level where some pair of their children is farther than gamma * r_{i-1}
/// (level 0 pairs always qualify), so each vertex pair is joined once. With
/// delegation on, each lateral endpoint moves to the least loaded of the
/// vertex, its children and grandchildren whose representative lies within
/// r_i of the vertex center.
TreeLikeSpanner build_tree_like_spanner(const TreeSkeleton& tree, const Metric& metric,
                                        const TreeLikeOptions& options);

}  // namespace ftspanner
