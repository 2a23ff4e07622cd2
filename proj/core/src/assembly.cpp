#include "ftspanner/assembly.hpp"

#include <algorithm>

#include "ftspanner/constants.hpp"

namespace ftspanner {

LightForest light_subtrees(const TreeSkeleton& tree, const Metric& metric) {
  LightForest forest;
  forest.threshold = tree.extremes().delta_max / static_cast<double>(metric.size());
  for (const NetVertex& v : tree.vertices()) {
    if (!(v.radius < forest.threshold)) continue;
    if (v.parent == kNoVertex || !(tree.vertex(v.parent).radius < forest.threshold)) {
      forest.roots.push_back(v.id);
    }
  }
  return forest;
}

WeightedTree induced_tree(const TreeSkeleton& tree, const Metric& metric, VertexId root,
                          std::vector<VertexId>& vertex_of) {
  vertex_of = tree.subtree(root);
  std::vector<TreeNode> parent(vertex_of.size(), kNoNode);
  std::vector<double> weight(vertex_of.size(), 0.0);
  // Breadth-first order puts every parent before its children.
  std::vector<std::pair<VertexId, TreeNode>> local;
  local.reserve(vertex_of.size());
  for (TreeNode i = 0; i < vertex_of.size(); ++i) local.emplace_back(vertex_of[i], i);
  std::sort(local.begin(), local.end());
  auto local_id = [&](VertexId v) {
    return std::lower_bound(local.begin(), local.end(), std::make_pair(v, TreeNode{0}))->second;
  };
  for (TreeNode i = 1; i < vertex_of.size(); ++i) {
    const NetVertex& v = tree.vertex(vertex_of[i]);
    parent[i] = local_id(v.parent);
    weight[i] = metric(v.representative, tree.vertex(v.parent).representative);
  }
  return WeightedTree(std::move(parent), std::move(weight));
}

BasicSpanner build_basic_spanner(const Metric& metric, const BuildOptions& options) {
  if (!(options.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double scale = options.eps_scale > 0.0 ? options.eps_scale : active_constants().eps_scale;

  BasicSpanner out;
  out.eps_int = scale * options.epsilon;
  out.skeleton = assign_representatives(build_net_tree(metric), metric);
  const TreeSkeleton& tree = out.skeleton;
  out.tree_like = build_tree_like_spanner(tree, metric, {out.eps_int, options.gamma, options.delegate, options.delegate_depth, options.delegate_reach});
  out.forest = light_subtrees(tree, metric);

  SpannerGraph::Builder builder(metric.size());
  out.links.reserve(out.tree_like.tree_edges.size() + out.tree_like.lateral_edges.size());
  auto rep = [&](VertexId v) { return tree.vertex(v).representative; };
  for (const auto& [parent, child] : out.tree_like.tree_edges) {
    const PointId a = rep(parent), b = rep(child);
    out.links.push_back({a, b, metric(a, b), parent, child});
  }
  for (const LateralEdge& l : out.tree_like.lateral_edges) {
    const PointId a = rep(l.a), b = rep(l.b);
    out.links.push_back({a, b, metric(a, b), l.origin_a, l.origin_b});
  }
  std::vector<VertexId> vertex_of;
  for (VertexId root : out.forest.roots) {
    if (tree.vertex(root).is_leaf()) continue;
    const WeightedTree local = induced_tree(tree, metric, root, vertex_of);
    for (const ShortcutEdge& s : shortcut_tree(local).extra) {
      const VertexId a = vertex_of[s.x], b = vertex_of[s.y];
      const PointId ra = rep(a), rb = rep(b);
      out.links.push_back({ra, rb, metric(ra, rb), a, b});
      builder.add(ra, rb, metric(ra, rb), a, b, anchor_rank(tree, a, b));
    }
  }
  const SpannerGraph shortcuts = std::move(builder).finish();
  out.graph = SpannerGraph::merge(out.tree_like.graph, shortcuts,
                                  [&](const SpannerEdge& e) { return anchor_rank(tree, e.anchor_u, e.anchor_v); });
  out.shortcut_edges = out.graph.num_edges() - out.tree_like.graph.num_edges();
  return out;
}

}  // namespace ftspanner
