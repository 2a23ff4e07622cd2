#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace ftspanner {

using TreeNode = std::uint32_t;
inline constexpr TreeNode kNoNode = 0xffffffffu;

/// Rooted tree given by parent links. parent[root] == kNoNode; every other
/// entry names the parent and parent_weight the edge weight to it.
class WeightedTree {
 public:
  /// Throws std::invalid_argument unless the links form one tree with
  /// finite, non-negative weights.
  WeightedTree(std::vector<TreeNode> parent, std::vector<double> parent_weight);

  std::size_t size() const noexcept { return parent_.size(); }
  TreeNode root() const noexcept { return root_; }
  TreeNode parent(TreeNode v) const { return parent_[v]; }
  double parent_weight(TreeNode v) const { return weight_[v]; }
  /// Children in ascending id order.
  const std::vector<TreeNode>& children(TreeNode v) const { return children_[v]; }
  /// Vertices in breadth-first order from the root.
  const std::vector<TreeNode>& order() const noexcept { return order_; }
  std::size_t subtree_size(TreeNode v) const { return subtree_size_[v]; }
  std::size_t degree(TreeNode v) const { return children_[v].size() + (v == root_ ? 0 : 1); }

 private:
  std::vector<TreeNode> parent_;
  std::vector<double> weight_;
  std::vector<std::vector<TreeNode>> children_;
  std::vector<TreeNode> order_;
  std::vector<std::size_t> subtree_size_;
  TreeNode root_ = kNoNode;
};

struct HeavyPaths {
  /// Each path runs from its head downwards.
  std::vector<std::vector<TreeNode>> paths;
  std::vector<std::uint32_t> path_of;
  std::vector<std::uint32_t> position;
};

/// The heavy child is the child with the largest subtree (ties to the lower
/// id).
HeavyPaths heavy_paths(const WeightedTree& tree);

struct ShortcutEdge {
  TreeNode x = kNoNode, y = kNoNode;
  double weight = 0.0;
};

struct ShortcutGraph {
  std::vector<ShortcutEdge> extra;
  /// Largest number of extra edges at one vertex.
  std::uint32_t max_extra_degree = 0;
};

/// Shortcuts each heavy path with a segment hierarchy. A segment [s, e] of
/// path positions has s and e as ports and, when they are not adjacent, one
/// extra edge between them weighted by the path distance. Its interior is
/// cut into two segments at the weighted median, where a position weighs
/// the size of the subtree hanging off it. Every position is a port of
/// exactly one segment, so each vertex gains at most one extra edge, and
/// walking port to port reaches any vertex on the path monotonically with
/// O(log) hops.
ShortcutGraph shortcut_tree(const WeightedTree& tree);

/// Over all vertices v and proper ancestors a, the fewest hops of a v-a path
/// in tree plus extra whose weight is d_T(v, a) up to a relative 1e-12.
int max_ancestor_hops(const WeightedTree& tree, const ShortcutGraph& graph);

/// Random tree on m vertices rooted at 0 with weights in (0, 1]. The seed
/// also picks the shape: recursive (parent uniform among earlier vertices),
/// caterpillar (parent among the last two) or a mix of both.
WeightedTree random_weighted_tree(std::size_t m, std::uint64_t seed);

/// "x y weight" lines.
void dump_shortcuts(std::ostream& out, const ShortcutGraph& graph);

}  // namespace ftspanner
