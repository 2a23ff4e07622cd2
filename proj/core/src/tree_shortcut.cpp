#include "ftspanner/tree_shortcut.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "ftspanner/points_io.hpp"
#include "ftspanner/random.hpp"

namespace ftspanner {

WeightedTree::WeightedTree(std::vector<TreeNode> parent, std::vector<double> parent_weight)
    : parent_(std::move(parent)), weight_(std::move(parent_weight)) {
  const std::size_t m = parent_.size();
  if (m == 0) throw std::invalid_argument("tree is empty");
  if (weight_.size() != m) throw std::invalid_argument("parent and weight arrays differ in length");
  children_.resize(m);
  for (TreeNode v = 0; v < m; ++v) {
    if (parent_[v] == kNoNode) {
      if (root_ != kNoNode) throw std::invalid_argument("tree has more than one root");
      root_ = v;
      continue;
    }
    if (parent_[v] >= m || parent_[v] == v) throw std::invalid_argument("invalid parent link");
    if (!std::isfinite(weight_[v]) || weight_[v] < 0.0) throw std::invalid_argument("invalid edge weight");
    children_[parent_[v]].push_back(v);
  }
  if (root_ == kNoNode) throw std::invalid_argument("tree has no root");
  order_.push_back(root_);
  for (std::size_t i = 0; i < order_.size(); ++i) {
    for (TreeNode c : children_[order_[i]]) order_.push_back(c);
  }
  if (order_.size() != m) throw std::invalid_argument("parent links contain a cycle");
  subtree_size_.assign(m, 1);
  for (std::size_t i = m; i-- > 1;) subtree_size_[parent_[order_[i]]] += subtree_size_[order_[i]];
}

HeavyPaths heavy_paths(const WeightedTree& tree) {
  const std::size_t m = tree.size();
  HeavyPaths hp;
  hp.path_of.assign(m, 0);
  hp.position.assign(m, 0);
  for (TreeNode head : tree.order()) {
    if (head != tree.root() && hp.paths.size() > 0) {
      const TreeNode p = tree.parent(head);
      const auto& path = hp.paths[hp.path_of[p]];
      if (hp.position[p] + 1 < path.size() && path[hp.position[p] + 1] == head) continue;
    }
    std::vector<TreeNode> path;
    for (TreeNode v = head; v != kNoNode;) {
      hp.path_of[v] = static_cast<std::uint32_t>(hp.paths.size());
      hp.position[v] = static_cast<std::uint32_t>(path.size());
      path.push_back(v);
      TreeNode heavy = kNoNode;
      for (TreeNode c : tree.children(v)) {
        if (heavy == kNoNode || tree.subtree_size(c) > tree.subtree_size(heavy)) heavy = c;
      }
      v = heavy;
    }
    hp.paths.push_back(std::move(path));
  }
  return hp;
}

namespace {

struct PathShortcutter {
  const std::vector<double>& dist;    // path distance from the head
  const std::vector<double>& prefix;  // prefix[j] = sum of balance weights before j
  const std::vector<TreeNode>& path;
  std::vector<ShortcutEdge>& out;

  void segment(std::size_t s, std::size_t e) {
    if (e < s + 2) return;
    out.push_back({path[s], path[e], dist[e] - dist[s]});
    split(s + 1, e - 1);
  }

  // Cuts the interior [a, b] into two segments at the weighted median.
  void split(std::size_t a, std::size_t b) {
    if (a == b) return;
    const double half = (prefix[a] + prefix[b + 1]) / 2.0;
    // First t whose inclusive prefix reaches half the interior weight.
    auto it = std::lower_bound(prefix.begin() + a + 1, prefix.begin() + b + 2, half);
    std::size_t t = static_cast<std::size_t>(it - prefix.begin()) - 1;
    const std::size_t mid = std::min(std::max(t, a), b - 1);
    segment(a, mid);
    segment(mid + 1, b);
  }
};

}  // namespace

ShortcutGraph shortcut_tree(const WeightedTree& tree) {
  const HeavyPaths hp = heavy_paths(tree);
  ShortcutGraph g;
  std::vector<double> dist, prefix;
  for (const auto& path : hp.paths) {
    const std::size_t len = path.size();
    dist.assign(len, 0.0);
    prefix.assign(len + 1, 0.0);
    for (std::size_t j = 0; j < len; ++j) {
      if (j > 0) dist[j] = dist[j - 1] + tree.parent_weight(path[j]);
      const double below = j + 1 < len ? static_cast<double>(tree.subtree_size(path[j + 1])) : 0.0;
      prefix[j + 1] = prefix[j] + (static_cast<double>(tree.subtree_size(path[j])) - below);
    }
    PathShortcutter{dist, prefix, path, g.extra}.segment(0, len - 1);
  }
  std::vector<std::uint32_t> deg(tree.size(), 0);
  for (const ShortcutEdge& e : g.extra) {
    g.max_extra_degree = std::max({g.max_extra_degree, ++deg[e.x], ++deg[e.y]});
  }
  return g;
}

int max_ancestor_hops(const WeightedTree& tree, const ShortcutGraph& graph) {
  struct Arc {
    TreeNode x, y;
    double w;
  };
  const std::size_t m = tree.size();
  std::vector<Arc> arcs;
  for (TreeNode v = 0; v < m; ++v) {
    if (v != tree.root()) arcs.push_back({v, tree.parent(v), tree.parent_weight(v)});
  }
  for (const ShortcutEdge& e : graph.extra) arcs.push_back({e.x, e.y, e.weight});
  // Sums of the same weights in another order may differ in the last bits,
  // so a path counts as shortest within a relative 1e-12.
  std::vector<double> dist(m), next(m);
  int worst = 0;
  for (TreeNode s = 0; s < m; ++s) {
    std::vector<std::pair<TreeNode, double>> open;
    double up = 0.0;
    for (TreeNode a = s; tree.parent(a) != kNoNode; a = tree.parent(a)) {
      up += tree.parent_weight(a);
      open.emplace_back(tree.parent(a), up * (1.0 + 1e-12));
    }
    std::fill(dist.begin(), dist.end(), std::numeric_limits<double>::infinity());
    dist[s] = 0.0;
    for (int h = 1; !open.empty(); ++h) {
      next = dist;
      for (const Arc& a : arcs) {
        next[a.y] = std::min(next[a.y], dist[a.x] + a.w);
        next[a.x] = std::min(next[a.x], dist[a.y] + a.w);
      }
      dist.swap(next);
      std::erase_if(open, [&](const auto& t) {
        if (dist[t.first] > t.second) return false;
        worst = std::max(worst, h);
        return true;
      });
    }
  }
  return worst;
}

WeightedTree random_weighted_tree(std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  const std::uint64_t shape = rng.below(3);
  std::vector<TreeNode> parent(m, kNoNode);
  std::vector<double> weight(m, 0.0);
  for (TreeNode v = 1; v < m; ++v) {
    const bool chain = shape == 1 || (shape == 2 && rng.below(2) == 0);
    parent[v] = chain ? v - 1 - static_cast<TreeNode>(rng.below(std::min<std::uint64_t>(v, 2))) : rng.below(v);
    weight[v] = 1.0 - rng.uniform01();
  }
  return WeightedTree(std::move(parent), std::move(weight));
}

void dump_shortcuts(std::ostream& out, const ShortcutGraph& graph) {
  for (const ShortcutEdge& e : graph.extra) out << e.x << ' ' << e.y << ' ' << format_double(e.weight) << '\n';
}

}  // namespace ftspanner
