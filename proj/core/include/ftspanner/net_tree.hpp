#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <vector>

#include "ftspanner/metric.hpp"

namespace ftspanner {

using VertexId = std::uint32_t;
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

/// A vertex of the compressed net tree. It stands for the run of levels
/// [low_level, level] during which its center had a single child in the
/// uncompressed hierarchy.
struct NetVertex {
  VertexId id = kNoVertex;
  PointId center = kNoPoint;
  int level = 0;
  int low_level = 0;
  double radius = 0.0;
  VertexId parent = kNoVertex;
  std::vector<VertexId> children;
  PointId representative = kNoPoint;

  bool is_leaf() const noexcept { return children.empty(); }
};

/// Compressed hierarchical net tree over a metric.
///
/// Level i has radius r_i = r_0 * 2^i with r_0 = delta_min / 2. The level-i
/// net N_i is kept explicitly (as each point's top level), which is what the
/// lateral-edge search and the net counting checks need. Vertex ids are
/// assigned breadth-first from the root, so parent ids precede child ids.
class TreeSkeleton {
 public:
  const std::vector<NetVertex>& vertices() const noexcept { return vertices_; }
  const NetVertex& vertex(VertexId v) const { return vertices_[v]; }
  std::size_t size() const noexcept { return vertices_.size(); }
  VertexId root() const noexcept { return 0; }
  std::size_t num_points() const noexcept { return leaf_of_point_.size(); }
  VertexId leaf_of(PointId p) const { return leaf_of_point_[p]; }

  /// Each point represents at most this many vertices.
  int rep_multiplicity_bound() const noexcept { return 2; }
  bool has_representatives() const noexcept { return has_reps_; }

  double base_radius() const noexcept { return base_radius_; }
  int top_level() const noexcept { return top_level_; }
  double radius_at(int level) const;
  const MetricExtremes& extremes() const noexcept { return extremes_; }

  /// Highest level i with p in N_i.
  int point_top_level(PointId p) const { return point_top_level_[p]; }
  /// |N_i| for i = 0..top_level().
  const std::vector<std::size_t>& net_sizes() const noexcept { return net_sizes_; }
  /// Members of N_i in ascending point order.
  std::vector<PointId> net(int level) const;
  /// The compressed vertex holding the uncompressed node (level, p); p must
  /// belong to N_level.
  VertexId vertex_at(int level, PointId p) const;

  /// Edges on the longest root-to-leaf path.
  int depth() const;
  /// Vertices of the subtree rooted at v, in breadth-first order.
  std::vector<VertexId> subtree(VertexId v) const;
  bool is_ancestor(VertexId ancestor, VertexId v) const;

  /// "vertex <id> level=<l> center=<p> rep=<p|none> parent=<id|none>" lines.
  void dump(std::ostream& out) const;

 private:
  friend TreeSkeleton build_net_tree(const Metric& metric);
  friend TreeSkeleton assign_representatives(TreeSkeleton tree, const Metric& metric);

  std::vector<NetVertex> vertices_;
  std::vector<VertexId> leaf_of_point_;
  std::vector<int> point_top_level_;
  // Per point, the compressed vertices on its center chain, bottom-up, as
  // (low_level, vertex) pairs flattened with offsets.
  std::vector<std::uint32_t> chain_offset_;
  std::vector<std::pair<int, VertexId>> chains_;
  std::vector<std::size_t> net_sizes_;
  MetricExtremes extremes_;
  double base_radius_ = 0.0;
  int top_level_ = 0;
  bool has_reps_ = false;
};

/// Greedy nets at radii r_i = r_0 * 2^i, r_0 = delta_min / 2, up to the first
/// level whose radius reaches delta_max. N_i keeps a point of N_{i-1} (scanned
/// in index order) iff no kept point lies within r_i; each point of N_{i-1}
/// hangs under its nearest kept point (ties to the smaller index). Unary
/// chains are compressed.
TreeSkeleton build_net_tree(const Metric& metric);

/// Leaves represent their own point. Internal vertices, children first,
/// take the unused leaf point of their subtree nearest to their center (ties
/// to the smaller index), so every internal representative is unique and no
/// point represents more than two vertices.
TreeSkeleton assign_representatives(TreeSkeleton tree, const Metric& metric);

}  // namespace ftspanner
