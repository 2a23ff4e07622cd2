#include "ftspanner/tree_like_spanner.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include "grid.hpp"

namespace ftspanner {

double default_gamma(double eps_int) { return 4.0 + 16.0 / eps_int; }

int anchor_rank(const TreeSkeleton& tree, VertexId a, VertexId b) {
  return std::max(tree.vertex(a).level, tree.vertex(b).level);
}

namespace {

// Centers of the uncompressed children of node (level, x), level >= 1.
void child_centers(const TreeSkeleton& tree, int level, PointId x, std::vector<PointId>& out) {
  out.clear();
  const NetVertex& v = tree.vertex(tree.vertex_at(level, x));
  if (level == v.low_level && !v.is_leaf()) {
    for (VertexId c : v.children) out.push_back(tree.vertex(c).center);
  } else {
    out.push_back(x);
  }
}

}  // namespace

TreeLikeSpanner build_tree_like_spanner(const TreeSkeleton& tree, const Metric& metric,
                                        const TreeLikeOptions& options) {
  if (!tree.has_representatives()) throw std::invalid_argument("tree has no representatives");
  if (!(options.eps_int > 0.0)) throw std::invalid_argument("eps_int must be positive");
  const double gamma = options.gamma == 0.0 ? default_gamma(options.eps_int) : options.gamma;
  if (!(gamma >= 4.0)) throw std::invalid_argument("gamma must be at least 4");

  const std::size_t n = tree.num_points();
  TreeLikeSpanner out;
  out.gamma = gamma;
  SpannerGraph::Builder builder(n);
  std::vector<std::uint32_t> load(n, 0);

  auto rep = [&](VertexId v) { return tree.vertex(v).representative; };

  for (const NetVertex& v : tree.vertices()) {
    if (v.parent == kNoVertex) continue;
    const PointId a = rep(v.parent), b = v.representative;
    out.tree_edges.emplace_back(v.parent, v.id);
    if (builder.add(a, b, metric(a, b), v.parent, v.id, anchor_rank(tree, v.parent, v.id))) {
      ++load[a];
      ++load[b];
    }
  }

  std::vector<VertexId> pool;
  auto delegate = [&](VertexId v, double reach) {
    if (!options.delegate) return v;
    const PointId center = tree.vertex(v).center;
    pool.assign(1, v);
    std::size_t layer = 0;
    for (int depth = 1; depth <= options.delegate_depth; ++depth) {
      const std::size_t end = pool.size();
      for (std::size_t i = layer; i < end; ++i) {
        for (VertexId c : tree.vertex(pool[i]).children) pool.push_back(c);
      }
      layer = end;
    }
    VertexId best = v;
    for (VertexId c : pool) {
      if (load[rep(c)] < load[rep(best)] && metric(center, rep(c)) <= reach) best = c;
    }
    return best;
  };

  std::unordered_set<std::uint64_t> joined;
  std::vector<PointId> net(n);
  for (PointId p = 0; p < n; ++p) net[p] = p;
  // Per level: the vertex of each net point and its child centers, as
  // [first[p], first[p] + count[p]) in `centers`.
  std::vector<VertexId> at(n);
  std::vector<std::uint32_t> first(n), count(n);
  std::vector<PointId> centers, scratch;

  for (int level = 0; level <= tree.top_level() && net.size() > 1; ++level) {
    const double r = tree.radius_at(level);
    const double reach = gamma * r;
    const double below = gamma * tree.radius_at(level - 1);
    centers.clear();
    for (PointId p : net) {
      at[p] = tree.vertex_at(level, p);
      if (level == 0) continue;
      child_centers(tree, level, p, scratch);
      first[p] = static_cast<std::uint32_t>(centers.size());
      count[p] = static_cast<std::uint32_t>(scratch.size());
      centers.insert(centers.end(), scratch.begin(), scratch.end());
    }
    detail::CellGrid grid(metric, reach);
    for (PointId p : net) {
      const VertexId vp = at[p];
      grid.for_each_candidate(p, [&](PointId q) {
        if (metric(p, q) > reach) return;
        if (level > 0) {
          bool needed = false;
          for (std::uint32_t i = first[q]; i < first[q] + count[q] && !needed; ++i) {
            for (std::uint32_t j = first[p]; j < first[p] + count[p]; ++j) {
              if (metric(centers[i], centers[j]) > below) {
                needed = true;
                break;
              }
            }
          }
          if (!needed) return;
        }
        const VertexId vq = at[q];
        // A pair can recur only while both vertices span several levels.
        const NetVertex& nq = tree.vertex(vq);
        const NetVertex& np = tree.vertex(vp);
        const std::uint64_t key = (std::uint64_t{std::min(vq, vp)} << 32) | std::max(vq, vp);
        if (nq.low_level < level && np.low_level < level && joined.contains(key)) return;
        if (nq.level > level && np.level > level) joined.insert(key);
        const VertexId a = delegate(vq, options.delegate_reach * r);
        const VertexId b = delegate(vp, options.delegate_reach * r);
        const PointId ra = rep(a), rb = rep(b);
        out.lateral_edges.push_back({a, b, level, vq, vp});
        if (builder.add(ra, rb, metric(ra, rb), vq, vp, anchor_rank(tree, vq, vp))) {
          ++load[ra];
          ++load[rb];
        }
      });
      grid.insert(p);
    }
    std::erase_if(net, [&](PointId p) { return tree.point_top_level(p) <= level; });
  }

  out.graph = std::move(builder).finish();
  return out;
}

}  // namespace ftspanner
