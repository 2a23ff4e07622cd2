#include "ftspanner/net_tree.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <deque>
#include <ostream>

#include "grid.hpp"

namespace ftspanner {

double TreeSkeleton::radius_at(int level) const { return std::ldexp(base_radius_, level); }

std::vector<PointId> TreeSkeleton::net(int level) const {
  std::vector<PointId> out;
  for (PointId p = 0; p < point_top_level_.size(); ++p) {
    if (point_top_level_[p] >= level) out.push_back(p);
  }
  return out;
}

VertexId TreeSkeleton::vertex_at(int level, PointId p) const {
  const auto first = chains_.begin() + chain_offset_[p];
  const auto last = chains_.begin() + chain_offset_[p + 1];
  auto it = std::upper_bound(first, last, level,
                             [](int lvl, const std::pair<int, VertexId>& run) { return lvl < run.first; });
  assert(it != first);
  return std::prev(it)->second;
}

int TreeSkeleton::depth() const {
  std::vector<int> d(vertices_.size(), 0);
  int best = 0;
  for (const NetVertex& v : vertices_) {
    if (v.parent != kNoVertex) d[v.id] = d[v.parent] + 1;
    best = std::max(best, d[v.id]);
  }
  return best;
}

std::vector<VertexId> TreeSkeleton::subtree(VertexId v) const {
  std::vector<VertexId> out{v};
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (VertexId c : vertices_[out[i]].children) out.push_back(c);
  }
  return out;
}

bool TreeSkeleton::is_ancestor(VertexId ancestor, VertexId v) const {
  for (VertexId x = v; x != kNoVertex; x = vertices_[x].parent) {
    if (x == ancestor) return true;
  }
  return false;
}

void TreeSkeleton::dump(std::ostream& out) const {
  for (const NetVertex& v : vertices_) {
    out << "vertex " << v.id << " level=" << v.level << " center=" << v.center << " rep=";
    if (v.representative == kNoPoint) {
      out << "none";
    } else {
      out << v.representative;
    }
    out << " parent=";
    if (v.parent == kNoVertex) {
      out << "none";
    } else {
      out << v.parent;
    }
    out << '\n';
  }
}

TreeSkeleton build_net_tree(const Metric& metric) {
  const std::size_t n = metric.size();
  if (n < 2) throw InputError("net tree needs at least two points");

  TreeSkeleton tree;
  tree.extremes_ = extremes(metric);
  tree.base_radius_ = tree.extremes_.delta_min / 2.0;
  const double r0 = tree.base_radius_;
  int top = 0;
  while (std::ldexp(r0, top) < tree.extremes_.delta_max) ++top;
  tree.top_level_ = top;

  // top_level[p]: last level with p in the net; up[p]: parent center of the
  // node (top_level[p], p).
  std::vector<int> top_level(n, 0);
  std::vector<PointId> up(n, kNoPoint);

  std::vector<PointId> prev(n);
  for (PointId p = 0; p < n; ++p) prev[p] = p;

  for (int level = 1; level <= top; ++level) {
    if (prev.size() == 1) {
      top_level[prev.front()] = top;
      break;
    }
    const double r = std::ldexp(r0, level);
    detail::CellGrid grid(metric, r);
    std::vector<PointId> kept;
    std::vector<PointId> dropped;
    for (PointId p : prev) {
      bool covered = false;
      grid.for_each_candidate(p, [&](PointId q) {
        if (!covered && metric(p, q) <= r) covered = true;
      });
      if (covered) {
        dropped.push_back(p);
      } else {
        kept.push_back(p);
        grid.insert(p);
      }
    }
    for (PointId q : dropped) {
      PointId best = kNoPoint;
      double best_d = std::numeric_limits<double>::infinity();
      grid.for_each_candidate(q, [&](PointId c) {
        const double d = metric(q, c);
        if (d < best_d || (d == best_d && c < best)) {
          best_d = d;
          best = c;
        }
      });
      assert(best != kNoPoint && best_d <= r);
      top_level[q] = level - 1;
      up[q] = best;
    }
    for (PointId p : kept) top_level[p] = level;
    prev = std::move(kept);
  }
  assert(prev.size() == 1);
  const PointId root_point = prev.front();

  // A node (i, x) has children beyond (i-1, x) exactly at the levels
  // top_level[q] + 1 of the points q hanging under x; those levels start new
  // compressed vertices on x's chain.
  std::vector<std::vector<int>> breaks(n);
  for (PointId q = 0; q < n; ++q) {
    if (q != root_point) breaks[up[q]].push_back(top_level[q] + 1);
  }

  struct Run {
    PointId center;
    int low, high;
  };
  std::vector<Run> runs;
  std::vector<std::uint32_t> run_offset(n + 1, 0);
  for (PointId x = 0; x < n; ++x) {
    auto& b = breaks[x];
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    run_offset[x] = static_cast<std::uint32_t>(runs.size());
    int low = 0;
    for (int lvl : b) {
      runs.push_back({x, low, lvl - 1});
      low = lvl;
    }
    runs.push_back({x, low, top_level[x]});
  }
  run_offset[n] = static_cast<std::uint32_t>(runs.size());

  auto run_at = [&](int level, PointId x) {
    std::uint32_t i = run_offset[x];
    while (i + 1 < run_offset[x + 1] && runs[i + 1].low <= level) ++i;
    return i;
  };

  const std::size_t m = runs.size();
  std::vector<std::uint32_t> run_parent(m, UINT32_MAX);
  std::vector<std::vector<std::uint32_t>> run_children(m);
  std::uint32_t root_run = UINT32_MAX;
  for (std::uint32_t i = 0; i < m; ++i) {
    const Run& r = runs[i];
    if (i + 1 < run_offset[r.center + 1]) {
      run_parent[i] = i + 1;
    } else if (r.center == root_point) {
      root_run = i;
      continue;
    } else {
      run_parent[i] = run_at(r.high + 1, up[r.center]);
    }
    run_children[run_parent[i]].push_back(i);
  }
  assert(root_run != UINT32_MAX);

  // Breadth-first renumbering; children ordered by (center, low level).
  std::vector<VertexId> id_of(m, kNoVertex);
  std::vector<std::uint32_t> order{root_run};
  id_of[root_run] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    auto& ch = run_children[order[k]];
    std::sort(ch.begin(), ch.end(), [&](std::uint32_t a, std::uint32_t b) {
      return runs[a].center != runs[b].center ? runs[a].center < runs[b].center : runs[a].low < runs[b].low;
    });
    for (std::uint32_t c : ch) {
      id_of[c] = static_cast<VertexId>(order.size());
      order.push_back(c);
    }
  }

  tree.vertices_.resize(m);
  for (std::uint32_t k = 0; k < m; ++k) {
    const std::uint32_t i = order[k];
    NetVertex& v = tree.vertices_[k];
    v.id = k;
    v.center = runs[i].center;
    v.low_level = runs[i].low;
    v.level = runs[i].high;
    v.radius = std::ldexp(r0, v.level);
    v.parent = run_parent[i] == UINT32_MAX ? kNoVertex : id_of[run_parent[i]];
    for (std::uint32_t c : run_children[i]) v.children.push_back(id_of[c]);
  }

  tree.leaf_of_point_.resize(n);
  tree.chain_offset_ = run_offset;
  tree.chains_.resize(m);
  for (PointId x = 0; x < n; ++x) {
    for (std::uint32_t i = run_offset[x]; i < run_offset[x + 1]; ++i) {
      tree.chains_[i] = {runs[i].low, id_of[i]};
    }
    tree.leaf_of_point_[x] = id_of[run_offset[x]];
  }
  tree.point_top_level_ = std::move(top_level);
  tree.net_sizes_.assign(static_cast<std::size_t>(top) + 1, 0);
  for (PointId p = 0; p < n; ++p) {
    for (int i = 0; i <= tree.point_top_level_[p]; ++i) ++tree.net_sizes_[i];
  }
  return tree;
}

TreeSkeleton assign_representatives(TreeSkeleton tree, const Metric& metric) {
  const std::size_t m = tree.vertices_.size();
  std::vector<std::vector<PointId>> unused(m);
  // Children have larger ids than their parent, so a descending sweep is a
  // post-order.
  for (VertexId v = static_cast<VertexId>(m); v-- > 0;) {
    NetVertex& vx = tree.vertices_[v];
    if (vx.is_leaf()) {
      vx.representative = vx.center;
      unused[v].push_back(vx.center);
      continue;
    }
    VertexId biggest = vx.children.front();
    for (VertexId c : vx.children) {
      if (unused[c].size() > unused[biggest].size()) biggest = c;
    }
    std::vector<PointId> pool = std::move(unused[biggest]);
    for (VertexId c : vx.children) {
      if (c == biggest) continue;
      pool.insert(pool.end(), unused[c].begin(), unused[c].end());
      std::vector<PointId>().swap(unused[c]);
    }
    if (pool.empty()) throw std::logic_error("representative pool exhausted; tree is not compressed");
    std::size_t pick = 0;
    double pick_d = metric(vx.center, pool[0]);
    for (std::size_t i = 1; i < pool.size(); ++i) {
      const double d = metric(vx.center, pool[i]);
      if (d < pick_d || (d == pick_d && pool[i] < pool[pick])) {
        pick = i;
        pick_d = d;
      }
    }
    vx.representative = pool[pick];
    pool[pick] = pool.back();
    pool.pop_back();
    unused[v] = std::move(pool);
  }
  tree.has_reps_ = true;
  return tree;
}

}  // namespace ftspanner
