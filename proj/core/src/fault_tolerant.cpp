#include "ftspanner/fault_tolerant.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ftspanner/tree_like_spanner.hpp"

namespace ftspanner {

void check_fault_budget(int k, std::size_t n) {
  if (k < 0 || n < 2 || static_cast<std::size_t>(k) > n - 2) {
    throw std::out_of_range("fault budget k=" + std::to_string(k) + " outside [0, n-2] for n=" + std::to_string(n));
  }
}

std::vector<VertexId> descendant_sample(const TreeSkeleton& tree, VertexId v, int k, int beta) {
  const std::size_t want = static_cast<std::size_t>(beta) * static_cast<std::size_t>(k) + 1;
  std::vector<VertexId> out{v};
  std::size_t layer_begin = 0;
  while (out.size() < want && layer_begin < out.size()) {
    const std::size_t layer_end = out.size();
    std::vector<VertexId> next;
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      const auto& ch = tree.vertex(out[i]).children;
      next.insert(next.end(), ch.begin(), ch.end());
    }
    std::sort(next.begin(), next.end());
    for (VertexId c : next) {
      if (out.size() == want) break;
      out.push_back(c);
    }
    layer_begin = layer_end;
  }
  return out;
}

RepSets rep_sets(const TreeSkeleton& tree, int k) {
  check_fault_budget(k, tree.num_points());
  RepSets rs;
  rs.k = k;
  rs.beta = tree.rep_multiplicity_bound();
  rs.d_star.resize(tree.size());
  rs.r_star.resize(tree.size());
  for (VertexId v = 0; v < tree.size(); ++v) {
    rs.d_star[v] = descendant_sample(tree, v, k, rs.beta);
    auto& r = rs.r_star[v];
    for (VertexId x : rs.d_star[v]) r.push_back(tree.vertex(x).representative);
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
  }
  return rs;
}

FTSpanner ft_augment(const BasicSpanner& basic, const Metric& metric, int k) {
  const TreeSkeleton& tree = basic.skeleton;
  FTSpanner out;
  out.k = k;
  out.reps = rep_sets(tree, k);
  if (k == 0) {
    out.graph = basic.graph;
    return out;
  }
  SpannerGraph::Builder builder(basic.graph.num_points());
  std::size_t expected = 0;
  for (const SpannerEdge& e : basic.links) {
    expected += (out.reps.r_star[e.anchor_u].size() + 1) * (out.reps.r_star[e.anchor_v].size() + 1);
  }
  builder.reserve(expected);
  std::vector<PointId> side_u, side_v;
  auto side = [&](std::vector<PointId>& out_side, PointId p, VertexId anchor) {
    const auto& r = out.reps.r_star[anchor];
    out_side.assign(r.begin(), r.end());
    if (!std::binary_search(r.begin(), r.end(), p)) out_side.push_back(p);
  };
  for (const SpannerEdge& e : basic.links) {
    const int rank = anchor_rank(tree, e.anchor_u, e.anchor_v);
    side(side_u, e.u, e.anchor_u);
    side(side_v, e.v, e.anchor_v);
    for (PointId a : side_u) {
      for (PointId b : side_v) builder.add(a, b, metric(a, b), e.anchor_u, e.anchor_v, rank);
    }
  }
  // Original edges keep their own anchors on ties.
  out.graph = SpannerGraph::merge(basic.graph, std::move(builder).finish(),
                                  [&](const SpannerEdge& e) { return anchor_rank(tree, e.anchor_u, e.anchor_v); });
  return out;
}

FTSpanner build_ft_spanner(const Metric& metric, const BuildOptions& options, int k, BasicSpanner* basic) {
  check_fault_budget(k, metric.size());
  BasicSpanner b = build_basic_spanner(metric, options);
  FTSpanner ft = ft_augment(b, metric, k);
  if (basic) *basic = std::move(b);
  return ft;
}

}  // namespace ftspanner
