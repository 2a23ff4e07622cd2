#pragma once

// Slow reference implementations shared by the tests. None of them call into
// the library beyond reading its inputs.

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "ftspanner/metric.hpp"
#include "ftspanner/spanner_graph.hpp"

namespace oracle {

using ftspanner::Metric;
using ftspanner::PointId;
using ftspanner::SpannerGraph;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// All-pairs (weight, hops) by Floyd-Warshall, lexicographic, dead points
/// removed. Returns a row-major matrix of pairs.
inline std::vector<std::pair<double, int>> all_pairs(const SpannerGraph& g, const std::vector<char>* dead = nullptr) {
  const std::size_t n = g.num_points();
  std::vector<std::pair<double, int>> d(n * n, {kInf, 0});
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = {0.0, 0};
  for (const auto& e : g.edges()) {
    if (dead && ((*dead)[e.u] || (*dead)[e.v])) continue;
    const std::pair<double, int> w{e.weight, 1};
    d[e.u * n + e.v] = std::min(d[e.u * n + e.v], w);
    d[e.v * n + e.u] = std::min(d[e.v * n + e.u], w);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i * n + k].first == kInf) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::pair<double, int> via{d[i * n + k].first + d[k * n + j].first,
                                         d[i * n + k].second + d[k * n + j].second};
        if (via < d[i * n + j]) d[i * n + j] = via;
      }
    }
  }
  return d;
}

/// Shortest path weight using at most h edges, by h rounds of relaxation.
inline std::vector<double> bounded_from(const SpannerGraph& g, PointId s, int h) {
  std::vector<double> d(g.num_points(), kInf);
  d[s] = 0.0;
  for (int round = 0; round < h; ++round) {
    std::vector<double> next = d;
    for (const auto& e : g.edges()) {
      next[e.v] = std::min(next[e.v], d[e.u] + e.weight);
      next[e.u] = std::min(next[e.u], d[e.v] + e.weight);
    }
    d = std::move(next);
  }
  return d;
}

/// Exact stretch over all pairs by Floyd-Warshall.
inline double max_stretch(const Metric& m, const SpannerGraph& g, const std::vector<char>* dead = nullptr) {
  const auto d = all_pairs(g, dead);
  const std::size_t n = m.size();
  double worst = 1.0;
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) {
      if (dead && ((*dead)[i] || (*dead)[j])) continue;
      worst = std::max(worst, d[i * n + j].first / m(i, j));
    }
  }
  return worst;
}

/// Kruskal with union-find over all pairs.
inline double mst_weight(const Metric& m) {
  const std::size_t n = m.size();
  std::vector<std::tuple<double, PointId, PointId>> edges;
  for (PointId i = 0; i < n; ++i) {
    for (PointId j = i + 1; j < n; ++j) edges.emplace_back(m(i, j), i, j);
  }
  std::sort(edges.begin(), edges.end());
  std::vector<PointId> up(n);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](PointId x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  double total = 0.0;
  for (const auto& [w, a, b] : edges) {
    const PointId ra = find(a), rb = find(b);
    if (ra == rb) continue;
    up[ra] = rb;
    total += w;
  }
  return total;
}

}  // namespace oracle
