#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <vector>

#include "ftspanner/metric.hpp"
#include "ftspanner/net_tree.hpp"

namespace ftspanner {

/// An undirected edge between points u < v. The anchor names the two tree
/// vertices the edge was derived from; anchor_u belongs to u's side.
struct SpannerEdge {
  PointId u = kNoPoint, v = kNoPoint;
  double weight = 0.0;
  VertexId anchor_u = kNoVertex, anchor_v = kNoVertex;

  friend bool operator==(const SpannerEdge&, const SpannerEdge&) = default;
};

/// Compressed adjacency lists. Neighbors of p are target[offset[p]..offset[p+1]).
struct Adjacency {
  std::vector<std::uint32_t> offset;
  std::vector<PointId> target;
  std::vector<double> weight;

  std::uint32_t degree(PointId p) const { return offset[p + 1] - offset[p]; }
};

/// Simple weighted graph over point indices with edges kept sorted by (u, v).
class SpannerGraph {
 public:
  class Builder;

  SpannerGraph() = default;
  explicit SpannerGraph(std::size_t n) : n_(n) {}

  /// Validates ranges, rejects self-loops and repeated pairs, and sorts.
  static SpannerGraph from_edges(std::size_t n, std::vector<SpannerEdge> edges);

  /// Union of two graphs on the same points. A pair present in both keeps
  /// the edge of smaller rank, ties going to `a`.
  static SpannerGraph merge(const SpannerGraph& a, const SpannerGraph& b,
                            const std::function<int(const SpannerEdge&)>& rank);

  std::size_t num_points() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<SpannerEdge>& edges() const noexcept { return edges_; }

  /// Order of the endpoints does not matter. Null when absent.
  const SpannerEdge* find(PointId a, PointId b) const;
  bool contains(PointId a, PointId b) const { return find(a, b) != nullptr; }

  double total_weight() const;
  std::vector<std::uint32_t> degrees() const;
  std::uint32_t max_degree() const;

  /// Adjacency with every edge touching a point flagged in `dead` left out.
  Adjacency adjacency(const std::vector<char>* dead = nullptr) const;

 private:
  std::size_t n_ = 0;
  std::vector<SpannerEdge> edges_;
};

/// Collects candidate edges and resolves repeated point pairs: the smaller
/// rank wins, and among equal ranks the earliest candidate.
class SpannerGraph::Builder {
 public:
  explicit Builder(std::size_t n) : n_(n) {}

  void reserve(std::size_t count) { cand_.reserve(count); }
  /// Self-loops are ignored. Returns false for them.
  bool add(PointId a, PointId b, double weight, VertexId anchor_a, VertexId anchor_b, int rank);
  std::size_t candidates() const noexcept { return cand_.size(); }

  SpannerGraph finish() &&;

 private:
  struct Candidate {
    std::uint64_t key;
    std::int32_t rank;
    std::uint32_t seq;
    VertexId anchor_u, anchor_v;
    double weight;
  };
  std::size_t n_;
  std::vector<Candidate> cand_;
};

/// Spanner file: "# n=<n> eps=<eps> k=<k>" then "u v weight anchor_u anchor_v"
/// lines separated by single spaces, weights in shortest round-trip form.
struct SpannerFile {
  SpannerGraph graph;
  double epsilon = 0.0;
  int k = 0;
};

void write_spanner(std::ostream& out, const SpannerGraph& graph, double epsilon, int k);
void save_spanner(const std::filesystem::path& path, const SpannerGraph& graph, double epsilon, int k);
SpannerFile read_spanner(std::istream& in);
SpannerFile load_spanner(const std::filesystem::path& path);

}  // namespace ftspanner
