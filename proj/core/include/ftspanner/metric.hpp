#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ftspanner {

using PointId = std::uint32_t;
inline constexpr PointId kNoPoint = std::numeric_limits<PointId>::max();

/// Raised for malformed or inconsistent input data. `line()` is 0 when the
/// error is not tied to a line of a text file.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Finite, pairwise-distinct points of a common dimension, stored row-major.
class PointSet {
 public:
  PointSet() = default;
  /// Throws InputError on non-finite coordinates, a ragged buffer or a
  /// repeated point.
  PointSet(int dim, std::vector<double> coords);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  std::span<const double> operator[](PointId p) const {
    return {coords_.data() + static_cast<std::size_t>(p) * dim_, static_cast<std::size_t>(dim_)};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int dim_ = 0;
  std::vector<double> coords_;
};

/// The ground space: Euclidean distance over a PointSet, or an explicit
/// symmetric distance table. Cheap to copy; the payload is shared.
class Metric {
 public:
  explicit Metric(PointSet points);

  /// Row-major n*n table. Checks symmetry, zero diagonal, positive
  /// off-diagonal entries and the triangle inequality on sampled triples.
  static Metric from_table(std::size_t n, std::vector<double> table);

  std::size_t size() const noexcept { return n_; }
  bool is_euclidean() const noexcept { return points_ != nullptr; }
  /// Null for table metrics.
  const PointSet* points() const noexcept { return points_.get(); }

  double operator()(PointId a, PointId b) const {
    if (points_) {
      const int d = points_->dim();
      const double* x = points_->coords().data() + static_cast<std::size_t>(a) * d;
      const double* y = points_->coords().data() + static_cast<std::size_t>(b) * d;
      double s = 0.0;
      for (int i = 0; i < d; ++i) {
        const double t = x[i] - y[i];
        s += t * t;
      }
      return std::sqrt(s);
    }
    return (*table_)[static_cast<std::size_t>(a) * n_ + b];
  }

 private:
  Metric() = default;

  std::size_t n_ = 0;
  std::shared_ptr<const PointSet> points_;
  std::shared_ptr<const std::vector<double>> table_;
};

struct MetricExtremes {
  double delta_min = 0.0;
  double delta_max = 0.0;
  PointId closest_a = kNoPoint, closest_b = kNoPoint;
  double aspect_ratio() const { return delta_max / delta_min; }
};

/// Exact minimum and maximum inter-point distance. Euclidean inputs use a
/// sweep for the closest pair and a pruned scan for the diameter; tables
/// fall back to the pair scan.
MetricExtremes extremes(const Metric& metric);

/// Reference O(n^2) pair scan.
MetricExtremes extremes_brute_force(const Metric& metric);

struct MstEdge {
  PointId u = kNoPoint, v = kNoPoint;
  double weight = 0.0;
};

struct MstResult {
  std::vector<MstEdge> edges;
  double total_weight = 0.0;
};

/// Dense Prim in O(n^2) time and O(n) memory.
MstResult mst(const Metric& metric);

/// Uniform points in [0,1]^d. Deterministic across platforms: the stream is
/// std::mt19937_64 seeded with `seed`, and each coordinate is
/// (word >> 11) * 2^-53.
PointSet gen_uniform_cube(std::size_t n, int d, std::uint64_t seed);

/// Points 0, eta, 2*eta, ... on a line (dimension 1).
PointSet gen_evenly_spaced_line(std::size_t n, double eta);

/// Spot-checks the triangle inequality on `triples` random triples with the
/// given relative tolerance. Returns the number of violations.
std::size_t count_triangle_violations(const Metric& metric, std::size_t triples,
                                      std::uint64_t seed, double rel_tol = 1e-9);

}  // namespace ftspanner
