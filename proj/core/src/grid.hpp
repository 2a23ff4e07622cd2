#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "ftspanner/metric.hpp"

namespace ftspanner::detail {

/// Uniform hash grid over a Euclidean PointSet. for_each_candidate visits
/// every inserted point in the 3^d cells around a query, which is a superset
/// of the points within one cell width. Table metrics and dimensions above
/// kMaxGridDim degrade to visiting every inserted point.
class CellGrid {
 public:
  static constexpr int kMaxGridDim = 4;

  CellGrid(const Metric& metric, double cell);

  void insert(PointId p);
  std::size_t size() const noexcept { return count_; }

  template <class F>
  void for_each_candidate(PointId q, F&& f) const {
    if (!bucketed_) {
      for (PointId p : all_) f(p);
      return;
    }
    const Key base = key_of(q);
    Key probe = base;
    visit(base, probe, 0, f);
  }

 private:
  using Key = std::array<std::int64_t, kMaxGridDim>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  Key key_of(PointId p) const;

  template <class F>
  void visit(const Key& base, Key& probe, int axis, F& f) const {
    if (axis == dim_) {
      const auto it = cells_.find(probe);
      if (it != cells_.end()) {
        for (PointId p : it->second) f(p);
      }
      return;
    }
    for (std::int64_t off = -1; off <= 1; ++off) {
      probe[axis] = base[axis] + off;
      visit(base, probe, axis + 1, f);
    }
    probe[axis] = base[axis];
  }

  const PointSet* points_ = nullptr;
  int dim_ = 0;
  bool bucketed_ = false;
  double inv_cell_ = 0.0;
  std::array<double, kMaxGridDim> origin_{};
  std::unordered_map<Key, std::vector<PointId>, KeyHash> cells_;
  std::vector<PointId> all_;
  std::size_t count_ = 0;
};

}  // namespace ftspanner::detail
