#include "grid.hpp"

#include <cmath>

namespace ftspanner::detail {

std::size_t CellGrid::KeyHash::operator()(const Key& k) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::int64_t v : k) {
    std::uint64_t x = static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    h ^= x;
  }
  return static_cast<std::size_t>(h);
}

CellGrid::CellGrid(const Metric& metric, double cell) : points_(metric.points()) {
  if (points_ != nullptr && points_->dim() <= kMaxGridDim && cell > 0.0 && std::isfinite(1.0 / cell)) {
    bucketed_ = true;
    dim_ = points_->dim();
    // Slightly wider cells so pairs at exactly one cell width never straddle
    // two cell boundaries after rounding.
    inv_cell_ = 1.0 / (cell * (1.0 + 1e-9));
    // Anchor cells at the bounding-box minimum so indices stay small.
    for (int k = 0; k < dim_; ++k) origin_[k] = points_->size() ? (*points_)[0][k] : 0.0;
    for (PointId p = 1; p < points_->size(); ++p) {
      for (int k = 0; k < dim_; ++k) origin_[k] = std::min(origin_[k], (*points_)[p][k]);
    }
  }
}

CellGrid::Key CellGrid::key_of(PointId p) const {
  Key key{};
  const auto row = (*points_)[p];
  for (int k = 0; k < dim_; ++k) {
    key[k] = static_cast<std::int64_t>(std::floor((row[k] - origin_[k]) * inv_cell_));
  }
  return key;
}

void CellGrid::insert(PointId p) {
  ++count_;
  if (bucketed_) {
    cells_[key_of(p)].push_back(p);
  } else {
    all_.push_back(p);
  }
}

}  // namespace ftspanner::detail
