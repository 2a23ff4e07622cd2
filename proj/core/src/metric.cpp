#include "ftspanner/metric.hpp"

#include <algorithm>
#include <numeric>

#include "ftspanner/random.hpp"

namespace ftspanner {

InputError::InputError(const std::string& what, std::size_t line)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

PointSet::PointSet(int dim, std::vector<double> coords) : dim_(dim), coords_(std::move(coords)) {
  if (dim_ < 1) throw InputError("dimension must be positive");
  if (coords_.size() % static_cast<std::size_t>(dim_) != 0) {
    throw InputError("coordinate buffer is not a multiple of the dimension");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) throw InputError("non-finite coordinate");
  }
  const std::size_t n = size();
  std::vector<PointId> order(n);
  std::iota(order.begin(), order.end(), PointId{0});
  auto row = [&](PointId p) { return (*this)[p]; };
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    auto x = row(a), y = row(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  for (std::size_t i = 1; i < n; ++i) {
    auto x = row(order[i - 1]), y = row(order[i]);
    if (std::equal(x.begin(), x.end(), y.begin())) {
      const auto [a, b] = std::minmax(order[i - 1], order[i]);
      throw InputError("duplicate point: rows " + std::to_string(a) + " and " + std::to_string(b));
    }
  }
}

Metric::Metric(PointSet points)
    : n_(points.size()), points_(std::make_shared<const PointSet>(std::move(points))) {}

Metric Metric::from_table(std::size_t n, std::vector<double> table) {
  if (table.size() != n * n) throw InputError("distance table must hold n*n entries");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i * n + i] != 0.0) throw InputError("distance table has a nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = table[i * n + j], b = table[j * n + i];
      if (!std::isfinite(a) || a != b) throw InputError("distance table is not symmetric");
      if (a <= 0.0) throw InputError("distance table has a non-positive off-diagonal entry");
    }
  }
  Metric m;
  m.n_ = n;
  m.table_ = std::make_shared<const std::vector<double>>(std::move(table));
  if (n >= 3 && count_triangle_violations(m, 1000, 0x5eed) != 0) {
    throw InputError("distance table violates the triangle inequality");
  }
  return m;
}

std::size_t count_triangle_violations(const Metric& metric, std::size_t triples, std::uint64_t seed,
                                      double rel_tol) {
  const std::size_t n = metric.size();
  if (n < 3) return 0;
  Rng rng(seed);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < triples; ++t) {
    const auto a = static_cast<PointId>(rng.below(n));
    const auto b = static_cast<PointId>(rng.below(n));
    const auto c = static_cast<PointId>(rng.below(n));
    const double direct = metric(a, c);
    const double detour = metric(a, b) + metric(b, c);
    if (direct > detour * (1.0 + rel_tol)) ++bad;
  }
  return bad;
}

MetricExtremes extremes_brute_force(const Metric& metric) {
  const std::size_t n = metric.size();
  if (n < 2) throw InputError("at least two points are required");
  MetricExtremes ex;
  ex.delta_min = std::numeric_limits<double>::infinity();
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      const double d = metric(a, b);
      if (d < ex.delta_min) {
        ex.delta_min = d;
        ex.closest_a = a;
        ex.closest_b = b;
      }
      ex.delta_max = std::max(ex.delta_max, d);
    }
  }
  return ex;
}

namespace {

void closest_pair_sweep(const Metric& metric, MetricExtremes& ex) {
  const PointSet& ps = *metric.points();
  const std::size_t n = ps.size();
  const int d = ps.dim();

  int axis = 0;
  double best_extent = -1.0;
  for (int k = 0; k < d; ++k) {
    double lo = ps[0][k], hi = ps[0][k];
    for (PointId p = 1; p < n; ++p) {
      lo = std::min(lo, ps[p][k]);
      hi = std::max(hi, ps[p][k]);
    }
    if (hi - lo > best_extent) {
      best_extent = hi - lo;
      axis = k;
    }
  }

  std::vector<PointId> order(n);
  std::iota(order.begin(), order.end(), PointId{0});
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    const double x = ps[a][axis], y = ps[b][axis];
    return x != y ? x < y : a < b;
  });

  ex.delta_min = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const PointId a = order[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      const PointId b = order[j];
      // Projection gap is a lower bound on the distance.
      if (ps[b][axis] - ps[a][axis] > ex.delta_min) break;
      const double dist = metric(a, b);
      if (dist < ex.delta_min) {
        ex.delta_min = dist;
        ex.closest_a = std::min(a, b);
        ex.closest_b = std::max(a, b);
      }
    }
  }
}

void diameter_pruned(const Metric& metric, MetricExtremes& ex) {
  const PointSet& ps = *metric.points();
  const std::size_t n = ps.size();
  const int d = ps.dim();

  std::vector<double> centroid(d, 0.0);
  for (PointId p = 0; p < n; ++p) {
    for (int k = 0; k < d; ++k) centroid[k] += ps[p][k];
  }
  for (double& c : centroid) c /= static_cast<double>(n);

  std::vector<double> radial(n);
  for (PointId p = 0; p < n; ++p) {
    double s = 0.0;
    for (int k = 0; k < d; ++k) {
      const double t = ps[p][k] - centroid[k];
      s += t * t;
    }
    radial[p] = std::sqrt(s);
  }

  // Double sweep for a starting lower bound.
  PointId far = 0;
  double lower = 0.0;
  for (int round = 0; round < 2; ++round) {
    const PointId from = far;
    for (PointId q = 0; q < n; ++q) {
      const double dist = metric(from, q);
      if (dist > lower) {
        lower = dist;
        far = q;
      }
    }
  }

  std::vector<PointId> order(n);
  std::iota(order.begin(), order.end(), PointId{0});
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return radial[a] != radial[b] ? radial[a] > radial[b] : a < b;
  });

  // delta(p,q) <= radial[p] + radial[q]; the slack absorbs rounding in that bound.
  constexpr double kSlack = 1e-9;
  for (std::size_t i = 0; i < n; ++i) {
    const PointId a = order[i];
    if ((radial[a] + radial[order[0]]) * (1.0 + kSlack) < lower) break;
    for (std::size_t j = 0; j < i; ++j) {
      const PointId b = order[j];
      if ((radial[a] + radial[b]) * (1.0 + kSlack) < lower) break;
      lower = std::max(lower, metric(a, b));
    }
  }
  ex.delta_max = lower;
}

}  // namespace

MetricExtremes extremes(const Metric& metric) {
  if (metric.size() < 2) throw InputError("at least two points are required");
  if (!metric.is_euclidean()) return extremes_brute_force(metric);
  MetricExtremes ex;
  closest_pair_sweep(metric, ex);
  diameter_pruned(metric, ex);
  return ex;
}

MstResult mst(const Metric& metric) {
  const std::size_t n = metric.size();
  MstResult out;
  if (n < 2) return out;
  std::vector<double> best(n, std::numeric_limits<double>::infinity());
  std::vector<PointId> link(n, kNoPoint);
  std::vector<char> in_tree(n, 0);
  PointId cur = 0;
  in_tree[0] = 1;
  out.edges.reserve(n - 1);
  for (std::size_t step = 1; step < n; ++step) {
    PointId next = kNoPoint;
    double next_w = std::numeric_limits<double>::infinity();
    for (PointId q = 0; q < n; ++q) {
      if (in_tree[q]) continue;
      const double w = metric(cur, q);
      if (w < best[q]) {
        best[q] = w;
        link[q] = cur;
      }
      if (best[q] < next_w) {
        next_w = best[q];
        next = q;
      }
    }
    in_tree[next] = 1;
    out.edges.push_back({std::min(link[next], next), std::max(link[next], next), next_w});
    out.total_weight += next_w;
    cur = next;
  }
  return out;
}

PointSet gen_uniform_cube(std::size_t n, int d, std::uint64_t seed) {
  if (n < 2) throw InputError("uniform cube generator needs n >= 2");
  if (d < 1) throw InputError("uniform cube generator needs d >= 1");
  Rng rng(seed);
  std::vector<double> coords(n * static_cast<std::size_t>(d));
  for (double& c : coords) c = rng.uniform01();
  return PointSet(d, std::move(coords));
}

PointSet gen_evenly_spaced_line(std::size_t n, double eta) {
  if (n < 2) throw InputError("line generator needs n >= 2");
  if (!(eta > 0.0) || !std::isfinite(eta)) throw InputError("line spacing must be positive");
  std::vector<double> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = static_cast<double>(i) * eta;
  return PointSet(1, std::move(coords));
}

}  // namespace ftspanner
