#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ftspanner/fault_tolerant.hpp"
#include "ftspanner/net_tree.hpp"
#include "ftspanner/spanner_graph.hpp"

namespace ftspanner {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Relative slack applied when a measured ratio is compared with a bound;
/// it absorbs rounding in long path sums and nothing else.
inline constexpr double kRatioSlack = 1e-9;
inline bool within(double ratio, double bound) { return ratio <= bound * (1.0 + kRatioSlack); }

struct PairOptions {
  /// Up to this many live points every pair is checked.
  std::size_t exhaustive_limit = 1024;
  /// Above the limit, enough random sources to cover this many pairs.
  std::size_t min_pairs = 200000;
  std::uint64_t seed = 1;
  /// Points flagged here are removed together with their edges.
  const std::vector<char>* dead = nullptr;
};

/// Sources to run from. Exhaustive mode pairs each source with the larger
/// live ids; sampled mode with every other live point.
struct PairPlan {
  std::vector<PointId> sources;
  bool exhaustive = true;
};
PairPlan plan_pairs(std::size_t n, const PairOptions& options);

struct StretchResult {
  /// Infinite when some checked pair has no qualifying path.
  double max_stretch = 1.0;
  PointId worst_u = kNoPoint, worst_v = kNoPoint;
  std::size_t pairs = 0;
  /// Pairs with no path at all.
  std::size_t separated = 0;
  /// Largest hop count of a shortest path (fewest hops among the lightest).
  int max_hops = 0;
};

/// Largest d_G(p,q) / delta(p,q) over the planned pairs.
StretchResult exact_stretch(const Metric& metric, const SpannerGraph& graph, const PairOptions& options = {});

/// Same, restricted to paths with at most h edges.
StretchResult hop_bounded_stretch(const Metric& metric, const SpannerGraph& graph, int h,
                                  const PairOptions& options = {});

/// Smallest h such that every planned pair has an h-hop path of weight at
/// most t * delta. Empty when some pair never gets one.
std::optional<int> hop_diameter_at_stretch(const Metric& metric, const SpannerGraph& graph, double t,
                                           const PairOptions& options = {});

/// Hop budget ceil(c_lambda * ceil(log2 n)).
int hop_budget(double c_lambda, std::size_t n);

struct DegreeLightness {
  std::uint32_t max_degree = 0;
  double weight = 0.0;
  double mst_weight = 0.0;
  double lightness = 0.0;
};
/// mst_weight <= 0 means compute it.
DegreeLightness audit_degree_lightness(const SpannerGraph& graph, const Metric& metric, double mst_weight = 0.0);

/// Indices of edges whose weight differs from the metric distance.
std::vector<std::size_t> weight_mismatches(const Metric& metric, const SpannerGraph& graph);

enum class FaultStrategy { kRandom, kTopDegree, kRepsetTargeted, kCluster, kExhaustive };
const char* to_string(FaultStrategy s);

struct FaultTrial {
  FaultStrategy strategy = FaultStrategy::kRandom;
  std::vector<PointId> faults;
  double worst_stretch = 1.0;
  int worst_hops = 0;
  std::size_t separated = 0;
  bool passed = false;
};

struct FaultTrialOptions {
  int random_trials = 50;
  int adversarial_trials = 10;
  /// Hop budget for surviving pairs.
  int hops = 0;
  /// Stretch bound for surviving pairs.
  double tolerance = 1.5;
  std::uint64_t seed = 1;
};

/// Random fault sets of size k, then adversarial ones: the k highest-degree
/// points, k points of a representative set of size k + 1 (or more), and the
/// k nearest neighbours of a random point.
std::vector<FaultTrial> fault_trials(const Metric& metric, const FTSpanner& ft, const FaultTrialOptions& options);

/// Every fault set of size at most k. Intended for n <= 12.
std::vector<FaultTrial> exhaustive_fault_trials(const Metric& metric, const SpannerGraph& graph, int k,
                                                const FaultTrialOptions& options);

/// Runs one trial with the given faults.
FaultTrial run_fault_trial(const Metric& metric, const SpannerGraph& graph, std::vector<PointId> faults,
                           FaultStrategy strategy, const FaultTrialOptions& options);

struct NetLevelCount {
  int level = 0;
  std::size_t n_i = 0;
  double r_i = 0.0;
  double n_r2 = 0.0;
};
struct NetCounts {
  std::vector<NetLevelCount> levels;
  double max_n_r2 = 0.0;
  double sum_n_r = 0.0;
  bool non_increasing = true;
};
NetCounts net_counts(const TreeSkeleton& tree);

/// Measured values plus named pass/fail checks. Serialized with a fixed key
/// order.
struct VerificationReport {
  std::string mode;
  std::size_t n = 0;
  int dim = 0;
  double epsilon = 0.0;
  int k = 0;
  std::uint64_t seed = 0;
  double gamma = 0.0;
  std::string constants_version;
  std::size_t edge_count = 0;
  std::optional<double> max_stretch;
  std::optional<int> hop_budget;
  std::optional<int> hop_diameter_at_stretch;
  std::optional<std::uint32_t> max_degree;
  std::optional<double> lightness;
  std::optional<double> build_ms;
  std::size_t weight_mismatches = 0;
  std::vector<FaultTrial> fault_trials;
  std::optional<NetCounts> net_counts;
  std::vector<std::pair<std::string, bool>> checks;

  bool passed() const;
};

std::string report_to_json(const VerificationReport& report);

}  // namespace ftspanner
