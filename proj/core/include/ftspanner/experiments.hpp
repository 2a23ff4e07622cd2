#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ftspanner/constants.hpp"

namespace ftspanner {

/// Fixed thresholds of the suite checks.
inline constexpr double kLightnessGrowthBound = 1.3;  // median lightness(8n) / lightness(n)
inline constexpr double kFtDoublingBound = 4.5;       // maxdeg and lightness, k -> 2k
inline constexpr double kDegreeSlack = 2.0;           // maxdeg(largest n) - maxdeg(smallest n)
inline constexpr double kTimeDoublingBound = 2.6;     // build time, n -> 2n
inline constexpr double kTimeK8OverK1Bound = 70.0;    // build time, k = 1 -> 8

struct ExperimentSpec {
  std::string suite;
  std::vector<std::size_t> sizes;
  std::vector<int> ks;
  std::vector<std::uint64_t> seeds;
  int dim = 2;
  double epsilon = 0.5;
  /// Spacing for the line suite.
  double eta = 1.0;
  /// Timing repetitions per cell.
  int repetitions = 5;
  int random_trials = 50;
  int adversarial_trials = 10;
};

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void write_csv(std::ostream& out) const;
  void save_csv(const std::filesystem::path& path) const;
};

using Checks = std::vector<std::pair<std::string, bool>>;

struct SuiteResult {
  Table table;
  Checks checks;
  bool passed() const;
};

/// random-lightness, line-lightness, degree-scaling, ft-trials, net-counts, timing.
const std::vector<std::string>& suite_names();

/// Ladder, k values and seeds each suite uses when none are given.
ExperimentSpec default_spec(const std::string& suite);

/// Throws std::invalid_argument for unknown suites or sizes below 2.
SuiteResult run_suite(const ExperimentSpec& spec, const Constants& constants = active_constants());

double median(std::vector<double> values);

}  // namespace ftspanner
