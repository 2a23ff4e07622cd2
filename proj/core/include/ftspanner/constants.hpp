#pragma once

#include <filesystem>
#include <string>

namespace ftspanner {

/// Measured constants that the checks assert against. They were fixed by a
/// calibration run and are versioned so reports can name the set they used.
struct Constants {
  std::string version;
  /// Internal epsilon handed to the tree-like spanner per unit of target epsilon.
  double eps_scale = 0.0;
  /// Hop budget is c_lambda * ceil(log2 n).
  double c_lambda = 0.0;
  /// Fault-tolerant stretch bound is 1 + c_ft * epsilon.
  double c_ft = 0.0;
  /// lightness(H*) <= c_l * log2 n.
  double c_l = 0.0;
  /// n_i * r_i^2 <= c_net on the unit square.
  double c_net = 0.0;
  /// sum_i n_i * r_i <= c_sum * sqrt(n).
  double c_sum = 0.0;
  /// MST weight / sqrt(n) within [mst_low, mst_high] on the unit square.
  double mst_low = 0.0;
  double mst_high = 0.0;
  /// Evenly spaced line: lightness / log2 n within [line_low, line_high].
  double line_low = 0.0;
  double line_high = 0.0;
  /// Max degree of H* at epsilon = 0.5 in the plane.
  int max_degree = 0;
  /// Tree shortcut: vertex-to-ancestor hops <= c_hop * log2 m.
  double c_hop = 0.0;
  /// maxdeg(H*_FT) <= c_k * (k + 1)^2.
  double c_k = 0.0;
  /// lightness(H*_FT) <= c_k_light * (k + 1)^2 * log2 n.
  double c_k_light = 0.0;
  /// Shortcut-derived point edges weigh at most c_light * delta_max / n.
  double c_light = 0.0;

  friend bool operator==(const Constants&, const Constants&) = default;
};

/// The compiled-in set.
const Constants& default_constants();

/// Reads a constants JSON file. Missing keys are an error.
Constants load_constants(const std::filesystem::path& path);
std::string constants_to_json(const Constants& c);

/// Name of the environment variable that points at an override file.
inline constexpr const char* kConstantsEnv = "FTSPANNER_CONSTANTS";

/// The override file named by FTSPANNER_CONSTANTS if set, else the defaults.
/// Read once per process.
const Constants& active_constants();

/// Location of the constants file shipped with the sources.
std::filesystem::path bundled_constants_path();

}  // namespace ftspanner
