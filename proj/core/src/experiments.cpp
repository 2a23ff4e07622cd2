#include "ftspanner/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>

#include "ftspanner/fault_tolerant.hpp"
#include "ftspanner/points_io.hpp"
#include "ftspanner/verify.hpp"

namespace ftspanner {

void Table::write_csv(std::ostream& out) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

void Table::save_csv(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_csv(out);
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"random-lightness", "line-lightness", "degree-scaling",
                                              "ft-trials",        "net-counts",     "timing"};
  return names;
}

double median(std::vector<double> values) {
  if (values.empty()) return std::nan("");
  std::sort(values.begin(), values.end());
  const std::size_t m = values.size() / 2;
  return values.size() % 2 ? values[m] : (values[m - 1] + values[m]) / 2.0;
}

namespace {

std::vector<std::size_t> powers_of_two(int lo, int hi) {
  std::vector<std::size_t> out;
  for (int e = lo; e <= hi; ++e) out.push_back(std::size_t{1} << e);
  return out;
}

std::vector<std::uint64_t> seed_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = lo; s <= hi; ++s) out.push_back(s);
  return out;
}

std::string fmt(double v) { return std::isfinite(v) ? format_double(v) : "inf"; }
template <class T>
std::string fmt_int(T v) {
  return std::to_string(v);
}

BuildOptions build_options(const ExperimentSpec& spec, const Constants& c) {
  BuildOptions o;
  o.epsilon = spec.epsilon;
  o.eps_scale = c.eps_scale;
  return o;
}

double log2n(std::size_t n) { return std::log2(static_cast<double>(n)); }

SuiteResult random_lightness(const ExperimentSpec& spec, const Constants& c) {
  SuiteResult res;
  res.table.header = {"n", "dim", "k", "seed", "epsilon", "lightness", "mst_over_sqrt_n", "edges", "constants_version"};
  std::map<std::pair<std::size_t, int>, std::vector<double>> light;
  bool mst_ok = true, k_ok = true;
  for (std::size_t n : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      const Metric metric(gen_uniform_cube(n, spec.dim, seed));
      const double mst_w = mst(metric).total_weight;
      const double mst_ratio = mst_w / std::sqrt(static_cast<double>(n));
      if (spec.dim == 2 && (mst_ratio < c.mst_low || mst_ratio > c.mst_high)) mst_ok = false;
      for (int k : spec.ks) {
        const FTSpanner ft = build_ft_spanner(metric, build_options(spec, c), k);
        const double l = ft.graph.total_weight() / mst_w;
        light[{n, k}].push_back(l);
        if (k > 0 && l / ((k + 1.0) * (k + 1.0)) > c.c_k_light * log2n(n)) k_ok = false;
        res.table.rows.push_back({fmt_int(n), fmt_int(spec.dim), fmt_int(k), fmt_int(seed), fmt(spec.epsilon), fmt(l),
                                  fmt(mst_ratio), fmt_int(ft.graph.num_edges()), c.version});
      }
    }
  }
  for (std::size_t n : spec.sizes) {
    if (!light.count({8 * n, 0}) || !light.count({n, 0})) continue;
    const double ratio = median(light[{8 * n, 0}]) / median(light[{n, 0}]);
    res.checks.emplace_back("median lightness(" + fmt_int(8 * n) + ")/lightness(" + fmt_int(n) + ") = " + fmt(ratio) +
                                " <= " + fmt(kLightnessGrowthBound),
                            within(ratio, kLightnessGrowthBound));
  }
  if (spec.dim == 2) res.checks.emplace_back("mst/sqrt(n) within frozen band", mst_ok);
  res.checks.emplace_back("lightness/(k+1)^2 <= c_k_light*log2 n", k_ok);
  return res;
}

SuiteResult line_lightness(const ExperimentSpec& spec, const Constants& c) {
  SuiteResult res;
  res.table.header = {"n", "eta", "epsilon", "lightness", "lightness_over_log2n", "edges", "constants_version"};
  bool band = true;
  std::vector<double> light;
  for (std::size_t n : spec.sizes) {
    const Metric metric(gen_evenly_spaced_line(n, spec.eta));
    const BasicSpanner b = build_basic_spanner(metric, build_options(spec, c));
    const double mst_w = static_cast<double>(n - 1) * spec.eta;
    const double l = b.graph.total_weight() / mst_w;
    const double per_log = l / log2n(n);
    if (per_log < c.line_low || per_log > c.line_high) band = false;
    light.push_back(l);
    res.table.rows.push_back({fmt_int(n), fmt(spec.eta), fmt(spec.epsilon), fmt(l), fmt(per_log),
                              fmt_int(b.graph.num_edges()), c.version});
  }
  res.checks.emplace_back("lightness/log2 n within frozen band", band);
  if (light.size() >= 2) {
    res.checks.emplace_back("lightness grows from smallest to largest n", light.back() > light.front());
  }
  return res;
}

SuiteResult degree_scaling(const ExperimentSpec& spec, const Constants& c) {
  SuiteResult res;
  res.table.header = {"n", "dim", "k", "seed", "epsilon", "max_degree", "lightness", "edges", "constants_version"};
  std::map<std::tuple<std::size_t, int, std::uint64_t>, std::pair<double, double>> cell;
  bool cap_ok = true, k_cap_ok = true;
  for (std::size_t n : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      const Metric metric(gen_uniform_cube(n, spec.dim, seed));
      const double mst_w = mst(metric).total_weight;
      for (int k : spec.ks) {
        const FTSpanner ft = build_ft_spanner(metric, build_options(spec, c), k);
        const double deg = ft.graph.max_degree();
        const double l = ft.graph.total_weight() / mst_w;
        cell[{n, k, seed}] = {deg, l};
        if (k == 0 && spec.dim == 2 && deg > c.max_degree) cap_ok = false;
        if (deg > c.c_k * (k + 1.0) * (k + 1.0)) k_cap_ok = false;
        res.table.rows.push_back({fmt_int(n), fmt_int(spec.dim), fmt_int(k), fmt_int(seed), fmt(spec.epsilon),
                                  fmt(deg), fmt(l), fmt_int(ft.graph.num_edges()), c.version});
      }
    }
  }
  const bool has_k0 = std::find(spec.ks.begin(), spec.ks.end(), 0) != spec.ks.end();
  if (has_k0 && spec.dim == 2) res.checks.emplace_back("max degree of H* <= frozen constant", cap_ok);
  res.checks.emplace_back("max degree <= c_k*(k+1)^2", k_cap_ok);
  for (std::uint64_t seed : spec.seeds) {
    if (has_k0 && spec.sizes.size() >= 2) {
      const double lo = cell[{spec.sizes.front(), 0, seed}].first, hi = cell[{spec.sizes.back(), 0, seed}].first;
      res.checks.emplace_back("seed " + fmt_int(seed) + ": maxdeg(" + fmt_int(spec.sizes.back()) + ")=" + fmt(hi) +
                                  " <= maxdeg(" + fmt_int(spec.sizes.front()) + ")+2=" + fmt(lo + kDegreeSlack),
                              hi <= lo + kDegreeSlack);
    }
    for (std::size_t n : spec.sizes) {
      for (int k : spec.ks) {
        if (k == 0) continue;
        const bool has_double = std::find(spec.ks.begin(), spec.ks.end(), 2 * k) != spec.ks.end();
        if (has_double) {
          const auto a = cell[{n, k, seed}], b = cell[{n, 2 * k, seed}];
          res.checks.emplace_back("n=" + fmt_int(n) + " seed " + fmt_int(seed) + ": maxdeg(k=" + fmt_int(2 * k) +
                                      ")/maxdeg(k=" + fmt_int(k) + ")=" + fmt(b.first / a.first) + " <= " + fmt(kFtDoublingBound),
                                  within(b.first / a.first, kFtDoublingBound));
          res.checks.emplace_back("n=" + fmt_int(n) + " seed " + fmt_int(seed) + ": lightness(k=" + fmt_int(2 * k) +
                                      ")/lightness(k=" + fmt_int(k) + ")=" + fmt(b.second / a.second) + " <= " + fmt(kFtDoublingBound),
                                  within(b.second / a.second, kFtDoublingBound));
        }
        if (has_k0) {
          const double ratio = cell[{n, k, seed}].first / cell[{n, 0, seed}].first;
          res.checks.emplace_back("n=" + fmt_int(n) + " seed " + fmt_int(seed) + ": maxdeg(k=" + fmt_int(k) +
                                      ")/maxdeg(0)=" + fmt(ratio) + " >= " + fmt_int(k),
                                  ratio >= k);
        }
      }
    }
  }
  return res;
}

SuiteResult ft_trials(const ExperimentSpec& spec, const Constants& c) {
  SuiteResult res;
  res.table.header = {"n",      "dim",   "k",         "seed",      "epsilon", "strategy",         "faults",
                      "hops",   "bound", "worst_stretch", "worst_hops", "separated", "passed", "constants_version"};
  bool separated_ok = true, stretch_ok = true;
  for (std::size_t n : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      const Metric metric(gen_uniform_cube(n, spec.dim, seed));
      for (int k : spec.ks) {
        const FTSpanner ft = build_ft_spanner(metric, build_options(spec, c), k);
        FaultTrialOptions fo;
        fo.random_trials = spec.random_trials;
        fo.adversarial_trials = spec.adversarial_trials;
        fo.hops = hop_budget(c.c_lambda, n);
        fo.tolerance = 1.0 + c.c_ft * spec.epsilon;
        fo.seed = seed;
        auto trials = fault_trials(metric, ft, fo);
        if (n <= 12 && k <= 2) {
          auto all = exhaustive_fault_trials(metric, ft.graph, k, fo);
          trials.insert(trials.end(), all.begin(), all.end());
        }
        for (const FaultTrial& t : trials) {
          if (t.separated) separated_ok = false;
          if (!within(t.worst_stretch, fo.tolerance)) stretch_ok = false;
          std::string faults;
          for (PointId p : t.faults) faults += (faults.empty() ? "" : " ") + fmt_int(p);
          res.table.rows.push_back({fmt_int(n), fmt_int(spec.dim), fmt_int(k), fmt_int(seed), fmt(spec.epsilon),
                                    to_string(t.strategy), faults, fmt_int(fo.hops), fmt(fo.tolerance),
                                    fmt(t.worst_stretch), fmt_int(t.worst_hops), fmt_int(t.separated),
                                    t.passed ? "1" : "0", c.version});
        }
      }
    }
  }
  res.checks.emplace_back("no surviving pair separated", separated_ok);
  res.checks.emplace_back("hop-bounded stretch <= 1 + c_ft*epsilon", stretch_ok);
  return res;
}

SuiteResult net_counts_suite(const ExperimentSpec& spec, const Constants& c) {
  SuiteResult res;
  res.table.header = {"n", "dim", "seed", "level", "n_i", "r_i", "n_i_r_i2", "constants_version"};
  bool net_ok = true, sum_ok = true, mono_ok = true, top_ok = true, mst_ok = true;
  for (std::size_t n : spec.sizes) {
    for (std::uint64_t seed : spec.seeds) {
      const Metric metric(gen_uniform_cube(n, spec.dim, seed));
      const TreeSkeleton tree = build_net_tree(metric);
      const NetCounts nc = net_counts(tree);
      for (const NetLevelCount& lc : nc.levels) {
        res.table.rows.push_back({fmt_int(n), fmt_int(spec.dim), fmt_int(seed), fmt_int(lc.level), fmt_int(lc.n_i),
                                  fmt(lc.r_i), fmt(lc.n_r2), c.version});
      }
      if (spec.dim == 2 && nc.max_n_r2 > c.c_net) net_ok = false;
      if (nc.sum_n_r > c.c_sum * std::sqrt(static_cast<double>(n))) sum_ok = false;
      if (!nc.non_increasing || nc.levels.front().n_i != n) mono_ok = false;
      if (nc.levels.back().n_i != 1) top_ok = false;
      if (spec.dim == 2) {
        const double ratio = mst(metric).total_weight / std::sqrt(static_cast<double>(n));
        if (ratio < c.mst_low || ratio > c.mst_high) mst_ok = false;
      }
    }
  }
  if (spec.dim == 2) res.checks.emplace_back("n_i*r_i^2 <= c_net at every level", net_ok);
  res.checks.emplace_back("sum n_i*r_i <= c_sum*sqrt(n)", sum_ok);
  res.checks.emplace_back("n_0 = n and n_i non-increasing", mono_ok);
  res.checks.emplace_back("top net is a single point", top_ok);
  if (spec.dim == 2) res.checks.emplace_back("mst/sqrt(n) within frozen band", mst_ok);
  return res;
}

SuiteResult timing(const ExperimentSpec& spec, const Constants& c) {
  SuiteResult res;
  res.table.header = {"n", "dim", "k", "seed", "repetition", "build_ms", "constants_version"};
  const std::uint64_t seed = spec.seeds.empty() ? 1 : spec.seeds.front();
  std::vector<Metric> metrics;
  for (std::size_t n : spec.sizes) metrics.emplace_back(gen_uniform_cube(n, spec.dim, seed));
  // Repetitions sweep all cells in turn so a slow stretch of the machine is
  // spread over every size instead of landing on one.
  std::map<std::pair<std::size_t, int>, std::vector<double>> times;
  for (int rep = 0; rep < spec.repetitions; ++rep) {
    for (const Metric& metric : metrics) {
      const std::size_t n = metric.size();
      for (int k : spec.ks) {
        const auto t0 = std::chrono::steady_clock::now();
        const FTSpanner ft = build_ft_spanner(metric, build_options(spec, c), k);
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        times[{n, k}].push_back(ms);
        res.table.rows.push_back({fmt_int(n), fmt_int(spec.dim), fmt_int(k), fmt_int(seed), fmt_int(rep), fmt(ms),
                                  c.version});
      }
    }
  }
  std::map<std::pair<std::size_t, int>, double> med;
  for (const auto& [cell, t] : times) med[cell] = median(t);
  for (int k : spec.ks) {
    for (std::size_t n : spec.sizes) {
      if (!med.count({2 * n, k})) continue;
      const double ratio = med[{2 * n, k}] / med[{n, k}];
      res.checks.emplace_back("k=" + fmt_int(k) + ": time(" + fmt_int(2 * n) + ")/time(" + fmt_int(n) +
                                  ")=" + fmt(ratio) + " <= " + fmt(kTimeDoublingBound),
                              ratio <= kTimeDoublingBound);
    }
  }
  for (std::size_t n : spec.sizes) {
    if (!med.count({n, 1}) || !med.count({n, 8})) continue;
    const double ratio = med[{n, 8}] / med[{n, 1}];
    res.checks.emplace_back("n=" + fmt_int(n) + ": time(k=8)/time(k=1)=" + fmt(ratio) + " <= " + fmt(kTimeK8OverK1Bound),
                            ratio <= kTimeK8OverK1Bound);
  }
  return res;
}

}  // namespace

ExperimentSpec default_spec(const std::string& suite) {
  ExperimentSpec s;
  s.suite = suite;
  s.ks = {0};
  s.seeds = {1};
  if (suite == "random-lightness") {
    s.sizes = {512, 4096};
    s.seeds = seed_range(1, 10);
  } else if (suite == "line-lightness") {
    s.sizes = powers_of_two(8, 14);
  } else if (suite == "degree-scaling") {
    s.sizes = {256, 1024, 4096, 8192};
  } else if (suite == "ft-trials") {
    s.sizes = {512};
    s.ks = {1, 2, 3};
  } else if (suite == "net-counts") {
    s.sizes = {4096};
    s.seeds = seed_range(1, 10);
  } else if (suite == "timing") {
    s.sizes = powers_of_two(10, 15);
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return s;
}

SuiteResult run_suite(const ExperimentSpec& spec, const Constants& constants) {
  for (std::size_t n : spec.sizes) {
    if (n < 2) throw std::invalid_argument("experiment sizes must be at least 2");
  }
  if (spec.sizes.empty()) throw std::invalid_argument("experiment needs at least one size");
  for (int k : spec.ks) {
    for (std::size_t n : spec.sizes) check_fault_budget(k, n);
  }
  if (spec.suite == "random-lightness") return random_lightness(spec, constants);
  if (spec.suite == "line-lightness") return line_lightness(spec, constants);
  if (spec.suite == "degree-scaling") return degree_scaling(spec, constants);
  if (spec.suite == "ft-trials") return ft_trials(spec, constants);
  if (spec.suite == "net-counts") return net_counts_suite(spec, constants);
  if (spec.suite == "timing") return timing(spec, constants);
  throw std::invalid_argument("unknown suite: " + spec.suite);
}

}  // namespace ftspanner
