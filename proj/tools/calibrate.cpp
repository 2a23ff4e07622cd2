// Measures the quantities behind every frozen constant over a matrix of
// random instances and prints the worst value seen for each.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>

#include "ftspanner/constants.hpp"
#include "ftspanner/experiments.hpp"
#include "ftspanner/fault_tolerant.hpp"
#include "ftspanner/points_io.hpp"
#include "ftspanner/tree_shortcut.hpp"
#include "ftspanner/verify.hpp"

using namespace ftspanner;

namespace {

struct Extremes {
  double lo = kInfinity, hi = -kInfinity;
  void add(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
};

double log2n(std::size_t n) { return std::log2(static_cast<double>(n)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measure calibration quantities"};
  int lo_exp = 8, hi_exp = 13, seeds = 10, ft_seeds = 3;
  std::vector<int> dims{1, 2, 3};
  double epsilon = 0.5;
  app.add_option("--lo", lo_exp, "Smallest size exponent");
  app.add_option("--hi", hi_exp, "Largest size exponent");
  app.add_option("--seeds", seeds, "Seeds per cell");
  app.add_option("--ft-seeds", ft_seeds, "Seeds per fault-tolerance cell");
  app.add_option("--dims", dims, "Dimensions")->delimiter(',');
  app.add_option("--epsilon", epsilon, "Target stretch is 1 + epsilon");
  CLI11_PARSE(app, argc, argv);

  const Constants& c = active_constants();
  BuildOptions o;
  o.epsilon = epsilon;
  o.eps_scale = c.eps_scale;
  std::map<std::string, Extremes> m;
  auto add = [&](int d, const std::string& name, double v) { m["d" + std::to_string(d) + " " + name].add(v); };

  for (int d : dims) {
    for (int e = lo_exp; e <= hi_exp; ++e) {
      const std::size_t n = std::size_t{1} << e;
      for (int seed = 1; seed <= seeds; ++seed) {
        const Metric metric(gen_uniform_cube(n, d, seed));
        const BasicSpanner b = build_basic_spanner(metric, o);
        const double mst_w = mst(metric).total_weight;
        const StretchResult s = exact_stretch(metric, b.graph);
        const auto hd = hop_diameter_at_stretch(metric, b.graph, 1.0 + epsilon);
        const NetCounts nc = net_counts(b.skeleton);
        const double lg = std::ceil(log2n(n));
        add(d, "stretch", s.max_stretch);
        add(d, "hops/ceil(log2 n)", hd ? *hd / lg : kInfinity);
        add(d, "max_degree", b.graph.max_degree());
        add(d, "lightness/log2 n", b.graph.total_weight() / mst_w / log2n(n));
        add(d, "max n_i*r_i^2", nc.max_n_r2);
        add(d, "sum n_i*r_i/sqrt n", nc.sum_n_r / std::sqrt(static_cast<double>(n)));
        add(d, "mst/sqrt n", mst_w / std::sqrt(static_cast<double>(n)));
        std::cerr << "d=" << d << " n=" << n << " seed=" << seed << " stretch=" << s.max_stretch
                  << " hd=" << (hd ? *hd : -1) << " deg=" << b.graph.max_degree() << '\n';
      }
    }
  }

  for (int e = 8; e <= 14; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const Metric metric(gen_evenly_spaced_line(n, 1.0));
    const BasicSpanner b = build_basic_spanner(metric, o);
    m["line lightness/log2 n"].add(b.graph.total_weight() / static_cast<double>(n - 1) / log2n(n));
  }

  for (int e : {8, 9, 12}) {
    const std::size_t n = std::size_t{1} << e;
    for (int seed = 1; seed <= ft_seeds; ++seed) {
      const Metric metric(gen_uniform_cube(n, 2, seed));
      const double mst_w = mst(metric).total_weight;
      for (int k : {1, 2, 3, 4, 8}) {
        const FTSpanner ft = build_ft_spanner(metric, o, k);
        const double kk = (k + 1.0) * (k + 1.0);
        m["ft max_degree/(k+1)^2"].add(ft.graph.max_degree() / kk);
        m["ft lightness/((k+1)^2 log2 n)"].add(ft.graph.total_weight() / mst_w / kk / log2n(n));
        if (k > 3 || e > 9) continue;
        FaultTrialOptions fo;
        fo.hops = static_cast<int>(n);
        fo.tolerance = kInfinity;
        fo.seed = seed;
        for (const FaultTrial& t : fault_trials(metric, ft, fo)) {
          m["ft (stretch-1)/epsilon"].add((t.worst_stretch - 1.0) / epsilon);
          m["ft worst hops/ceil(log2 n)"].add(t.worst_hops / std::ceil(log2n(n)));
          m["ft separated"].add(t.separated);
        }
      }
      std::cerr << "ft n=" << n << " seed=" << seed << '\n';
    }
  }

  for (int t = 1; t <= 200; ++t) {
    const std::size_t size = 2 + (t * 7919) % 199;
    const WeightedTree tree = random_weighted_tree(size, t);
    const ShortcutGraph g = shortcut_tree(tree);
    m["tree hops/log2 m"].add(max_ancestor_hops(tree, g) / log2n(size));
    m["tree extra degree"].add(g.max_extra_degree);
  }

  nlohmann::ordered_json j;
  for (const auto& [name, x] : m) j[name] = {{"min", x.lo}, {"max", x.hi}};
  std::cout << j.dump(2) << '\n';
}
