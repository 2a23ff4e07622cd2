// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Exit status is 0 only when all criteria pass.

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ftspanner/constants.hpp"
#include "ftspanner/experiments.hpp"
#include "ftspanner/fault_tolerant.hpp"
#include "ftspanner/points_io.hpp"
#include "ftspanner/tree_shortcut.hpp"
#include "ftspanner/verify.hpp"

using namespace ftspanner;

namespace {

// Targets fixed by the criteria themselves. Suite thresholds live next to
// the suites in experiments.hpp.
constexpr double kEpsilon = 0.5;
constexpr double kStretchTarget = 1.0 + kEpsilon;
constexpr double kHopConstantDrift = 1.0;
constexpr int kTreeTrials = 200;
constexpr std::size_t kTreeMaxSize = 200;
constexpr std::uint64_t kTreeSeedBase = 1000;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void absorb(const SuiteResult& r) {
    for (const auto& [name, ok] : r.checks) check(ok, name);
  }
};

struct Criterion {
  int id;
  std::string name;
  double seconds;
  std::function<void(Outcome&)> run;
};

std::string num(double v) { return std::isfinite(v) ? format_double(v) : "inf"; }
double log2n(std::size_t n) { return std::log2(static_cast<double>(n)); }

BuildOptions options() {
  BuildOptions o;
  o.epsilon = kEpsilon;
  return o;
}

Metric plane(std::size_t n, std::uint64_t seed) { return Metric(gen_uniform_cube(n, 2, seed)); }

void stretch(Outcome& out) {
  const Metric m = plane(512, 1);
  const BasicSpanner b = build_basic_spanner(m, options());
  const StretchResult s = exact_stretch(m, b.graph);
  out.check(s.pairs == 512u * 511 / 2, "all " + std::to_string(s.pairs) + " pairs checked");
  out.check(s.max_stretch <= kStretchTarget, "max stretch " + num(s.max_stretch) + " <= 1.5");
}

void hop_diameter(Outcome& out) {
  const Constants& c = active_constants();
  const Metric m = plane(512, 1);
  const BasicSpanner b = build_basic_spanner(m, options());
  const int h = hop_budget(c.c_lambda, 512);
  const StretchResult s = hop_bounded_stretch(m, b.graph, h);
  out.check(within(s.max_stretch, kStretchTarget),
            "h=" + std::to_string(h) + " hop-bounded stretch " + num(s.max_stretch) + " <= 1.5");
  auto measured = [&](std::size_t n) {
    const Metric mm = plane(n, 1);
    const auto hd = hop_diameter_at_stretch(mm, build_basic_spanner(mm, options()).graph, kStretchTarget);
    return hd ? *hd / std::ceil(log2n(n)) : kInfinity;
  };
  const double c9 = measured(512), c13 = measured(8192);
  out.check(c9 <= c.c_lambda, "measured C at n=2^9 " + num(c9) + " <= frozen " + num(c.c_lambda));
  out.check(c13 <= c9 + kHopConstantDrift, "measured C at n=2^13 " + num(c13) + " <= C at n=2^9 + 1");
}

void degree(Outcome& out) {
  const Constants& c = active_constants();
  std::vector<std::uint32_t> deg;
  for (std::size_t n : {256u, 1024u, 4096u, 8192u}) {
    deg.push_back(build_basic_spanner(plane(n, 1), options()).graph.max_degree());
    out.check(deg.back() <= static_cast<std::uint32_t>(c.max_degree),
              "n=" + std::to_string(n) + " max degree " + std::to_string(deg.back()) + " <= " +
                  std::to_string(c.max_degree));
  }
  out.check(deg.back() <= deg.front() + kDegreeSlack,
            "maxdeg(2^13)=" + std::to_string(deg.back()) + " <= maxdeg(2^8)+2=" + num(deg.front() + kDegreeSlack));
}

void lightness(Outcome& out) {
  const Constants& c = active_constants();
  for (int e = 8; e <= 13; ++e) {
    const std::size_t n = std::size_t{1} << e;
    const Metric m = plane(n, 1);
    const double l = build_basic_spanner(m, options()).graph.total_weight() / mst(m).total_weight;
    out.check(l / e <= c.c_l, "plane n=2^" + std::to_string(e) + " lightness/log2 n " + num(l / e) + " <= " + num(c.c_l));
  }
  ExperimentSpec spec = default_spec("line-lightness");
  spec.epsilon = kEpsilon;
  out.absorb(run_suite(spec, c));
}

void random_lightness(Outcome& out) {
  ExperimentSpec spec = default_spec("random-lightness");
  spec.epsilon = kEpsilon;
  out.absorb(run_suite(spec, active_constants()));
}

void ft_scaling(Outcome& out) {
  ExperimentSpec spec = default_spec("degree-scaling");
  spec.sizes = {4096};
  spec.ks = {0, 1, 2, 4, 8};
  spec.epsilon = kEpsilon;
  out.absorb(run_suite(spec, active_constants()));
}

void fault_tolerance(Outcome& out) {
  ExperimentSpec spec = default_spec("ft-trials");
  spec.epsilon = kEpsilon;
  out.absorb(run_suite(spec, active_constants()));
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    ExperimentSpec small = default_spec("ft-trials");
    small.sizes = {12};
    small.ks = {1, 2};
    small.seeds = {seed};
    small.epsilon = kEpsilon;
    const SuiteResult r = run_suite(small, active_constants());
    for (const auto& [name, ok] : r.checks) out.check(ok, "n=12 seed " + std::to_string(seed) + " exhaustive: " + name);
  }
}

void tree_shortcut(Outcome& out) {
  const Constants& c = active_constants();
  int exact_fail = 0, degree_fail = 0, hop_fail = 0;
  double worst_ratio = 0.0;
  for (int t = 1; t <= kTreeTrials; ++t) {
    const std::uint64_t seed = kTreeSeedBase + t;
    const std::size_t m = 2 + seed * 7919 % (kTreeMaxSize - 1);
    const WeightedTree tree = random_weighted_tree(m, seed);
    const ShortcutGraph g = shortcut_tree(tree);
    // Brute force: tree distances by walking up, graph distances by
    // Floyd-Warshall over tree plus shortcuts.
    std::vector<double> depth(m, 0.0);
    for (TreeNode v : tree.order()) {
      if (v != tree.root()) depth[v] = depth[tree.parent(v)] + tree.parent_weight(v);
    }
    std::vector<double> d(m * m, kInfinity);
    for (TreeNode v = 0; v < m; ++v) {
      d[v * m + v] = 0.0;
      if (v != tree.root()) d[v * m + tree.parent(v)] = d[tree.parent(v) * m + v] = tree.parent_weight(v);
    }
    for (const ShortcutEdge& e : g.extra) {
      d[e.x * m + e.y] = std::min(d[e.x * m + e.y], e.weight);
      d[e.y * m + e.x] = d[e.x * m + e.y];
    }
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) d[i * m + j] = std::min(d[i * m + j], d[i * m + k] + d[k * m + j]);
      }
    }
    bool exact = true;
    for (TreeNode a = 0; a < m && exact; ++a) {
      std::vector<char> anc(m, 0);
      for (TreeNode x = a; x != kNoNode; x = tree.parent(x)) anc[x] = 1;
      for (TreeNode b = 0; b < m; ++b) {
        TreeNode lca = b;
        while (!anc[lca]) lca = tree.parent(lca);
        const double dt = depth[a] + depth[b] - 2 * depth[lca];
        if (std::abs(d[a * m + b] - dt) > 1e-12 * (1 + dt)) {
          exact = false;
          break;
        }
      }
    }
    exact_fail += !exact;
    degree_fail += g.max_extra_degree > 3;
    const double ratio = m > 2 ? max_ancestor_hops(tree, g) / log2n(m) : 0.0;
    worst_ratio = std::max(worst_ratio, ratio);
    hop_fail += ratio > c.c_hop;
  }
  out.check(exact_fail == 0, std::to_string(exact_fail) + " trees with a distance error");
  out.check(degree_fail == 0, std::to_string(degree_fail) + " trees with extra degree > 3");
  out.check(hop_fail == 0, "worst ancestor hops / log2 m " + num(worst_ratio) + " <= " + num(c.c_hop));
}

void counting(Outcome& out) {
  for (std::size_t n : {256u, 512u, 1024u}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Metric m = plane(n, seed);
      BasicSpanner b;
      const FTSpanner ft0 = build_ft_spanner(m, options(), 0, &b);
      const TreeSkeleton& t = b.skeleton;
      const std::string tag = "n=" + std::to_string(n) + " seed " + std::to_string(seed);
      std::vector<int> reps(n, 0);
      for (const NetVertex& v : t.vertices()) ++reps[v.representative];
      out.check(*std::max_element(reps.begin(), reps.end()) <= 2, tag + ": each point represents <= 2 vertices");
      bool same = ft0.graph.num_edges() == b.graph.num_edges();
      for (std::size_t i = 0; same && i < b.graph.num_edges(); ++i) {
        same = ft0.graph.edges()[i].u == b.graph.edges()[i].u && ft0.graph.edges()[i].v == b.graph.edges()[i].v;
      }
      out.check(same, tag + ": k=0 gives E(H*_FT) = E(H*)");
      for (int k : {1, 2, 3, 4}) {
        const RepSets rs = rep_sets(t, k);
        bool big_enough = true;
        std::vector<std::size_t> member(n, 0);
        for (VertexId v = 0; v < t.size(); ++v) {
          if (rs.d_star[v].size() == 2u * k + 1 && rs.r_star[v].size() < static_cast<std::size_t>(k) + 1) big_enough = false;
          for (PointId p : rs.r_star[v]) ++member[p];
        }
        const std::size_t most = *std::max_element(member.begin(), member.end());
        out.check(big_enough && most <= 4u * k + 2, tag + " k=" + std::to_string(k) + ": |R*| >= k+1 on full samples, " +
                                                       "max membership " + std::to_string(most) + " <= 4k+2");
      }
    }
  }
}

void net_counting(Outcome& out) {
  ExperimentSpec spec = default_spec("net-counts");
  out.absorb(run_suite(spec, active_constants()));
}

void timing(Outcome& out) {
  ExperimentSpec ladder = default_spec("timing");
  ladder.repetitions = 5;
  out.absorb(run_suite(ladder, active_constants()));
  ExperimentSpec ks = default_spec("timing");
  ks.sizes = {4096};
  ks.ks = {1, 8};
  ks.repetitions = 5;
  out.absorb(run_suite(ks, active_constants()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  bool verbose = false;
  app.add_option("--only", only, "Run just these criteria")->delimiter(',');
  app.add_flag("-v,--verbose", verbose, "Print every sub-check");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "stretch of H* <= 1.5 on all pairs", 30, stretch},
      {2, "hop diameter within C*ceil(log2 n) hops", 120, hop_diameter},
      {3, "max degree of H* constant in n", 120, degree},
      {4, "lightness O(log n) and growing on the line", 120, lightness},
      {5, "constant lightness on random points", 180, random_lightness},
      {6, "fault-tolerant degree and lightness scaling", 180, ft_scaling},
      {7, "fault trials", 300, fault_tolerance},
      {8, "tree shortcut exactness, degree, hops", 60, tree_shortcut},
      {9, "representative counting invariants", 30, counting},
      {10, "net counting", 120, net_counting},
      {11, "build time trend", 600, timing},
  };

  std::cout << "constants version " << active_constants().version << '\n';
  bool all = true;
  for (const Criterion& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    c.run(out);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.check(secs < c.seconds, "finished in " + num(std::round(secs * 10) / 10) + " s < " + num(c.seconds) + " s");
    all = all && out.pass;
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << '\n';
    for (const std::string& note : out.notes) {
      if (verbose || note.rfind("FAIL", 0) == 0) std::cout << "    " << note << '\n';
    }
    std::cout.flush();
  }
  return all ? 0 : 1;
}
