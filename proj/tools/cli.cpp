#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "ftspanner/constants.hpp"
#include "ftspanner/experiments.hpp"
#include "ftspanner/fault_tolerant.hpp"
#include "ftspanner/points_io.hpp"
#include "ftspanner/verify.hpp"

namespace ftspanner::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GenArgs {
  std::size_t n = 0;
  int dim = 2;
  std::string dist = "uniform-cube";
  double eta = 1.0;
  std::uint64_t seed = 1;
  std::string in;
  std::string out;
};

struct BuildArgs {
  std::string points;
  double epsilon = 0.5;
  int k = 0;
  double gamma = 0.0;
  std::string delegate = "on";
  std::string out;
  std::string report;
};

struct VerifyArgs {
  std::string points;
  std::string spanner;
  std::string mode = "stretch";
  int k = -1;
  int trials = 50;
  double hops_constant = 0.0;
  double tolerance = 0.0;
  std::uint64_t seed = 1;
  std::string report;
};

struct ExperimentArgs {
  std::string suite;
  std::vector<std::size_t> sizes;
  std::vector<int> ks;
  std::vector<std::uint64_t> seeds;
  int dim = 2;
  double epsilon = 0.5;
  int repetitions = 5;
  std::string out_dir = ".";
};

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw InputError("cannot open " + path + " for writing");
  f << text;
}

int cmd_gen(const GenArgs& a, std::ostream& out) {
  PointSet points;
  if (a.dist == "uniform-cube") {
    if (a.n < 2) throw UsageError("--n must be at least 2");
    points = gen_uniform_cube(a.n, a.dim, a.seed);
  } else if (a.dist == "line") {
    if (a.n < 2) throw UsageError("--n must be at least 2");
    if (!(a.eta > 0.0)) throw UsageError("--eta must be positive");
    points = gen_evenly_spaced_line(a.n, a.eta);
  } else {
    if (a.in.empty()) throw UsageError("--dist file needs --in");
    points = load_points(a.in);
  }
  if (a.out.empty() || a.out == "-") {
    write_points(out, points);
  } else {
    save_points(a.out, points);
  }
  return kOk;
}

int cmd_build(const BuildArgs& a, std::ostream& out) {
  if (!(a.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  if (a.gamma != 0.0 && a.gamma < 4.0) throw UsageError("--gamma must be at least 4");
  const Metric metric(load_points(a.points));
  try {
    check_fault_budget(a.k, metric.size());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const Constants& c = active_constants();
  BuildOptions o;
  o.epsilon = a.epsilon;
  o.gamma = a.gamma;
  o.delegate = a.delegate == "on";
  const auto t0 = std::chrono::steady_clock::now();
  BasicSpanner basic;
  const FTSpanner ft = build_ft_spanner(metric, o, a.k, &basic);
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  const SpannerGraph& g = a.k == 0 ? basic.graph : ft.graph;
  if (a.out.empty() || a.out == "-") {
    write_spanner(out, g, a.epsilon, a.k);
  } else {
    save_spanner(a.out, g, a.epsilon, a.k);
  }
  if (!a.report.empty()) {
    VerificationReport r;
    r.mode = "build";
    r.n = metric.size();
    r.dim = metric.points()->dim();
    r.epsilon = a.epsilon;
    r.k = a.k;
    r.gamma = basic.tree_like.gamma;
    r.constants_version = c.version;
    r.edge_count = g.num_edges();
    const DegreeLightness dl = audit_degree_lightness(g, metric);
    r.max_degree = dl.max_degree;
    r.lightness = dl.lightness;
    r.build_ms = ms;
    write_text(a.report, report_to_json(r), out);
  }
  return kOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const Metric metric(load_points(a.points));
  const SpannerFile file = load_spanner(a.spanner);
  if (file.graph.num_points() != metric.size()) {
    throw InputError("spanner has n=" + std::to_string(file.graph.num_points()) + " but points file has n=" +
                     std::to_string(metric.size()));
  }
  const int k = a.k >= 0 ? a.k : file.k;
  try {
    check_fault_budget(k, metric.size());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  const Constants& c = active_constants();
  const SpannerGraph& g = file.graph;
  const std::size_t n = metric.size();
  const double lg = std::log2(static_cast<double>(n));
  const double c_lambda = a.hops_constant > 0.0 ? a.hops_constant : c.c_lambda;

  VerificationReport r;
  r.mode = a.mode;
  r.n = n;
  r.dim = metric.points()->dim();
  r.epsilon = file.epsilon;
  r.k = k;
  r.seed = a.seed;
  r.constants_version = c.version;
  r.edge_count = g.num_edges();
  r.weight_mismatches = weight_mismatches(metric, g).size();
  r.checks.emplace_back("weights match metric", r.weight_mismatches == 0);

  PairOptions po;
  po.seed = a.seed;
  if (a.mode == "stretch") {
    const double bound = a.tolerance > 0.0 ? a.tolerance : 1.0 + file.epsilon;
    const StretchResult s = exact_stretch(metric, g, po);
    r.max_stretch = s.max_stretch;
    r.checks.emplace_back("stretch <= " + format_double(bound), within(s.max_stretch, bound));
  } else if (a.mode == "hops") {
    const double bound = a.tolerance > 0.0 ? a.tolerance : 1.0 + file.epsilon;
    const int h = hop_budget(c_lambda, n);
    r.hop_budget = h;
    const StretchResult s = hop_bounded_stretch(metric, g, h, po);
    r.max_stretch = s.max_stretch;
    const auto hd = hop_diameter_at_stretch(metric, g, bound, po);
    if (hd) r.hop_diameter_at_stretch = *hd;
    r.checks.emplace_back("hop-bounded stretch <= " + format_double(bound), within(s.max_stretch, bound));
  } else if (a.mode == "degree") {
    r.max_degree = g.max_degree();
    const double cap = k == 0 ? c.max_degree : c.c_k * (k + 1.0) * (k + 1.0);
    r.checks.emplace_back("max degree <= " + format_double(cap), *r.max_degree <= cap);
  } else if (a.mode == "lightness") {
    const DegreeLightness dl = audit_degree_lightness(g, metric);
    r.lightness = dl.lightness;
    r.max_degree = dl.max_degree;
    const double cap = k == 0 ? c.c_l * lg : c.c_k_light * (k + 1.0) * (k + 1.0) * lg;
    r.checks.emplace_back("lightness <= " + format_double(cap), dl.lightness <= cap);
  } else if (a.mode == "ft") {
    const TreeSkeleton tree = assign_representatives(build_net_tree(metric), metric);
    FTSpanner ft;
    ft.graph = g;
    ft.k = k;
    ft.reps = rep_sets(tree, k);
    FaultTrialOptions fo;
    fo.random_trials = a.trials;
    fo.adversarial_trials = std::max(1, a.trials / 5);
    fo.hops = hop_budget(c_lambda, n);
    fo.tolerance = a.tolerance > 0.0 ? a.tolerance : 1.0 + c.c_ft * file.epsilon;
    fo.seed = a.seed;
    r.hop_budget = fo.hops;
    r.fault_trials = fault_trials(metric, ft, fo);
    if (n <= 12 && k <= 2) {
      auto all = exhaustive_fault_trials(metric, g, k, fo);
      r.fault_trials.insert(r.fault_trials.end(), all.begin(), all.end());
    }
    bool separated = false, stretch = true;
    for (const FaultTrial& t : r.fault_trials) {
      separated = separated || t.separated > 0;
      stretch = stretch && within(t.worst_stretch, fo.tolerance);
    }
    r.checks.emplace_back("no surviving pair separated", !separated);
    r.checks.emplace_back("fault trials within " + format_double(fo.tolerance), stretch);
  } else if (a.mode == "net-counts") {
    const TreeSkeleton tree = build_net_tree(metric);
    const NetCounts nc = net_counts(tree);
    r.net_counts = nc;
    if (r.dim == 2) r.checks.emplace_back("n_i*r_i^2 <= c_net", nc.max_n_r2 <= c.c_net);
    r.checks.emplace_back("sum n_i*r_i <= c_sum*sqrt(n)", nc.sum_n_r <= c.c_sum * std::sqrt(static_cast<double>(n)));
    r.checks.emplace_back("n_i non-increasing", nc.non_increasing);
  }
  write_text(a.report, report_to_json(r), out);
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_experiment(const ExperimentArgs& a, std::ostream& out) {
  ExperimentSpec spec;
  try {
    spec = default_spec(a.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!a.sizes.empty()) spec.sizes = a.sizes;
  if (!a.ks.empty()) spec.ks = a.ks;
  if (!a.seeds.empty()) spec.seeds = a.seeds;
  spec.dim = a.dim;
  spec.epsilon = a.epsilon;
  spec.repetitions = a.repetitions;
  SuiteResult res;
  try {
    res = run_suite(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(e.what());
  }
  std::filesystem::create_directories(a.out_dir);
  const auto csv = std::filesystem::path(a.out_dir) / (a.suite + ".csv");
  res.table.save_csv(csv);
  out << "wrote " << csv.string() << '\n';
  for (const auto& [name, ok] : res.checks) out << (ok ? "PASS " : "FAIL ") << name << '\n';
  return res.passed() ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fault-tolerant spanners for doubling metrics"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Generate a points file");
  g->add_option("--n", gen.n, "Number of points");
  g->add_option("--dim", gen.dim, "Dimension")->check(CLI::PositiveNumber);
  g->add_option("--dist", gen.dist, "Distribution")->check(CLI::IsMember({"uniform-cube", "line", "file"}));
  g->add_option("--eta", gen.eta, "Spacing for --dist line");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--in", gen.in, "Source file for --dist file");
  g->add_option("--out", gen.out, "Output path (default stdout)");

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Build a spanner");
  b->add_option("--points", build.points, "Points file")->required();
  b->add_option("--epsilon", build.epsilon, "Target stretch is 1 + epsilon");
  b->add_option("--k", build.k, "Number of tolerated point faults");
  b->add_option("--gamma", build.gamma, "Lateral edge reach (default from epsilon)");
  b->add_option("--delegate", build.delegate, "Spread lateral endpoints")->check(CLI::IsMember({"on", "off"}));
  b->add_option("--out", build.out, "Spanner file (default stdout)");
  b->add_option("--report", build.report, "Write a JSON build report");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Check a spanner against its points");
  v->add_option("--points", verify.points, "Points file")->required();
  v->add_option("--spanner", verify.spanner, "Spanner file")->required();
  v->add_option("--mode", verify.mode, "What to check")
      ->check(CLI::IsMember({"stretch", "hops", "degree", "lightness", "ft", "net-counts"}));
  v->add_option("--k", verify.k, "Fault budget (default from the spanner file)");
  v->add_option("--trials", verify.trials, "Random fault sets for --mode ft")->check(CLI::PositiveNumber);
  v->add_option("--hops-constant", verify.hops_constant, "Hop budget is this times ceil(log2 n)");
  v->add_option("--tolerance", verify.tolerance, "Stretch bound (default from epsilon)");
  v->add_option("--seed", verify.seed, "Seed for sampled pairs and fault sets");
  v->add_option("--report", verify.report, "JSON report path (default stdout)");

  ExperimentArgs exp;
  auto* e = app.add_subcommand("experiment", "Run an experiment suite");
  e->add_option("--suite", exp.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  e->add_option("--sizes", exp.sizes, "Comma-separated point counts")->delimiter(',');
  e->add_option("--k", exp.ks, "Comma-separated fault budgets")->delimiter(',');
  e->add_option("--seeds", exp.seeds, "Comma-separated seeds")->delimiter(',');
  e->add_option("--dim", exp.dim, "Dimension")->check(CLI::PositiveNumber);
  e->add_option("--epsilon", exp.epsilon, "Target stretch is 1 + epsilon");
  e->add_option("--reps", exp.repetitions, "Timing repetitions")->check(CLI::PositiveNumber);
  e->add_option("--out-dir", exp.out_dir, "Directory for CSV output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& pe) {
    const int code = app.exit(pe, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*g) return cmd_gen(gen, out);
    if (*b) return cmd_build(build, out);
    if (*v) return cmd_verify(verify, out);
    if (*e) return cmd_experiment(exp, out);
  } catch (const UsageError& ue) {
    err << "usage error: " << ue.what() << '\n';
    return kUsage;
  } catch (const InputError& ie) {
    err << "input error: " << ie.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ftspanner::cli
