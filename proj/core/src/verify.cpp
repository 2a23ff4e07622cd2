#include "ftspanner/verify.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <queue>

#include "ftspanner/random.hpp"

namespace ftspanner {

PairPlan plan_pairs(std::size_t n, const PairOptions& options) {
  std::vector<PointId> live;
  for (PointId p = 0; p < n; ++p) {
    if (!options.dead || !(*options.dead)[p]) live.push_back(p);
  }
  PairPlan plan;
  if (live.size() <= options.exhaustive_limit) {
    plan.sources = std::move(live);
    return plan;
  }
  plan.exhaustive = false;
  const std::size_t per_source = live.size() - 1;
  const std::size_t want = std::min(live.size(), (options.min_pairs + per_source - 1) / per_source);
  Rng rng(options.seed);
  // Partial Fisher-Yates.
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j = i + rng.below(live.size() - i);
    std::swap(live[i], live[j]);
  }
  live.resize(want);
  std::sort(live.begin(), live.end());
  plan.sources = std::move(live);
  return plan;
}

namespace {

struct Workspace {
  std::vector<double> dist;
  std::vector<int> hops;
  std::vector<double> prev, cur;
  std::vector<PointId> frontier, next;
  std::vector<char> in_next;
};

// Lightest paths from s, breaking weight ties by fewer hops.
void dijkstra(const Adjacency& adj, PointId s, Workspace& ws) {
  const std::size_t n = adj.offset.size() - 1;
  ws.dist.assign(n, kInfinity);
  ws.hops.assign(n, 0);
  using Item = std::tuple<double, int, PointId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  ws.dist[s] = 0.0;
  pq.emplace(0.0, 0, s);
  while (!pq.empty()) {
    const auto [d, h, u] = pq.top();
    pq.pop();
    if (d != ws.dist[u] || h != ws.hops[u]) continue;
    for (std::uint32_t i = adj.offset[u]; i < adj.offset[u + 1]; ++i) {
      const PointId v = adj.target[i];
      const double nd = d + adj.weight[i];
      if (nd < ws.dist[v] || (nd == ws.dist[v] && h + 1 < ws.hops[v])) {
        ws.dist[v] = nd;
        ws.hops[v] = h + 1;
        pq.emplace(nd, h + 1, v);
      }
    }
  }
}

// Layered relaxation: after layer j, cur[v] is the lightest walk from s
// with at most j edges. `on_change` sees every vertex improved in a layer;
// returning false stops early.
template <class OnLayer>
void bounded_layers(const Adjacency& adj, PointId s, int h, Workspace& ws, OnLayer&& on_layer) {
  const std::size_t n = adj.offset.size() - 1;
  ws.prev.assign(n, kInfinity);
  ws.cur.assign(n, kInfinity);
  ws.in_next.assign(n, 0);
  ws.prev[s] = ws.cur[s] = 0.0;
  ws.frontier.assign(1, s);
  for (int j = 1; j <= h && !ws.frontier.empty(); ++j) {
    ws.next.clear();
    for (PointId u : ws.frontier) {
      const double du = ws.prev[u];
      for (std::uint32_t i = adj.offset[u]; i < adj.offset[u + 1]; ++i) {
        const PointId v = adj.target[i];
        const double nd = du + adj.weight[i];
        if (nd < ws.cur[v]) {
          ws.cur[v] = nd;
          if (!ws.in_next[v]) {
            ws.in_next[v] = 1;
            ws.next.push_back(v);
          }
        }
      }
    }
    for (PointId v : ws.next) {
      ws.prev[v] = ws.cur[v];
      ws.in_next[v] = 0;
    }
    std::swap(ws.frontier, ws.next);
    if (!on_layer(j, ws.frontier)) return;
  }
}

bool is_target(const PairPlan& plan, const std::vector<char>* dead, PointId s, PointId t) {
  if (t == s) return false;
  if (dead && (*dead)[t]) return false;
  return !plan.exhaustive || t > s;
}

void record(StretchResult& r, double ratio, PointId s, PointId t) {
  if (ratio > r.max_stretch || (std::isinf(ratio) && !std::isinf(r.max_stretch))) {
    r.max_stretch = ratio;
    r.worst_u = std::min(s, t);
    r.worst_v = std::max(s, t);
  }
}

StretchResult stretch_impl(const Metric& metric, const SpannerGraph& graph, int h, const PairOptions& options) {
  const std::size_t n = graph.num_points();
  const PairPlan plan = plan_pairs(n, options);
  const Adjacency adj = graph.adjacency(options.dead);
  Workspace ws;
  StretchResult r;
  for (PointId s : plan.sources) {
    dijkstra(adj, s, ws);
    bool need_layers = false;
    for (PointId t = 0; t < n; ++t) {
      if (is_target(plan, options.dead, s, t) && std::isfinite(ws.dist[t]) && ws.hops[t] > h) need_layers = true;
    }
    if (need_layers) bounded_layers(adj, s, h, ws, [](int, const std::vector<PointId>&) { return true; });
    for (PointId t = 0; t < n; ++t) {
      if (!is_target(plan, options.dead, s, t)) continue;
      ++r.pairs;
      if (!std::isfinite(ws.dist[t])) {
        ++r.separated;
        record(r, kInfinity, s, t);
        continue;
      }
      r.max_hops = std::max(r.max_hops, ws.hops[t]);
      const double d = need_layers ? ws.cur[t] : ws.dist[t];
      record(r, d / metric(s, t), s, t);
    }
  }
  return r;
}

}  // namespace

StretchResult exact_stretch(const Metric& metric, const SpannerGraph& graph, const PairOptions& options) {
  return stretch_impl(metric, graph, std::numeric_limits<int>::max(), options);
}

StretchResult hop_bounded_stretch(const Metric& metric, const SpannerGraph& graph, int h,
                                  const PairOptions& options) {
  if (h < 1) throw std::invalid_argument("hop bound must be at least 1");
  return stretch_impl(metric, graph, h, options);
}

std::optional<int> hop_diameter_at_stretch(const Metric& metric, const SpannerGraph& graph, double t,
                                           const PairOptions& options) {
  const std::size_t n = graph.num_points();
  const PairPlan plan = plan_pairs(n, options);
  const Adjacency adj = graph.adjacency(options.dead);
  Workspace ws;
  std::vector<char> pending(n, 0);
  int worst = 0;
  for (PointId s : plan.sources) {
    std::size_t open = 0;
    for (PointId v = 0; v < n; ++v) {
      pending[v] = is_target(plan, options.dead, s, v);
      open += pending[v];
    }
    if (open == 0) continue;
    int reached_at = -1;
    bounded_layers(adj, s, static_cast<int>(n), ws, [&](int j, const std::vector<PointId>& changed) {
      for (PointId v : changed) {
        if (pending[v] && within(ws.cur[v] / metric(s, v), t)) {
          pending[v] = 0;
          --open;
        }
      }
      if (open == 0) {
        reached_at = j;
        return false;
      }
      return true;
    });
    if (reached_at < 0) return std::nullopt;
    worst = std::max(worst, reached_at);
  }
  return worst;
}

int hop_budget(double c_lambda, std::size_t n) {
  const int lg = static_cast<int>(std::ceil(std::log2(static_cast<double>(n))));
  return std::max(1, static_cast<int>(std::ceil(c_lambda * lg)));
}

DegreeLightness audit_degree_lightness(const SpannerGraph& graph, const Metric& metric, double mst_weight) {
  DegreeLightness out;
  out.max_degree = graph.max_degree();
  out.weight = graph.total_weight();
  out.mst_weight = mst_weight > 0.0 ? mst_weight : mst(metric).total_weight;
  out.lightness = out.weight / out.mst_weight;
  return out;
}

std::vector<std::size_t> weight_mismatches(const Metric& metric, const SpannerGraph& graph) {
  std::vector<std::size_t> bad;
  const auto& edges = graph.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].weight != metric(edges[i].u, edges[i].v)) bad.push_back(i);
  }
  return bad;
}

const char* to_string(FaultStrategy s) {
  switch (s) {
    case FaultStrategy::kRandom:
      return "random";
    case FaultStrategy::kTopDegree:
      return "top-degree";
    case FaultStrategy::kRepsetTargeted:
      return "repset-targeted";
    case FaultStrategy::kCluster:
      return "cluster";
    case FaultStrategy::kExhaustive:
      return "exhaustive";
  }
  return "unknown";
}

FaultTrial run_fault_trial(const Metric& metric, const SpannerGraph& graph, std::vector<PointId> faults,
                           FaultStrategy strategy, const FaultTrialOptions& options) {
  std::sort(faults.begin(), faults.end());
  std::vector<char> dead(graph.num_points(), 0);
  for (PointId p : faults) dead[p] = 1;
  PairOptions po;
  po.dead = &dead;
  po.seed = options.seed;
  const StretchResult r = hop_bounded_stretch(metric, graph, options.hops, po);
  FaultTrial trial;
  trial.strategy = strategy;
  trial.faults = std::move(faults);
  trial.worst_stretch = r.max_stretch;
  trial.worst_hops = r.max_hops;
  trial.separated = r.separated;
  trial.passed = r.separated == 0 && within(r.max_stretch, options.tolerance);
  return trial;
}

namespace {

std::vector<PointId> random_subset(Rng& rng, std::vector<PointId> pool, std::size_t k) {
  k = std::min(k, pool.size());
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  return pool;
}

}  // namespace

std::vector<FaultTrial> fault_trials(const Metric& metric, const FTSpanner& ft, const FaultTrialOptions& options) {
  const std::size_t n = ft.graph.num_points();
  const auto k = static_cast<std::size_t>(ft.k);
  Rng rng(options.seed);
  std::vector<PointId> everyone(n);
  for (PointId p = 0; p < n; ++p) everyone[p] = p;

  std::vector<FaultTrial> trials;
  for (int t = 0; t < options.random_trials; ++t) {
    trials.push_back(run_fault_trial(metric, ft.graph, random_subset(rng, everyone, k), FaultStrategy::kRandom,
                                     options));
  }

  std::vector<VertexId> targets;
  for (VertexId v = 0; v < ft.reps.r_star.size(); ++v) {
    if (ft.reps.r_star[v].size() == k + 1) targets.push_back(v);
  }
  if (targets.empty()) {
    for (VertexId v = 0; v < ft.reps.r_star.size(); ++v) {
      if (ft.reps.r_star[v].size() > k) targets.push_back(v);
    }
  }

  for (int t = 0; t < options.adversarial_trials; ++t) {
    std::vector<PointId> faults;
    FaultStrategy strategy;
    if (t == 0) {
      strategy = FaultStrategy::kTopDegree;
      const auto deg = ft.graph.degrees();
      std::vector<PointId> order = everyone;
      std::stable_sort(order.begin(), order.end(), [&](PointId a, PointId b) { return deg[a] > deg[b]; });
      faults.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(std::min(k, n)));
    } else if (t % 2 == 1 && !targets.empty()) {
      strategy = FaultStrategy::kRepsetTargeted;
      const VertexId v = targets[rng.below(targets.size())];
      faults = random_subset(rng, ft.reps.r_star[v], k);
    } else {
      strategy = FaultStrategy::kCluster;
      const PointId c = static_cast<PointId>(rng.below(n));
      std::vector<PointId> order;
      for (PointId p = 0; p < n; ++p) {
        if (p != c) order.push_back(p);
      }
      const std::size_t take = std::min(k, order.size());
      std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take), order.end(),
                        [&](PointId a, PointId b) {
                          const double da = metric(c, a), db = metric(c, b);
                          return da != db ? da < db : a < b;
                        });
      faults.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(take));
    }
    trials.push_back(run_fault_trial(metric, ft.graph, std::move(faults), strategy, options));
  }
  return trials;
}

std::vector<FaultTrial> exhaustive_fault_trials(const Metric& metric, const SpannerGraph& graph, int k,
                                                const FaultTrialOptions& options) {
  const std::size_t n = graph.num_points();
  std::vector<FaultTrial> trials;
  std::vector<PointId> set;
  // Depth-first enumeration of subsets in lexicographic order.
  auto rec = [&](auto&& self, PointId from) -> void {
    trials.push_back(run_fault_trial(metric, graph, set, FaultStrategy::kExhaustive, options));
    if (set.size() == static_cast<std::size_t>(k)) return;
    for (PointId p = from; p < n; ++p) {
      set.push_back(p);
      self(self, p + 1);
      set.pop_back();
    }
  };
  rec(rec, 0);
  return trials;
}

NetCounts net_counts(const TreeSkeleton& tree) {
  NetCounts nc;
  const auto& sizes = tree.net_sizes();
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    NetLevelCount lc;
    lc.level = static_cast<int>(i);
    lc.n_i = sizes[i];
    lc.r_i = tree.radius_at(lc.level);
    lc.n_r2 = static_cast<double>(lc.n_i) * lc.r_i * lc.r_i;
    nc.max_n_r2 = std::max(nc.max_n_r2, lc.n_r2);
    nc.sum_n_r += static_cast<double>(lc.n_i) * lc.r_i;
    if (i > 0 && sizes[i] > sizes[i - 1]) nc.non_increasing = false;
    nc.levels.push_back(lc);
  }
  return nc;
}

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

namespace {

nlohmann::ordered_json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

std::string report_to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["mode"] = r.mode;
  ordered_json params;
  params["n"] = r.n;
  params["dim"] = r.dim;
  params["epsilon"] = r.epsilon;
  params["k"] = r.k;
  params["seed"] = r.seed;
  params["gamma"] = r.gamma;
  params["constants_version"] = r.constants_version;
  j["params"] = params;
  j["edge_count"] = r.edge_count;
  j["max_stretch"] = r.max_stretch ? number_or_null(*r.max_stretch) : ordered_json(nullptr);
  j["hop_budget"] = r.hop_budget ? ordered_json(*r.hop_budget) : ordered_json(nullptr);
  j["hop_diameter_at_stretch"] =
      r.hop_diameter_at_stretch ? ordered_json(*r.hop_diameter_at_stretch) : ordered_json(nullptr);
  j["max_degree"] = r.max_degree ? ordered_json(*r.max_degree) : ordered_json(nullptr);
  j["lightness"] = r.lightness ? number_or_null(*r.lightness) : ordered_json(nullptr);
  j["build_ms"] = r.build_ms ? ordered_json(*r.build_ms) : ordered_json(nullptr);
  j["weight_mismatches"] = r.weight_mismatches;
  ordered_json trials = ordered_json::array();
  for (const FaultTrial& t : r.fault_trials) {
    ordered_json tj;
    tj["strategy"] = to_string(t.strategy);
    tj["faults"] = t.faults;
    tj["worst_stretch"] = number_or_null(t.worst_stretch);
    tj["worst_hops"] = t.worst_hops;
    tj["separated"] = t.separated;
    tj["passed"] = t.passed;
    trials.push_back(tj);
  }
  j["fault_trials"] = trials;
  if (r.net_counts) {
    ordered_json levels = ordered_json::array();
    for (const NetLevelCount& lc : r.net_counts->levels) {
      levels.push_back({{"level", lc.level}, {"n_i", lc.n_i}, {"r_i", lc.r_i}, {"n_r2", lc.n_r2}});
    }
    j["net_counts"] = {{"levels", levels},
                       {"max_n_r2", r.net_counts->max_n_r2},
                       {"sum_n_r", r.net_counts->sum_n_r},
                       {"non_increasing", r.net_counts->non_increasing}};
  } else {
    j["net_counts"] = nullptr;
  }
  ordered_json checks = ordered_json::object();
  for (const auto& [name, ok] : r.checks) checks[name] = ok;
  j["checks"] = checks;
  j["passed"] = r.passed();
  return j.dump(2) + "\n";
}

}  // namespace ftspanner
