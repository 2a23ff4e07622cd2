#include "ftspanner/spanner_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <regex>
#include <sstream>

#include "ftspanner/points_io.hpp"

namespace ftspanner {

namespace {

std::uint64_t pair_key(PointId u, PointId v) { return (std::uint64_t{u} << 32) | v; }

}  // namespace

SpannerGraph SpannerGraph::from_edges(std::size_t n, std::vector<SpannerEdge> edges) {
  for (SpannerEdge& e : edges) {
    if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range");
    if (e.u == e.v) throw InputError("self-loop on point " + std::to_string(e.u));
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      std::swap(e.anchor_u, e.anchor_v);
    }
  }
  std::stable_sort(edges.begin(), edges.end(), [](const SpannerEdge& a, const SpannerEdge& b) {
    return pair_key(a.u, a.v) < pair_key(b.u, b.v);
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw InputError("repeated edge " + std::to_string(edges[i].u) + " " + std::to_string(edges[i].v));
    }
  }
  SpannerGraph g(n);
  g.edges_ = std::move(edges);
  return g;
}

SpannerGraph SpannerGraph::merge(const SpannerGraph& a, const SpannerGraph& b,
                                 const std::function<int(const SpannerEdge&)>& rank) {
  if (a.n_ != b.n_) throw std::invalid_argument("merged graphs differ in point count");
  SpannerGraph g(a.n_);
  g.edges_.reserve(a.edges_.size() + b.edges_.size());
  auto x = a.edges_.begin(), y = b.edges_.begin();
  while (x != a.edges_.end() || y != b.edges_.end()) {
    if (y == b.edges_.end()) {
      g.edges_.push_back(*x++);
    } else if (x == a.edges_.end()) {
      g.edges_.push_back(*y++);
    } else {
      const std::uint64_t kx = pair_key(x->u, x->v), ky = pair_key(y->u, y->v);
      if (kx < ky) {
        g.edges_.push_back(*x++);
      } else if (ky < kx) {
        g.edges_.push_back(*y++);
      } else {
        g.edges_.push_back(rank(*y) < rank(*x) ? *y : *x);
        ++x;
        ++y;
      }
    }
  }
  return g;
}

const SpannerEdge* SpannerGraph::find(PointId a, PointId b) const {
  if (a > b) std::swap(a, b);
  const std::uint64_t key = pair_key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key,
                             [](const SpannerEdge& e, std::uint64_t k) { return pair_key(e.u, e.v) < k; });
  if (it == edges_.end() || it->u != a || it->v != b) return nullptr;
  return &*it;
}

double SpannerGraph::total_weight() const {
  double s = 0.0;
  for (const SpannerEdge& e : edges_) s += e.weight;
  return s;
}

std::vector<std::uint32_t> SpannerGraph::degrees() const {
  std::vector<std::uint32_t> deg(n_, 0);
  for (const SpannerEdge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

std::uint32_t SpannerGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

Adjacency SpannerGraph::adjacency(const std::vector<char>* dead) const {
  auto alive = [&](const SpannerEdge& e) { return !dead || (!(*dead)[e.u] && !(*dead)[e.v]); };
  Adjacency adj;
  adj.offset.assign(n_ + 1, 0);
  for (const SpannerEdge& e : edges_) {
    if (!alive(e)) continue;
    ++adj.offset[e.u + 1];
    ++adj.offset[e.v + 1];
  }
  for (std::size_t i = 0; i < n_; ++i) adj.offset[i + 1] += adj.offset[i];
  adj.target.resize(adj.offset[n_]);
  adj.weight.resize(adj.offset[n_]);
  std::vector<std::uint32_t> fill(adj.offset.begin(), adj.offset.end() - 1);
  for (const SpannerEdge& e : edges_) {
    if (!alive(e)) continue;
    adj.target[fill[e.u]] = e.v;
    adj.weight[fill[e.u]++] = e.weight;
    adj.target[fill[e.v]] = e.u;
    adj.weight[fill[e.v]++] = e.weight;
  }
  return adj;
}

bool SpannerGraph::Builder::add(PointId a, PointId b, double weight, VertexId anchor_a, VertexId anchor_b,
                                int rank) {
  if (a == b) return false;
  if (a > b) {
    std::swap(a, b);
    std::swap(anchor_a, anchor_b);
  }
  cand_.push_back({pair_key(a, b), rank, static_cast<std::uint32_t>(cand_.size()), anchor_a, anchor_b, weight});
  return true;
}

SpannerGraph SpannerGraph::Builder::finish() && {
  // Bucket by the smaller endpoint, then sort each short bucket.
  std::vector<std::size_t> start(n_ + 1, 0);
  for (const Candidate& c : cand_) ++start[(c.key >> 32) + 1];
  for (std::size_t u = 0; u < n_; ++u) start[u + 1] += start[u];
  std::vector<Candidate> sorted(cand_.size());
  {
    std::vector<std::size_t> next(start.begin(), start.end() - 1);
    for (const Candidate& c : cand_) sorted[next[c.key >> 32]++] = c;
  }
  std::vector<Candidate>().swap(cand_);
  for (std::size_t u = 0; u < n_; ++u) {
    std::sort(sorted.begin() + start[u], sorted.begin() + start[u + 1], [](const Candidate& x, const Candidate& y) {
      if (x.key != y.key) return x.key < y.key;
      if (x.rank != y.rank) return x.rank < y.rank;
      return x.seq < y.seq;
    });
  }
  SpannerGraph g(n_);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i > 0 && sorted[i].key == sorted[i - 1].key) continue;
    const Candidate& c = sorted[i];
    g.edges_.push_back({static_cast<PointId>(c.key >> 32), static_cast<PointId>(c.key & 0xffffffffu), c.weight,
                        c.anchor_u, c.anchor_v});
  }
  return g;
}

void write_spanner(std::ostream& out, const SpannerGraph& graph, double epsilon, int k) {
  out << "# n=" << graph.num_points() << " eps=" << format_double(epsilon) << " k=" << k << '\n';
  for (const SpannerEdge& e : graph.edges()) {
    out << e.u << ' ' << e.v << ' ' << format_double(e.weight) << ' ' << e.anchor_u << ' ' << e.anchor_v << '\n';
  }
}

void save_spanner(const std::filesystem::path& path, const SpannerGraph& graph, double epsilon, int k) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  write_spanner(out, graph, epsilon, k);
  if (!out) throw InputError("failed writing " + path.string());
}

namespace {

template <class T>
bool parse_field(const char*& p, const char* end, T& value) {
  const auto res = std::from_chars(p, end, value);
  if (res.ec != std::errc() || res.ptr == p) return false;
  p = res.ptr;
  return true;
}

}  // namespace

SpannerFile read_spanner(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("missing header", 1);
  static const std::regex header(R"(# n=([0-9]+) eps=(\S+) k=(-?[0-9]+))");
  std::smatch m;
  if (!std::regex_match(line, m, header)) throw InputError("malformed header", 1);
  SpannerFile file;
  const std::size_t n = std::stoull(m[1].str());
  const std::string eps = m[2].str();
  const char* ep = eps.data();
  if (!parse_field(ep, eps.data() + eps.size(), file.epsilon) || ep != eps.data() + eps.size()) {
    throw InputError("malformed epsilon", 1);
  }
  file.k = std::stoi(m[3].str());

  std::vector<SpannerEdge> edges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const char* p = line.data();
    const char* end = p + line.size();
    SpannerEdge e;
    auto space = [&] {
      if (p == end || *p != ' ') return false;
      ++p;
      return true;
    };
    const bool ok = parse_field(p, end, e.u) && space() && parse_field(p, end, e.v) && space() &&
                    parse_field(p, end, e.weight) && space() && parse_field(p, end, e.anchor_u) && space() &&
                    parse_field(p, end, e.anchor_v) && p == end;
    if (!ok) throw InputError("malformed edge line", line_no);
    if (e.u >= n || e.v >= n) throw InputError("edge endpoint out of range", line_no);
    if (!std::isfinite(e.weight) || e.weight < 0.0) throw InputError("invalid edge weight", line_no);
    edges.push_back(e);
  }
  file.graph = SpannerGraph::from_edges(n, std::move(edges));
  return file;
}

SpannerFile load_spanner(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return read_spanner(in);
}

}  // namespace ftspanner
