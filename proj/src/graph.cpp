#include "mvis/graph.hpp"

#include "mvis/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace mvis {

namespace {

auto check_order(int n) -> void
{
  if (n < 0)
    throw std::invalid_argument("negative vertex count");
  if (n > kMaxVertices)
    throw CeilingError("graph order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
}

auto bfs_layers(const Graph &g, int source, std::vector<int> &dist) -> void
{
  int n = g.order();
  dist.assign(n, -1);
  dist[source] = 0;
  VertexSet visited(n);
  visited.set(source);
  VertexSet frontier = visited;
  for (int depth = 1; frontier.any(); ++depth) {
    VertexSet next(n);
    frontier.for_each([&](int f) { next |= g.neighbors(f); });
    next = next.minus(visited);
    next.for_each([&](int v) { dist[v] = depth; });
    visited |= next;
    frontier = next;
  }
}

} // namespace

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels))
{
  check_order(n);
  adj_.assign(n, VertexSet(n));
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v)
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    adj_[u].set(v);
    adj_[v].set(u);
  }
  for (const auto &row : adj_)
    m_ += row.count();
  m_ /= 2;
  check_labels();
}

auto Graph::from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels) -> Graph
{
  Graph g;
  g.n_ = static_cast<int>(rows.size());
  check_order(g.n_);
  for (int u = 0; u < g.n_; ++u) {
    if (rows[u].universe() != g.n_)
      throw std::invalid_argument("adjacency row width mismatch");
    if (rows[u].test(u))
      throw std::invalid_argument("loop at vertex " + std::to_string(u));
    rows[u].for_each([&](int v) {
      if (!rows[v].test(u))
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(u) + " and " +
                                    std::to_string(v));
    });
    g.m_ += rows[u].count();
  }
  g.m_ /= 2;
  g.adj_ = std::move(rows);
  g.labels_ = std::move(labels);
  g.check_labels();
  return g;
}

auto Graph::check_labels() const -> void
{
  if (labels_.empty())
    return;
  if (static_cast<int>(labels_.size()) != n_)
    throw std::invalid_argument("label count does not match vertex count");
  std::unordered_set<std::string> seen;
  for (const auto &l : labels_)
    if (!seen.insert(l).second)
      throw std::invalid_argument("duplicate vertex label '" + l + "'");
}

auto Graph::edges() const -> std::vector<Edge>
{
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u + 1); v >= 0; v = adj_[u].next(v + 1))
      out.push_back({u, v});
  return out;
}

auto Graph::label(int v) const -> std::string
{
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

auto Graph::find_label(const std::string &label) const -> std::optional<int>
{
  for (int v = 0; v < n_; ++v)
    if (this->label(v) == label)
      return v;
  return std::nullopt;
}

auto Graph::unlabeled() const -> Graph
{
  Graph g = *this;
  g.labels_.clear();
  return g;
}

auto Graph::remove_vertex(int v) const -> Graph
{
  VertexSet keep = vertices();
  keep.reset(v);
  return induced(keep);
}

auto Graph::induced(const VertexSet &keep) const -> Graph
{
  std::vector<int> old_to_new(n_, -1);
  std::vector<std::string> labels;
  int k = 0;
  keep.for_each([&](int v) {
    old_to_new[v] = k++;
    if (!labels_.empty())
      labels.push_back(labels_[v]);
  });
  std::vector<Edge> edges;
  for (auto [u, v] : this->edges())
    if (old_to_new[u] >= 0 && old_to_new[v] >= 0)
      edges.push_back({old_to_new[u], old_to_new[v]});
  return Graph(k, edges, std::move(labels));
}

DistanceMatrix::DistanceMatrix(const Graph &g) : n_(g.order()), d_(static_cast<std::size_t>(n_) * n_)
{
  std::vector<int> dist;
  for (int s = 0; s < n_; ++s) {
    bfs_layers(g, s, dist);
    std::copy(dist.begin(), dist.end(), d_.begin() + static_cast<std::ptrdiff_t>(index(s, 0)));
  }
}

auto DistanceMatrix::diameter() const -> std::optional<int>
{
  int best = 0;
  for (int d : d_) {
    if (d == kUnreachable)
      return std::nullopt;
    best = std::max(best, d);
  }
  return best;
}

auto EdgeLabeling::vertex_of(Edge e) const -> std::optional<int>
{
  if (e.u > e.v)
    std::swap(e.u, e.v);
  auto it = std::find(edge_of_vertex.begin(), edge_of_vertex.end(), e);
  if (it == edge_of_vertex.end())
    return std::nullopt;
  return static_cast<int>(it - edge_of_vertex.begin());
}

auto is_connected(const Graph &g) -> bool
{
  if (g.order() <= 1)
    return true;
  std::vector<int> dist;
  bfs_layers(g, 0, dist);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

auto diameter(const Graph &g) -> std::optional<int>
{
  return DistanceMatrix(g).diameter();
}

auto girth(const Graph &g) -> std::optional<int>
{
  // Shortest cycle through each BFS root: a non-tree edge xy closes a cycle of
  // length at most d(x) + d(y) + 1, and the minimum over roots is exact.
  int n = g.order();
  int best = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[s] = 0;
    parent[s] = -1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      g.neighbors(x).for_each([&](int y) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          int len = dist[x] + dist[y] + 1;
          if (best < 0 || len < best)
            best = len;
        }
      });
    }
  }
  if (best < 0)
    return std::nullopt;
  return best;
}

auto has_universal_vertex(const Graph &g) -> bool
{
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == g.order() - 1)
      return true;
  return false;
}

auto degree_sequence(const Graph &g) -> std::vector<int>
{
  std::vector<int> out;
  for (int v = 0; v < g.order(); ++v)
    out.push_back(g.degree(v));
  std::sort(out.rbegin(), out.rend());
  return out;
}

auto distance_distribution(const Graph &g) -> std::vector<int>
{
  DistanceMatrix d(g);
  std::vector<int> counts(1, 0);
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      int k = d.reachable(u, v) ? d.hops(u, v) : 0;
      if (k >= static_cast<int>(counts.size()))
        counts.resize(k + 1, 0);
      ++counts[k];
    }
  return counts;
}

} // namespace mvis
