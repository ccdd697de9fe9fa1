#pragma once

#include "mvis/vertex_set.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvis {

struct Edge
{
  int u;
  int v;
  friend auto operator==(const Edge &, const Edge &) -> bool = default;
  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/**
 * Immutable finite simple graph.
 *
 * Adjacency rows are VertexSets; symmetry and loop-freeness are checked on
 * construction. Labels are optional and, when present, unique per vertex.
 */
class Graph
{
public:
  Graph() = default;

  /// Throws std::invalid_argument on loops, out-of-range endpoints or duplicate labels.
  /// Repeated edges are merged.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  /// Throws std::invalid_argument if rows are asymmetric or contain loops.
  static auto from_rows(std::vector<VertexSet> rows, std::vector<std::string> labels = {}) -> Graph;

  auto order() const -> int { return n_; }
  auto size() const -> int { return m_; }

  auto neighbors(int v) const -> const VertexSet & { return adj_[v]; }
  auto adjacent(int u, int v) const -> bool { return adj_[u].test(v); }
  auto degree(int v) const -> int { return adj_[v].count(); }

  auto vertices() const -> VertexSet { return VertexSet::full(n_); }

  /// Edges with u < v in lexicographic order.
  auto edges() const -> std::vector<Edge>;

  auto has_labels() const -> bool { return !labels_.empty(); }
  auto labels() const -> const std::vector<std::string> & { return labels_; }
  /// The vertex label, or its decimal index when the graph is unlabeled.
  auto label(int v) const -> std::string;
  /// Vertex carrying `label` (or the decimal index when unlabeled), if any.
  auto find_label(const std::string &label) const -> std::optional<int>;

  /// The graph with labels dropped.
  auto unlabeled() const -> Graph;

  /// G - v; remaining vertices keep their relative order.
  auto remove_vertex(int v) const -> Graph;

  /// Subgraph induced by `keep`, renumbered in increasing order.
  auto induced(const VertexSet &keep) const -> Graph;

  friend auto operator==(const Graph &a, const Graph &b) -> bool
  {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;

  auto check_labels() const -> void;
};

/// All-pairs hop distances. Unreachable pairs have no distance.
class DistanceMatrix
{
public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(const Graph &g);

  auto order() const -> int { return n_; }

  auto reachable(int u, int v) const -> bool { return d_[index(u, v)] != kUnreachable; }

  /// Hop count; the pair must be reachable.
  auto hops(int u, int v) const -> int { return d_[index(u, v)]; }

  auto operator()(int u, int v) const -> std::optional<int>
  {
    int d = d_[index(u, v)];
    if (d == kUnreachable)
      return std::nullopt;
    return d;
  }

  /// Largest finite distance, or nullopt when some pair is unreachable.
  auto diameter() const -> std::optional<int>;

private:
  static constexpr int kUnreachable = -1;
  int n_ = 0;
  std::vector<int> d_;

  auto index(int u, int v) const -> std::size_t { return static_cast<std::size_t>(u) * n_ + v; }
};

/// Bijection between the vertices of L(G) and the edges of G.
struct EdgeLabeling
{
  std::vector<Edge> edge_of_vertex;

  auto vertex_of(Edge e) const -> std::optional<int>;
};

auto is_connected(const Graph &g) -> bool;
/// nullopt encodes an infinite diameter (disconnected graph).
auto diameter(const Graph &g) -> std::optional<int>;
/// nullopt encodes an infinite girth (forest).
auto girth(const Graph &g) -> std::optional<int>;
auto has_universal_vertex(const Graph &g) -> bool;
auto degree_sequence(const Graph &g) -> std::vector<int>;
/// Counts of unordered pairs by distance; index 0 holds unreachable pairs.
auto distance_distribution(const Graph &g) -> std::vector<int>;

} // namespace mvis
