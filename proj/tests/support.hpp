#pragma once

// Brute-force reference implementations used as test oracles. They share no
// code with the library: distances come from Floyd-Warshall over a plain
// adjacency matrix and visibility from explicit geodesic enumeration.

#include "mvis/graph.hpp"
#include "mvis/visibility.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

namespace ref {

constexpr int kInf = 1 << 20;

struct Matrix
{
  int n = 0;
  std::vector<std::vector<bool>> adj;
  std::vector<std::vector<int>> dist;
};

inline auto matrix_of(const mvis::Graph &g) -> Matrix
{
  Matrix m;
  m.n = g.order();
  m.adj.assign(m.n, std::vector<bool>(m.n, false));
  m.dist.assign(m.n, std::vector<int>(m.n, kInf));
  for (auto e : g.edges())
    m.adj[e.u][e.v] = m.adj[e.v][e.u] = true;
  for (int u = 0; u < m.n; ++u)
    for (int v = 0; v < m.n; ++v)
      m.dist[u][v] = u == v ? 0 : m.adj[u][v] ? 1 : kInf;
  for (int w = 0; w < m.n; ++w)
    for (int u = 0; u < m.n; ++u)
      for (int v = 0; v < m.n; ++v)
        m.dist[u][v] = std::min(m.dist[u][v], m.dist[u][w] + m.dist[w][v]);
  return m;
}

/// Is there a u,v geodesic whose interior avoids `in`?
inline auto visible(const Matrix &m, const std::vector<bool> &in, int u, int v) -> bool
{
  if (m.dist[u][v] >= kInf)
    return false;
  auto walk = [&](auto &&self, int at) -> bool {
    if (at == v)
      return true;
    for (int w = 0; w < m.n; ++w) {
      if (!m.adj[at][w] || m.dist[w][v] != m.dist[at][v] - 1)
        continue;
      if (w != v && in[w])
        continue;
      if (self(self, w))
        return true;
    }
    return false;
  };
  return walk(walk, u);
}

inline auto required(mvis::Variant variant, bool u_in, bool v_in) -> bool
{
  using mvis::Variant;
  if (u_in && v_in)
    return true;
  if (u_in != v_in)
    return variant == Variant::Outer || variant == Variant::Total;
  return variant == Variant::Dual || variant == Variant::Total;
}

inline auto valid(const Matrix &m, std::uint64_t mask, mvis::Variant variant) -> bool
{
  std::vector<bool> in(m.n);
  for (int v = 0; v < m.n; ++v)
    in[v] = (mask >> v) & 1U;
  for (int u = 0; u < m.n; ++u)
    for (int v = u + 1; v < m.n; ++v)
      if (required(variant, in[u], in[v]) && !visible(m, in, u, v))
        return false;
  return true;
}

/// Maximum size of a valid set by enumerating all 2^n subsets.
inline auto max_value(const mvis::Graph &g, mvis::Variant variant) -> int
{
  Matrix m = matrix_of(g);
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m.n); ++mask) {
    int size = std::popcount(mask);
    if (size > best && valid(m, mask, variant))
      best = size;
  }
  return best;
}

inline auto to_mask(const mvis::VertexSet &x) -> std::uint64_t
{
  std::uint64_t mask = 0;
  x.for_each([&](int v) { mask |= std::uint64_t{1} << v; });
  return mask;
}

inline auto from_mask(int n, std::uint64_t mask) -> mvis::VertexSet
{
  mvis::VertexSet x(n);
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U)
      x.set(v);
  return x;
}

/// Graph on n vertices whose edges are selected by the bits of `mask` over
/// pairs in colex order (01, 02, 12, 03, 13, 23, ...).
inline auto graph_from_mask(int n, std::uint64_t mask) -> mvis::Graph
{
  std::vector<mvis::Edge> edges;
  int bit = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1U)
        edges.push_back({u, v});
  return mvis::Graph(n, edges);
}

inline auto connected(const Matrix &m) -> bool
{
  for (int v = 0; v < m.n; ++v)
    if (m.dist[0][v] >= kInf)
      return false;
  return true;
}

/// Connected G(n, p) sample, resampled until connected.
inline auto random_connected(int n, double p, std::mt19937_64 &rng) -> mvis::Graph
{
  std::bernoulli_distribution coin(p);
  while (true) {
    std::vector<mvis::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng))
          edges.push_back({u, v});
    mvis::Graph g(n, edges);
    if (connected(matrix_of(g)))
      return g;
  }
}

/// Does g contain h as a subgraph (not necessarily induced)? Tries every injection.
inline auto has_subgraph(const mvis::Graph &g, const mvis::Graph &h, bool induced = false) -> bool
{
  int n = g.order(), k = h.order();
  std::vector<int> image(k, -1);
  std::vector<bool> used(n, false);
  auto place = [&](auto &&self, int i) -> bool {
    if (i == k)
      return true;
    for (int x = 0; x < n; ++x) {
      if (used[x])
        continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        bool want = h.adjacent(i, j), have = g.adjacent(x, image[j]);
        ok = induced ? want == have : (!want || have);
      }
      if (!ok)
        continue;
      used[x] = true;
      image[i] = x;
      if (self(self, i + 1))
        return true;
      used[x] = false;
    }
    return false;
  };
  return place(place, 0);
}

} // namespace ref
