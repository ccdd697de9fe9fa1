#include "mvis/cographs.hpp"

#include "mvis/solver.hpp"

#include <stdexcept>

namespace mvis {

auto is_cograph(const Graph &g) -> bool
{
  int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          int q[4] = {a, b, c, d};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++deg[i];
                ++deg[j];
                ++edges;
              }
          // Three edges with degrees 1,2,2,1 form a path.
          if (edges == 3 && deg[0] && deg[1] && deg[2] && deg[3] && deg[0] < 3 && deg[1] < 3 && deg[2] < 3 &&
              deg[3] < 3)
            return false;
        }
  return true;
}

auto find_enabling_vertex(const Graph &g) -> std::optional<int>
{
  int n = g.order();
  for (int v = 0; v < n; ++v) {
    bool enabling = true;
    for (int u = 0; u < n && enabling; ++u) {
      if (u == v)
        continue;
      int deg_without_v = g.degree(u) - (g.adjacent(u, v) ? 1 : 0);
      if (deg_without_v < n - 2 && !g.adjacent(u, v))
        enabling = false;
    }
    if (enabling)
      return v;
  }
  return std::nullopt;
}

auto big_mu_decompose(const Graph &g) -> std::optional<BigMuDecomposition>
{
  auto v = find_enabling_vertex(g);
  if (!v)
    return std::nullopt;
  BigMuDecomposition dec;
  dec.apex = *v;
  dec.h = g.neighbors(*v);
  dec.clique = g.vertices().minus(dec.h);
  dec.clique.reset(*v);

  dec.clique.for_each([&](int c) {
    VertexSet expected = g.vertices();
    expected.reset(c);
    expected.reset(*v);
    if (!(g.neighbors(c) == expected))
      throw std::logic_error("big_mu_decompose: K_t vertex not adjacent to all of K_t and H");
  });
  return dec;
}

auto cograph_split_regime(const Graph &g) -> bool
{
  return big_mu_decompose(g).has_value() && !has_universal_vertex(g);
}

auto cograph_visibility_numbers(const Graph &g) -> VisibilityNumbers
{
  if (!is_connected(g))
    throw std::invalid_argument("cograph_visibility_numbers: graph is disconnected");
  if (!is_cograph(g))
    throw std::invalid_argument("cograph_visibility_numbers: graph is not a cograph");
  int n = g.order();
  if (cograph_split_regime(g))
    return {n - 2, n - 2, n - 1, n - 1};
  SolveOptions opts;
  opts.variant = Variant::Mutual;
  int value = max_visibility(g, opts).value;
  return {value, value, value, value};
}

auto random_connected_cograph(int n, std::mt19937_64 &rng) -> Graph
{
  if (n < 1)
    throw std::invalid_argument("random_connected_cograph: n must be at least 1");
  if (n == 1)
    return Graph(1, std::span<const Edge>{});

  // Remy's algorithm: grow a uniform binary tree by splicing a new
  // internal node and leaf above a uniformly chosen node.
  std::vector<int> left{-1}, right{-1}, parent{-1};
  int root = 0;
  auto make = [&](int l, int r) {
    left.push_back(l);
    right.push_back(r);
    parent.push_back(-1);
    return static_cast<int>(left.size()) - 1;
  };
  for (int leaves = 1; leaves < n; ++leaves) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(left.size()) - 1);
    int x = pick(rng);
    int leaf = make(-1, -1);
    bool leaf_left = std::bernoulli_distribution(0.5)(rng);
    int inner = leaf_left ? make(leaf, x) : make(x, leaf);
    int up = parent[x];
    parent[inner] = up;
    parent[x] = inner;
    parent[leaf] = inner;
    if (up < 0)
      root = inner;
    else if (left[up] == x)
      left[up] = inner;
    else
      right[up] = inner;
  }

  std::bernoulli_distribution is_join(0.5);
  std::vector<bool> join_label(left.size());
  while (true) {
    for (std::size_t i = 0; i < join_label.size(); ++i)
      join_label[i] = is_join(rng);
    if (join_label[root])
      break;
  }

  std::vector<Edge> edges;
  int next_vertex = 0;
  auto build = [&](auto &&self, int node) -> std::vector<int> {
    if (left[node] < 0)
      return {next_vertex++};
    auto a = self(self, left[node]);
    auto b = self(self, right[node]);
    if (join_label[node])
      for (int x : a)
        for (int y : b)
          edges.push_back({x, y});
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  build(build, root);
  return Graph(n, edges);
}

} // namespace mvis
