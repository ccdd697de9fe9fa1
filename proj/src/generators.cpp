#include "mvis/generators.hpp"

#include <stdexcept>
#include <string>

namespace mvis {

namespace {

auto require(bool ok, const char *what) -> void
{
  if (!ok)
    throw std::invalid_argument(what);
}

auto product_labels(const Graph &g, const Graph &h) -> std::vector<std::string>
{
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(g.order()) * h.order());
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < h.order(); ++b)
      labels.push_back("(" + g.label(a) + "," + h.label(b) + ")");
  return labels;
}

auto shifted_labels(const Graph &g, const Graph &h) -> std::vector<std::string>
{
  if (!g.has_labels() && !h.has_labels())
    return {};
  // Prefixing keeps labels unique when both sides carry the same names.
  std::vector<std::string> labels;
  for (int v = 0; v < g.order(); ++v)
    labels.push_back(g.has_labels() ? "L" + g.label(v) : std::to_string(v));
  for (int v = 0; v < h.order(); ++v)
    labels.push_back(h.has_labels() ? "R" + h.label(v) : std::to_string(g.order() + v));
  return labels;
}

auto with_false_twins(Graph g, const std::vector<int> &base, const std::vector<int> &counts) -> Graph
{
  for (std::size_t t = 0; t < base.size(); ++t) {
    if (counts[t] < 0)
      throw std::invalid_argument("duplication count must be non-negative");
    for (int c = 0; c < counts[t]; ++c)
      g = duplicate_vertex(g, base[t], TwinMode::False);
  }
  return g;
}

} // namespace

auto complete(int n) -> Graph
{
  require(n >= 1, "complete: n must be at least 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back({u, v});
  return Graph(n, edges);
}

auto complete_bipartite(int m, int n) -> Graph
{
  require(m >= 1 && n >= 1, "complete_bipartite: part sizes must be at least 1");
  std::vector<Edge> edges;
  for (int u = 0; u < m; ++u)
    for (int v = 0; v < n; ++v)
      edges.push_back({u, m + v});
  return Graph(m + n, edges);
}

auto cycle(int n) -> Graph
{
  require(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v)
    edges.push_back({v, (v + 1) % n});
  return Graph(n, edges);
}

auto petersen() -> Graph
{
  // Outer 5-cycle 0..4, inner pentagram 5..9, spokes v -- v+5.
  std::vector<Edge> edges;
  for (int v = 0; v < 5; ++v) {
    edges.push_back({v, (v + 1) % 5});
    edges.push_back({5 + v, 5 + (v + 2) % 5});
    edges.push_back({v, v + 5});
  }
  return Graph(10, edges);
}

auto turan_graph(int n, int r) -> Graph
{
  require(r >= 1, "turan_graph: r must be at least 1");
  require(n >= 0, "turan_graph: n must be non-negative");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (u % r != v % r)
        edges.push_back({u, v});
  return Graph(n, edges);
}

auto cartesian_product(const Graph &g, const Graph &h) -> Graph
{
  require(g.order() > 0 && h.order() > 0, "cartesian_product: empty factor");
  int nh = h.order();
  std::vector<Edge> edges;
  for (int a = 0; a < g.order(); ++a)
    for (auto [b, b2] : h.edges())
      edges.push_back({a * nh + b, a * nh + b2});
  for (auto [a, a2] : g.edges())
    for (int b = 0; b < nh; ++b)
      edges.push_back({a * nh + b, a2 * nh + b});
  return Graph(g.order() * nh, edges, product_labels(g, h));
}

auto direct_product(const Graph &g, const Graph &h) -> Graph
{
  require(g.order() > 0 && h.order() > 0, "direct_product: empty factor");
  int nh = h.order();
  std::vector<Edge> edges;
  for (auto [a, a2] : g.edges())
    for (auto [b, b2] : h.edges()) {
      edges.push_back({a * nh + b, a2 * nh + b2});
      edges.push_back({a * nh + b2, a2 * nh + b});
    }
  return Graph(g.order() * nh, edges, product_labels(g, h));
}

auto disjoint_union(const Graph &g, const Graph &h) -> Graph
{
  int shift = g.order();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges())
    edges.push_back({u + shift, v + shift});
  return Graph(g.order() + h.order(), edges, shifted_labels(g, h));
}

auto join(const Graph &g, const Graph &h) -> Graph
{
  int shift = g.order();
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : h.edges())
    edges.push_back({u + shift, v + shift});
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v)
      edges.push_back({u, v + shift});
  return Graph(g.order() + h.order(), edges, shifted_labels(g, h));
}

auto line_graph(const Graph &g) -> std::pair<Graph, EdgeLabeling>
{
  require(g.size() >= 1, "line_graph: graph has no edges");
  EdgeLabeling labeling{g.edges()};
  const auto &base = labeling.edge_of_vertex;
  int n = static_cast<int>(base.size());
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) {
    labels.push_back(g.label(base[a].u) + "-" + g.label(base[a].v));
    for (int b = a + 1; b < n; ++b)
      if (base[a].u == base[b].u || base[a].u == base[b].v || base[a].v == base[b].u || base[a].v == base[b].v)
        edges.push_back({a, b});
  }
  return {Graph(n, edges, std::move(labels)), std::move(labeling)};
}

auto duplicate_vertex(const Graph &g, int v, TwinMode mode) -> Graph
{
  if (v < 0 || v >= g.order())
    throw std::invalid_argument("duplicate_vertex: invalid vertex " + std::to_string(v));
  int twin = g.order();
  std::vector<Edge> edges = g.edges();
  g.neighbors(v).for_each([&](int w) { edges.push_back({w, twin}); });
  if (mode == TwinMode::True)
    edges.push_back({v, twin});
  std::vector<std::string> labels = g.labels();
  if (!labels.empty()) {
    std::string name = labels[v] + "'";
    while (g.find_label(name))
      name += "'";
    labels.push_back(name);
  }
  return Graph(twin + 1, edges, std::move(labels));
}

auto c5_layout() -> FamilyLayout { return {{0, 2}}; }

auto c5_family(int i, int j) -> Graph
{
  require(i >= 0 && j >= 0, "c5_family: counts must be non-negative");
  return with_false_twins(cycle(5), c5_layout().duplicated, {i, j});
}

auto g7_layout() -> FamilyLayout { return {{3, 4, 5}}; }

auto g7_family(int i, int j, int k) -> Graph
{
  require(i >= 0 && j >= 0 && k >= 0, "g7_family: counts must be non-negative");
  std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 6}, {4, 6}, {5, 6}};
  return with_false_twins(Graph(7, edges), g7_layout().duplicated, {i, j, k});
}

} // namespace mvis
