#include "mvis/visibility.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvis {

auto to_string(Variant v) -> std::string
{
  switch (v) {
  case Variant::Mutual:
    return "mutual";
  case Variant::Outer:
    return "outer";
  case Variant::Dual:
    return "dual";
  case Variant::Total:
    return "total";
  }
  return "?";
}

auto parse_variant(const std::string &name) -> Variant
{
  if (name == "mu" || name == "mutual")
    return Variant::Mutual;
  if (name == "outer")
    return Variant::Outer;
  if (name == "dual")
    return Variant::Dual;
  if (name == "total")
    return Variant::Total;
  throw std::invalid_argument("unknown variant '" + name + "'");
}

auto to_string(PairClass c) -> std::string
{
  switch (c) {
  case PairClass::InIn:
    return "in-X/in-X";
  case PairClass::InOut:
    return "X/complement";
  case PairClass::OutOut:
    return "complement/complement";
  }
  return "?";
}

namespace {

auto classify(const VertexSet &x, int u, int v) -> PairClass
{
  bool a = x.test(u), b = x.test(v);
  if (a && b)
    return PairClass::InIn;
  if (a || b)
    return PairClass::InOut;
  return PairClass::OutOut;
}

// Distance from u to v inside (V \ X) + {u, v} equals d(u, v).
auto restricted_bfs_visible(const Graph &g, const DistanceMatrix &d, const VertexSet &x, int u, int v) -> bool
{
  int n = g.order();
  int target = d.hops(u, v);
  VertexSet allowed = x.complement();
  allowed.set(u);
  allowed.set(v);
  VertexSet visited(n);
  visited.set(u);
  VertexSet frontier = visited;
  for (int depth = 1; depth <= target; ++depth) {
    VertexSet next(n);
    frontier.for_each([&](int f) { next |= g.neighbors(f); });
    next &= allowed;
    next = next.minus(visited);
    if (next.test(v))
      return depth == target;
    if (next.none())
      return false;
    visited |= next;
    frontier = next;
  }
  return false;
}

} // namespace

VisibilityOracle::VisibilityOracle(const Graph &g) : g_(&g), d_(g)
{
  auto diam = d_.diameter();
  if (!diam)
    throw std::invalid_argument("visibility requires a connected graph");
  diameter_ = *diam;
}

auto VisibilityOracle::visible_bfs(const VertexSet &x, int u, int v) const -> bool
{
  return restricted_bfs_visible(*g_, d_, x, u, v);
}

auto VisibilityOracle::visible_common_neighbor(const VertexSet &x, int u, int v) const -> bool
{
  if (g_->adjacent(u, v))
    return true;
  return g_->neighbors(u).intersects_outside(g_->neighbors(v), x);
}

auto VisibilityOracle::verify(const VertexSet &x, Variant variant) const -> VisibilityReport
{
  int n = g_->order();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      PairClass c = classify(x, u, v);
      if (!requires_class(variant, c))
        continue;
      if (!visible(x, u, v))
        return {false, std::pair{u, v}, c};
    }
  return {};
}

auto x_visible(const Graph &g, const DistanceMatrix &d, const VertexSet &x, int u, int v) -> bool
{
  int n = g.order();
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("x_visible: vertex out of range");
  if (u == v)
    throw std::invalid_argument("x_visible: u and v must differ");
  if (!d.reachable(u, v))
    throw std::invalid_argument("x_visible: u and v lie in different components");
  return restricted_bfs_visible(g, d, x, u, v);
}

auto required_pairs(Variant variant, const VertexSet &x, int n) -> std::vector<std::pair<int, int>>
{
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (requires_class(variant, classify(x, u, v)))
        out.emplace_back(u, v);
  return out;
}

auto verify(const Graph &g, const VertexSet &x, Variant variant) -> VisibilityReport
{
  return VisibilityOracle(g).verify(x, variant);
}

auto verify_line_complete(int n, std::span<const Edge> f, Variant variant) -> VisibilityReport
{
  if (n < 3)
    throw std::invalid_argument("verify_line_complete: n must be at least 3");
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      all.push_back({u, v});
  std::vector<std::vector<bool>> in_f(n, std::vector<bool>(n, false));
  for (auto [u, v] : f) {
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw std::invalid_argument("verify_line_complete: invalid edge " + std::to_string(u) + "-" +
                                  std::to_string(v));
    in_f[u][v] = in_f[v][u] = true;
  }
  auto member = [&](const Edge &e) { return static_cast<bool>(in_f[e.u][e.v]); };

  int m = static_cast<int>(all.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      const Edge &e = all[a], &h = all[b];
      if (e.u == h.u || e.u == h.v || e.v == h.u || e.v == h.v)
        continue;
      bool ia = member(e), ib = member(h);
      PairClass c = ia && ib ? PairClass::InIn : (ia || ib ? PairClass::InOut : PairClass::OutOut);
      if (!requires_class(variant, c))
        continue;
      bool cross_free = !in_f[e.u][h.u] || !in_f[e.u][h.v] || !in_f[e.v][h.u] || !in_f[e.v][h.v];
      if (!cross_free)
        return {false, std::pair{a, b}, c};
    }
  return {};
}

auto is_independent(const Graph &g, const VertexSet &x) -> bool
{
  bool ok = true;
  x.for_each([&](int v) { ok = ok && !g.neighbors(v).intersects(x); });
  return ok;
}

} // namespace mvis
