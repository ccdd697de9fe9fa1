#include "mvis/constructions.hpp"

#include "mvis/cographs.hpp"
#include "mvis/generators.hpp"
#include "mvis/solver.hpp"

#include <stdexcept>

namespace mvis {

namespace {

auto require(bool ok, const char *what) -> void
{
  if (!ok)
    throw std::invalid_argument(what);
}

auto checked(const Graph &g, VertexSet x, Variant variant, const char *who) -> VertexSet
{
  if (!verify(g, x, variant).valid)
    throw std::logic_error(std::string(who) + ": constructed set failed verification");
  return x;
}

auto checked_line(int n, std::vector<Edge> f, Variant variant, const char *who) -> std::vector<Edge>
{
  if (!verify_line_complete(n, f, variant).valid)
    throw std::logic_error(std::string(who) + ": constructed edge set failed verification");
  return f;
}

/// Base witness of `variant` on `base` (the first base.order() vertices of `family`), extended by all
/// later vertices. Tries maximum base witnesses first, then smaller ones.
auto extend_base(const Graph &base, const Graph &family, Variant variant) -> VertexSet
{
  VisibilityOracle base_oracle(base);
  VisibilityOracle family_oracle(family);
  SolveOptions opts;
  opts.variant = variant;
  int top = max_visibility(base, opts).value;
  for (int size = top; size >= 0; --size)
    for (const auto &w : valid_sets_of_size(base_oracle, variant, size, 1 << 12)) {
      VertexSet x(family.order());
      w.for_each([&](int v) { x.set(v); });
      for (int v = base.order(); v < family.order(); ++v)
        x.set(v);
      if (family_oracle.is_valid(x, variant))
        return x;
    }
  throw std::logic_error("family witness: no base witness extends");
}

} // namespace

auto dual_set_cartesian_cliques(int n, int m) -> VertexSet
{
  require(n >= 3 && m >= 3, "dual_set_cartesian_cliques: n and m must be at least 3");
  VertexSet x(n * m);
  for (int i = 0; i < n; ++i)
    x.set(i * m);
  for (int j = 0; j < m; ++j)
    x.set(j);
  return checked(cartesian_product(complete(n), complete(m)), x, Variant::Dual, "dual_set_cartesian_cliques");
}

auto outer_set_cartesian_cliques(int n, int m) -> VertexSet
{
  require(n >= 3 && m >= 3, "outer_set_cartesian_cliques: n and m must be at least 3");
  VertexSet x(n * m);
  for (int i = 1; i < n; ++i)
    x.set(i * m);
  for (int j = 1; j < m; ++j)
    x.set(j);
  return checked(cartesian_product(complete(n), complete(m)), x, Variant::Outer, "outer_set_cartesian_cliques");
}

auto total_set_direct_cliques(int n, int m) -> VertexSet
{
  require(n >= 5 && m >= 5, "total_set_direct_cliques: n and m must be at least 5");
  VertexSet x = VertexSet::full(n * m);
  for (int d = 0; d < 4; ++d)
    x.reset(d * m + d);
  return checked(direct_product(complete(n), complete(m)), x, Variant::Total, "total_set_direct_cliques");
}

auto mu_set_line_complete(int n) -> std::vector<Edge>
{
  require(n >= 3, "mu_set_line_complete: n must be at least 3");
  return checked_line(n, turan_graph(n, 3).edges(), Variant::Mutual, "mu_set_line_complete");
}

auto total_set_line_complete(int n) -> std::vector<Edge>
{
  require(n >= 3, "total_set_line_complete: n must be at least 3");
  std::vector<Edge> f;
  for (int v = 1; v < n; ++v)
    f.push_back({0, v});
  for (int v = 1; v + 1 < n; v += 2)
    f.push_back({v, v + 1});
  return checked_line(n, f, Variant::Total, "total_set_line_complete");
}

auto total_witness_lk10() -> std::vector<Edge>
{
  std::vector<Edge> f{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8},
                      {8, 9}, {0, 9}, {0, 4}, {1, 9}, {2, 6}, {3, 8}, {5, 7}, {7, 9}};
  return checked_line(10, f, Variant::Total, "total_witness_lk10");
}

auto line_complete_vertices(int n, const std::vector<Edge> &f) -> VertexSet
{
  int size = n * (n - 1) / 2;
  VertexSet x(size);
  for (auto e : f) {
    auto [u, v] = e.u < e.v ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    if (u < 0 || v >= n || u == v)
      throw std::invalid_argument("line_complete_vertices: invalid edge");
    // Lexicographic index of (u, v) among pairs of 0..n-1.
    x.set(u * n - u * (u + 1) / 2 + (v - u - 1));
  }
  return x;
}

auto cograph_witnesses(const GraphExpr &expr) -> std::map<Variant, VertexSet>
{
  return cograph_witnesses(eval(expr));
}

auto cograph_witnesses(const Graph &g) -> std::map<Variant, VertexSet>
{
  if (!is_connected(g) || !is_cograph(g))
    throw std::invalid_argument("cograph_witnesses: input must be a connected cograph");
  std::map<Variant, VertexSet> out;
  if (cograph_split_regime(g)) {
    auto dec = *big_mu_decompose(g);
    VertexSet big = g.vertices();
    big.reset(dec.apex);
    out[Variant::Mutual] = checked(g, big, Variant::Mutual, "cograph_witnesses");
    out[Variant::Dual] = checked(g, big, Variant::Dual, "cograph_witnesses");
    VisibilityOracle oracle(g);
    for (Variant v : {Variant::Total, Variant::Outer}) {
      // V minus the apex and one vertex of H.
      int pick = -1;
      dec.h.for_each([&](int h) {
        if (pick >= 0)
          return;
        VertexSet x = big;
        x.reset(h);
        if (oracle.is_valid(x, v))
          pick = h;
      });
      if (pick < 0)
        throw std::logic_error("cograph_witnesses: no vertex of H yields a valid set");
      VertexSet x = big;
      x.reset(pick);
      out[v] = x;
    }
    return out;
  }
  for (Variant v : kAllVariants) {
    SolveOptions opts;
    opts.variant = v;
    out[v] = max_visibility(g, opts).witness;
  }
  return out;
}

auto c5_family_witnesses(int i, int j) -> std::map<Variant, VertexSet>
{
  Graph base = cycle(5);
  Graph family = c5_family(i, j);
  std::map<Variant, VertexSet> out;
  for (Variant v : kAllVariants)
    out[v] = extend_base(base, family, v);
  return out;
}

auto g7_family_witnesses(int i, int j, int k) -> std::map<Variant, VertexSet>
{
  Graph base = g7_family(0, 0, 0);
  Graph family = g7_family(i, j, k);
  std::map<Variant, VertexSet> out;
  for (Variant v : kAllVariants)
    out[v] = extend_base(base, family, v);
  return out;
}

} // namespace mvis
