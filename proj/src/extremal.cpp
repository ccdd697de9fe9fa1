#include "mvis/extremal.hpp"

#include "mvis/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mvis {

auto to_string(ForbiddenPattern p) -> std::string
{
  switch (p) {
  case ForbiddenPattern::C4:
    return "c4";
  case ForbiddenPattern::K4:
    return "k4";
  case ForbiddenPattern::K4Minus:
    return "k4minus";
  case ForbiddenPattern::K4C4:
    return "k4c4";
  }
  return "?";
}

auto parse_pattern(const std::string &name) -> ForbiddenPattern
{
  if (name == "c4")
    return ForbiddenPattern::C4;
  if (name == "k4")
    return ForbiddenPattern::K4;
  if (name == "k4minus")
    return ForbiddenPattern::K4Minus;
  if (name == "k4c4")
    return ForbiddenPattern::K4C4;
  throw std::invalid_argument("unknown forbidden pattern '" + name + "'");
}

auto turan_edge_count(int n, int r) -> long long
{
  if (r < 1)
    throw std::invalid_argument("turan_edge_count: r must be at least 1");
  if (n < 0)
    throw std::invalid_argument("turan_edge_count: n must be non-negative");
  long long total = static_cast<long long>(n) * (n - 1) / 2;
  for (int part = 0; part < r; ++part) {
    long long size = n / r + (part < n % r ? 1 : 0);
    total -= size * (size - 1) / 2;
  }
  return total;
}

namespace {

// Pair order inside a 4-set: 01 02 03 12 13 23.
constexpr std::array<std::array<int, 4>, 3> kFourCycles{{
    {0, 3, 5, 2}, // 0-1-2-3-0
    {0, 4, 5, 1}, // 0-1-3-2-0
    {1, 3, 4, 2}, // 0-2-1-3-0
}};

auto has_four_cycle(unsigned mask) -> bool
{
  for (const auto &c : kFourCycles) {
    unsigned need = 0;
    for (int bit : c)
      need |= 1U << bit;
    if ((mask & need) == need)
      return true;
  }
  return false;
}

} // namespace

auto quad_forbidden(ForbiddenPattern pattern, unsigned mask) -> bool
{
  mask &= 63U;
  switch (pattern) {
  case ForbiddenPattern::K4:
    return mask == 63U;
  case ForbiddenPattern::K4Minus:
    return std::popcount(mask) >= 5;
  case ForbiddenPattern::C4:
    return has_four_cycle(mask);
  case ForbiddenPattern::K4C4:
    return mask == 63U || (std::popcount(mask) == 4 && has_four_cycle(mask));
  }
  return false;
}

auto contains_pattern(const Graph &g, ForbiddenPattern pattern) -> bool
{
  int n = g.order();
  switch (pattern) {
  case ForbiddenPattern::C4:
    // Two vertices with two common neighbours.
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (g.neighbors(u).intersection_count(g.neighbors(v)) >= 2)
          return true;
    return false;
  case ForbiddenPattern::K4Minus:
    // An edge with two common neighbours.
    for (auto [u, v] : g.edges())
      if (g.neighbors(u).intersection_count(g.neighbors(v)) >= 2)
        return true;
    return false;
  case ForbiddenPattern::K4:
    // A triangle with a common neighbour of all three.
    for (auto [u, v] : g.edges()) {
      VertexSet common = g.neighbors(u) & g.neighbors(v);
      bool found = false;
      common.for_each([&](int w) {
        if (!found && common.intersects(g.neighbors(w)))
          found = true;
      });
      if (found)
        return true;
    }
    return false;
  case ForbiddenPattern::K4C4: {
    if (contains_pattern(g, ForbiddenPattern::K4))
      return true;
    // Non-adjacent u, v with two non-adjacent common neighbours.
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v))
          continue;
        VertexSet common = g.neighbors(u) & g.neighbors(v);
        bool found = false;
        common.for_each([&](int w) {
          if (!found && common.minus(g.neighbors(w)).next(w + 1) >= 0)
            found = true;
        });
        if (found)
          return true;
      }
    return false;
  }
  }
  return false;
}

namespace {

constexpr int kHardCeiling = 16;
using Row = std::uint32_t;

class EdgeSearch
{
public:
  EdgeSearch(int n, ForbiddenPattern pattern, const std::vector<int> &smaller, std::atomic<int> &best)
      : n_(n), ex_(smaller), best_(best)
  {
    for (unsigned mask = 0; mask < 64; ++mask)
      table_[mask] = quad_forbidden(pattern, mask);
  }

  struct State
  {
    std::array<Row, kHardCeiling> adj{};
    std::array<int, kHardCeiling> deg{};
    int edges = 0;
  };

  /// Explores completions of `s` where vertices below `v` are complete and
  /// vertex v has decided its edges to vertices below `u`.
  auto search(State &s, int v, int u, int split_at, std::vector<State> *tasks) -> void
  {
    if (u == v) {
      if (!min_degree_last(s, v))
        return;
      if (v + 1 == n_) {
        record(s);
        return;
      }
      if (tasks && v + 1 == split_at) {
        tasks->push_back(s);
        return;
      }
      search(s, v + 1, 0, split_at, tasks);
      return;
    }
    if (bound(s, v, u) <= best_.load(std::memory_order_relaxed))
      return;

    // Include first so good incumbents appear early.
    add(s, u, v);
    if (quads_ok(s, u, v))
      search(s, v, u + 1, split_at, tasks);
    remove(s, u, v);

    if (quads_ok(s, u, v))
      search(s, v, u + 1, split_at, tasks);
  }

  auto best_state() const -> const State & { return best_state_; }
  auto best_edges() const -> int { return best_edges_; }

private:
  int n_;
  std::array<bool, 64> table_{};
  const std::vector<int> &ex_;
  std::atomic<int> &best_;
  State best_state_;
  int best_edges_ = -1;

  static auto add(State &s, int u, int v) -> void
  {
    s.adj[u] |= Row{1} << v;
    s.adj[v] |= Row{1} << u;
    ++s.deg[u];
    ++s.deg[v];
    ++s.edges;
  }
  static auto remove(State &s, int u, int v) -> void
  {
    s.adj[u] &= ~(Row{1} << v);
    s.adj[v] &= ~(Row{1} << u);
    --s.deg[u];
    --s.deg[v];
    --s.edges;
  }

  auto record(const State &s) -> void
  {
    if (s.edges > best_edges_) {
      best_edges_ = s.edges;
      best_state_ = s;
    }
    int seen = best_.load();
    while (s.edges > seen && !best_.compare_exchange_weak(seen, s.edges)) {
    }
  }

  /// Every 4-set {a, b, u, v} with a < b < u is now fully decided.
  auto quads_ok(const State &s, int u, int v) const -> bool
  {
    auto bit = [&](int x, int y) -> unsigned { return (s.adj[x] >> y) & 1U; };
    unsigned uv = bit(u, v);
    for (int b = 1; b < u; ++b) {
      unsigned bu = bit(b, u), bv = bit(b, v);
      for (int a = 0; a < b; ++a) {
        unsigned mask = bit(a, b) | (bit(a, u) << 1) | (bit(a, v) << 2) | (bu << 3) | (bv << 4) | (uv << 5);
        if (table_[mask])
          return false;
      }
    }
    return true;
  }

  /// Vertex v, just completed, has minimum degree in the graph on 0..v.
  static auto min_degree_last(const State &s, int v) -> bool
  {
    for (int w = 0; w < v; ++w)
      if (s.deg[w] < s.deg[v])
        return false;
    return true;
  }

  /**
   * Upper bound on the final edge count.
   *
   * Vertex w adds at most min(w, floor(2 e / (w - 1)), ex(w + 1) - e) edges
   * to a prefix graph with e edges: its back-degree is the minimum degree of
   * the graph on 0..w and that graph avoids the pattern.
   */
  auto bound(const State &s, int v, int u) const -> int
  {
    int prefix = s.edges;
    int back = 0;
    for (int w = 0; w < u; ++w)
      back += (s.adj[v] >> w) & 1U;
    int before = prefix - back;
    int e = before + step(before, v, back + (v - u));
    for (int w = v + 1; w < n_; ++w)
      e += step(e, w, w);
    return e;
  }

  auto step(int e, int w, int cap) const -> int
  {
    int add = cap;
    if (w >= 2)
      add = std::min(add, 2 * e / (w - 1));
    add = std::min(add, ex_[w + 1] - e);
    return std::max(add, 0);
  }
};

auto to_graph(const EdgeSearch::State &s, int n) -> Graph
{
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if ((s.adj[u] >> v) & 1U)
        edges.push_back({u, v});
  return Graph(n, edges);
}

auto greedy_incumbent(int n, ForbiddenPattern pattern) -> Graph
{
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      edges.push_back({u, v});
      if (contains_pattern(Graph(n, edges), pattern))
        edges.pop_back();
    }
  return Graph(n, edges);
}

auto solve_order(int n, ForbiddenPattern pattern, const std::vector<int> &smaller, int threads) -> ExtremalResult
{
  Graph incumbent = greedy_incumbent(n, pattern);
  // A vertex-deletion average caps the answer: e <= n * ex(n - 1) / (n - 2).
  int cap = n < 3 ? n * (n - 1) / 2 : n * smaller[n - 1] / (n - 2);
  if (incumbent.size() >= cap)
    return {incumbent.size(), incumbent, true};

  std::vector<int> ex = smaller;
  ex.resize(n + 1);
  ex[n] = cap;
  std::atomic<int> best{incumbent.size()};

  EdgeSearch::State root;
  int split_at = threads > 1 && n >= 7 ? 5 : -1;
  std::vector<EdgeSearch::State> tasks;
  EdgeSearch first(n, pattern, ex, best);
  first.search(root, 1, 0, split_at, split_at > 0 ? &tasks : nullptr);

  std::vector<std::pair<int, EdgeSearch::State>> finds;
  if (first.best_edges() > incumbent.size())
    finds.emplace_back(first.best_edges(), first.best_state());

  if (!tasks.empty()) {
    std::atomic<std::size_t> next{0};
    std::mutex lock;
    auto worker = [&] {
      EdgeSearch search(n, pattern, ex, best);
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= tasks.size())
          break;
        search.search(tasks[i], split_at, 0, -1, nullptr);
      }
      std::lock_guard guard(lock);
      if (search.best_edges() >= 0)
        finds.emplace_back(search.best_edges(), search.best_state());
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  ExtremalResult result{incumbent.size(), incumbent, true};
  for (const auto &[edges, state] : finds)
    if (edges > result.max_edges) {
      result.max_edges = edges;
      result.witness = to_graph(state, n);
    }
  return result;
}

} // namespace

auto ex_forbidden(int n, ForbiddenPattern pattern, int ceiling, int threads) -> ExtremalResult
{
  if (n < 1)
    throw std::invalid_argument("ex_forbidden: n must be at least 1");
  if (ceiling < 0)
    ceiling = pattern == ForbiddenPattern::K4C4 ? kPairPatternCeiling : kSinglePatternCeiling;
  ceiling = std::min(ceiling, kHardCeiling);
  if (n > ceiling)
    throw CeilingError("ex_forbidden: n = " + std::to_string(n) + " exceeds ceiling " + std::to_string(ceiling));

  std::vector<int> ex{0, 0};
  ExtremalResult result{0, Graph(1, std::span<const Edge>{}), true};
  for (int k = 2; k <= n; ++k) {
    result = solve_order(k, pattern, ex, threads);
    ex.push_back(result.max_edges);
  }
  if (contains_pattern(result.witness, pattern) || result.witness.size() != result.max_edges)
    throw std::logic_error("ex_forbidden: witness check failed");
  return result;
}

auto zarankiewicz(int m, int n) -> ZarankiewiczResult
{
  if (m < kZarankiewiczMin || n < kZarankiewiczMin || m > kZarankiewiczMax || n > kZarankiewiczMax)
    throw CeilingError("zarankiewicz: dimensions must lie in [" + std::to_string(kZarankiewiczMin) + ", " +
                       std::to_string(kZarankiewiczMax) + "]");

  // Rows may be permuted freely, so only rows sorted by (ones, mask) descending are built.
  std::vector<unsigned> rows(m), best_rows(m);
  int best = -1;
  unsigned full = (1U << n) - 1;

  auto rank = [](unsigned mask) { return (static_cast<unsigned>(std::popcount(mask)) << 16) | mask; };

  auto dfs = [&](auto &&self, int r, int ones, unsigned limit) -> void {
    if (r == m) {
      if (ones > best) {
        best = ones;
        best_rows = rows;
      }
      return;
    }
    for (unsigned mask = full + 1; mask-- > 0;) {
      if (rank(mask) > limit)
        continue;
      int k = std::popcount(mask);
      if (ones + k * (m - r) <= best)
        continue;
      bool ok = true;
      for (int q = 0; q < r && ok; ++q)
        ok = std::popcount(rows[q] & mask) <= 1;
      if (!ok)
        continue;
      rows[r] = mask;
      self(self, r + 1, ones + k, rank(mask));
    }
  };
  dfs(dfs, 0, 0, ~0U);

  ZarankiewiczResult result;
  result.max_ones = best;
  result.certified = true;
  for (unsigned mask : best_rows) {
    std::string row;
    for (int c = 0; c < n; ++c)
      row += ((mask >> c) & 1U) ? '1' : '0';
    result.matrix.push_back(row);
  }
  return result;
}

} // namespace mvis
