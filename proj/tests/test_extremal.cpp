#include "mvis/errors.hpp"
#include "mvis/extremal.hpp"
#include "mvis/generators.hpp"
#include "mvis/solver.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace mvis;

namespace {

auto k4_minus() -> Graph
{
  std::vector<Edge> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  return Graph(4, e);
}

/// Containment through an exhaustive injection search.
auto brute_contains(const Graph &g, ForbiddenPattern p) -> bool
{
  switch (p) {
  case ForbiddenPattern::C4:
    return ref::has_subgraph(g, cycle(4));
  case ForbiddenPattern::K4:
    return ref::has_subgraph(g, complete(4));
  case ForbiddenPattern::K4Minus:
    return ref::has_subgraph(g, k4_minus());
  case ForbiddenPattern::K4C4:
    return ref::has_subgraph(g, complete(4)) || ref::has_subgraph(g, cycle(4), true);
  }
  return false;
}

auto brute_ex(int n, ForbiddenPattern p) -> int
{
  int pairs = n * (n - 1) / 2;
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    int edges = std::popcount(mask);
    if (edges > best && !brute_contains(ref::graph_from_mask(n, mask), p))
      best = edges;
  }
  return best;
}

/// Maximum ones without an all-ones 2x2 submatrix, over all m x n matrices.
auto brute_zarankiewicz(int m, int n) -> int
{
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m * n)); ++mask) {
    int ones = std::popcount(mask);
    if (ones <= best)
      continue;
    bool ok = true;
    for (int r1 = 0; r1 < m && ok; ++r1)
      for (int r2 = r1 + 1; r2 < m && ok; ++r2)
        for (int c1 = 0; c1 < n && ok; ++c1)
          for (int c2 = c1 + 1; c2 < n && ok; ++c2) {
            auto at = [&](int r, int c) { return (mask >> (r * n + c)) & 1U; };
            ok = !(at(r1, c1) && at(r1, c2) && at(r2, c1) && at(r2, c2));
          }
    if (ok)
      best = ones;
  }
  return best;
}

auto matrix_ok(const std::vector<std::string> &rows) -> bool
{
  for (std::size_t a = 0; a < rows.size(); ++a)
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      int shared = 0;
      for (std::size_t c = 0; c < rows[a].size(); ++c)
        shared += rows[a][c] == '1' && rows[b][c] == '1';
      if (shared > 1)
        return false;
    }
  return true;
}

auto ones(const std::vector<std::string> &rows) -> int
{
  int total = 0;
  for (const auto &r : rows)
    total += static_cast<int>(std::count(r.begin(), r.end(), '1'));
  return total;
}

constexpr ForbiddenPattern kPatterns[] = {ForbiddenPattern::C4, ForbiddenPattern::K4, ForbiddenPattern::K4Minus,
                                          ForbiddenPattern::K4C4};

} // namespace

TEST_CASE("pair pattern sequence")
{
  const int expected[] = {0, 1, 3, 5, 7, 10, 12, 15, 18, 21};
  for (int n = 1; n <= 10; ++n) {
    auto r = ex_forbidden(n, ForbiddenPattern::K4C4);
    CHECK(r.max_edges == expected[n - 1]);
    CHECK(r.certified);
    CHECK(r.witness.order() == n);
    CHECK(r.witness.size() == r.max_edges);
    CHECK_FALSE(contains_pattern(r.witness, ForbiddenPattern::K4C4));
  }
}

TEST_CASE("single patterns")
{
  CHECK(ex_forbidden(1, ForbiddenPattern::C4).max_edges == 0);
  for (int n = 4; n <= 7; ++n)
    CHECK(ex_forbidden(n, ForbiddenPattern::C4).max_edges == n - 1 + (n - 1) / 2);
  // Independent literature values for ex(n; C4), n = 8, 9.
  CHECK(ex_forbidden(8, ForbiddenPattern::C4).max_edges == 11);
  CHECK(ex_forbidden(9, ForbiddenPattern::C4, 9).max_edges == 13);
  for (int n = 1; n <= 8; ++n)
    CHECK(ex_forbidden(n, ForbiddenPattern::K4).max_edges == turan_edge_count(n, 3));
}

TEST_CASE("ex agrees with exhaustive enumeration")
{
  for (auto p : kPatterns)
    for (int n = 1; n <= 6; ++n) {
      auto r = ex_forbidden(n, p);
      CHECK(r.max_edges == brute_ex(n, p));
      CHECK_FALSE(brute_contains(r.witness, p));
    }
}

TEST_CASE("containment examples")
{
  CHECK(contains_pattern(cycle(4), ForbiddenPattern::C4));
  CHECK_FALSE(contains_pattern(turan_graph(6, 3), ForbiddenPattern::K4));
  CHECK(contains_pattern(complete(4), ForbiddenPattern::K4Minus));
  CHECK_FALSE(contains_pattern(cycle(5), ForbiddenPattern::C4));
  // An induced C4 is forbidden for the pair pattern; a chord removes it.
  CHECK(contains_pattern(cycle(4), ForbiddenPattern::K4C4));
  CHECK_FALSE(contains_pattern(k4_minus(), ForbiddenPattern::K4C4));
  CHECK(contains_pattern(complete(4), ForbiddenPattern::K4C4));
}

TEST_CASE("quad table agrees with containment on every 4-vertex graph")
{
  const std::pair<int, int> order[] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<Edge> e;
    for (int b = 0; b < 6; ++b)
      if ((mask >> b) & 1U)
        e.push_back({order[b].first, order[b].second});
    Graph g(4, e);
    for (auto p : kPatterns) {
      CHECK(quad_forbidden(p, mask) == contains_pattern(g, p));
      CHECK(quad_forbidden(p, mask) == brute_contains(g, p));
    }
  }
}

TEST_CASE("containment agrees with injection search on random graphs")
{
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = ref::random_connected(4 + trial % 5, 0.45, rng);
    for (auto p : kPatterns)
      CHECK(contains_pattern(g, p) == brute_contains(g, p));
  }
}

TEST_CASE("ceilings")
{
  CHECK_THROWS_AS(ex_forbidden(9, ForbiddenPattern::C4), CeilingError);
  CHECK_THROWS_AS(ex_forbidden(20, ForbiddenPattern::C4), CeilingError);
  CHECK_THROWS_AS(ex_forbidden(11, ForbiddenPattern::K4C4), CeilingError);
  CHECK_THROWS_AS(ex_forbidden(17, ForbiddenPattern::K4, 30), CeilingError);
  CHECK_THROWS_AS(ex_forbidden(0, ForbiddenPattern::K4), std::invalid_argument);
}

TEST_CASE("threads do not change the value")
{
  for (int n = 7; n <= 10; ++n)
    CHECK(ex_forbidden(n, ForbiddenPattern::K4C4, -1, 3).max_edges ==
          ex_forbidden(n, ForbiddenPattern::K4C4).max_edges);
}

TEST_CASE("turan edge counts")
{
  CHECK(turan_edge_count(5, 3) == 8);
  for (int n = 1; n <= 12; ++n) {
    CHECK(turan_edge_count(n, 2) == ((n + 1) / 2) * (n / 2));
    CHECK(turan_edge_count(n, 1) == 0);
    CHECK(turan_edge_count(n, 3) == turan_graph(n, 3).size());
  }
}

TEST_CASE("zarankiewicz")
{
  auto two = zarankiewicz(2, 2);
  CHECK(two.max_ones == 3);
  CHECK(two.max_ones == brute_zarankiewicz(2, 2));
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      auto r = zarankiewicz(m, n);
      CHECK(r.max_ones == brute_zarankiewicz(m, n));
      CHECK(r.max_ones == zarankiewicz(n, m).max_ones);
      CHECK(r.matrix.size() == static_cast<std::size_t>(m));
      CHECK(ones(r.matrix) == r.max_ones);
      CHECK(matrix_ok(r.matrix));
    }
  CHECK(zarankiewicz(6, 6).max_ones == 16);
  CHECK_THROWS_AS(zarankiewicz(1, 3), CeilingError);
  CHECK_THROWS_AS(zarankiewicz(7, 3), CeilingError);
}

TEST_CASE("zarankiewicz equals the mutual number of rook graphs")
{
  for (auto [m, n] : {std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 4}}) {
    SolveOptions opts;
    opts.variant = Variant::Mutual;
    CHECK(max_visibility(cartesian_product(complete(m), complete(n)), opts).value == zarankiewicz(m, n).max_ones);
  }
}

TEST_CASE("pattern names")
{
  for (auto p : kPatterns)
    CHECK(parse_pattern(to_string(p)) == p);
  CHECK_THROWS_AS(parse_pattern("k5"), std::invalid_argument);
}
