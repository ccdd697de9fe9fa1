#include "mvis/errors.hpp"
#include "mvis/generators.hpp"
#include "mvis/graph.hpp"
#include "mvis/io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace mvis;

namespace {

auto sorted_degrees(const Graph &g) -> std::vector<int>
{
  auto d = degree_sequence(g);
  std::sort(d.begin(), d.end());
  return d;
}

auto is_regular(const Graph &g, int k) -> bool
{
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != k)
      return false;
  return true;
}

auto symmetric_and_loop_free(const Graph &g) -> bool
{
  for (int u = 0; u < g.order(); ++u) {
    if (g.adjacent(u, u))
      return false;
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(v, u))
        return false;
  }
  return true;
}

} // namespace

TEST_CASE("vertex set basics")
{
  VertexSet x(130, {0, 63, 64, 129});
  CHECK(x.count() == 4);
  CHECK(x.first() == 0);
  CHECK(x.next(1) == 63);
  CHECK(x.next(65) == 129);
  CHECK(x.last() == 129);
  CHECK(x.members() == std::vector<int>{0, 63, 64, 129});
  CHECK(x.complement().count() == 126);
  CHECK(VertexSet::full(130).count() == 130);

  VertexSet a(8, {1, 2}), b(8, {0, 3});
  // colex: {1,2} < {0,3} because the largest differing element 3 is in b
  CHECK(colex_less(a, b));
  CHECK_FALSE(colex_less(b, a));
}

TEST_CASE("complete graphs")
{
  CHECK(complete(1).order() == 1);
  CHECK(complete(1).size() == 0);
  CHECK(complete(4).size() == 6);
  CHECK(diameter(complete(3)) == 1);
  CHECK_THROWS_AS(complete(0), std::invalid_argument);
}

TEST_CASE("complete bipartite graphs")
{
  Graph k22 = complete_bipartite(2, 2);
  CHECK(sorted_degrees(k22) == sorted_degrees(cycle(4)));
  CHECK(girth(k22) == 4);
  CHECK(complete_bipartite(2, 3).order() == 5);
  CHECK(complete_bipartite(2, 3).size() == 6);
  auto m = ref::matrix_of(k22);
  int far = 0;
  for (const auto &row : m.dist)
    far = std::max(far, *std::max_element(row.begin(), row.end()));
  CHECK(diameter(k22) == far);
  CHECK(diameter(k22) == 2);
}

TEST_CASE("cycles")
{
  CHECK(girth(cycle(5)) == 5);
  CHECK(diameter(cycle(5)) == 2);
  CHECK(girth(cycle(4)) == 4);
  CHECK(cycle(3) == complete(3));
  CHECK_THROWS_AS(cycle(2), std::invalid_argument);
}

TEST_CASE("petersen graph")
{
  Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  CHECK(p.size() == 2 * 10 - 5);
  CHECK(girth(p) == 5);
  CHECK(is_regular(p, 3));
  auto m = ref::matrix_of(p);
  int far = 0;
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v)
      far = std::max(far, m.dist[u][v]);
  CHECK(diameter(p) == far);
  CHECK(far == 2);
}

TEST_CASE("cartesian product")
{
  Graph q2 = cartesian_product(complete(2), complete(2));
  CHECK(is_regular(q2, 2));
  CHECK(q2.order() == 4);
  CHECK(is_connected(q2));
  CHECK(girth(q2) == 4);

  Graph g = cartesian_product(complete(3), complete(4));
  CHECK(g.order() == 12);
  CHECK(is_regular(g, 5));
  CHECK(diameter(cartesian_product(complete(3), complete(3))) == 2);
  CHECK(g.label(0) == "(0,0)");
  CHECK(g.label(5) == "(1,1)");
}

TEST_CASE("direct product")
{
  Graph k22 = direct_product(complete(2), complete(2));
  CHECK(k22.size() == 2);
  CHECK_FALSE(is_connected(k22));

  Graph g = direct_product(complete(5), complete(5));
  CHECK(g.order() == 25);
  CHECK(is_regular(g, 16));
  CHECK(diameter(g) == 2);
}

TEST_CASE("product sizes")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    Graph a = ref::random_connected(2 + trial % 4, 0.5, rng);
    Graph b = ref::random_connected(2 + trial % 3, 0.6, rng);
    Graph c = cartesian_product(a, b);
    Graph d = direct_product(a, b);
    CHECK(c.order() == a.order() * b.order());
    CHECK(d.order() == a.order() * b.order());
    CHECK(c.size() == a.order() * b.size() + b.order() * a.size());
    CHECK(d.size() == 2 * a.size() * b.size());
    CHECK(symmetric_and_loop_free(c));
    CHECK(symmetric_and_loop_free(d));
  }
}

TEST_CASE("line graphs")
{
  CHECK(line_graph(complete(3)).first == complete(3));

  auto [l4, labeling] = line_graph(complete(4));
  CHECK(l4.order() == 6);
  CHECK(is_regular(l4, 4));
  CHECK(diameter(l4) == 2);
  CHECK(l4.label(0) == "0-1");
  CHECK(labeling.vertex_of({2, 3}) == 5);
  CHECK(labeling.vertex_of({3, 2}) == 5);

  for (int n = 2; n <= 8; ++n) {
    Graph l = line_graph(complete(n)).first;
    CHECK(l.order() == n * (n - 1) / 2);
    CHECK(is_regular(l, 2 * n - 4));
  }
}

TEST_CASE("line graph of K_{m,n} matches the rook graph on invariants")
{
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 4; ++n) {
      Graph l = line_graph(complete_bipartite(m, n)).first;
      Graph r = cartesian_product(complete(m), complete(n));
      CHECK(sorted_degrees(l) == sorted_degrees(r));
      CHECK(distance_distribution(l) == distance_distribution(r));
    }
}

TEST_CASE("turan graphs")
{
  Graph t = turan_graph(5, 3);
  CHECK(t.size() == 8);
  int cross = 0;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      cross += (u % 3 != v % 3) ? 1 : 0;
  CHECK(t.size() == cross);
  CHECK(turan_graph(4, 2).size() == 4);
  CHECK(sorted_degrees(turan_graph(4, 2)) == sorted_degrees(complete_bipartite(2, 2)));
  for (int n = 1; n <= 6; ++n)
    CHECK(turan_graph(n, n) == complete(n));
}

TEST_CASE("join and disjoint union")
{
  Graph k1 = complete(1);
  CHECK(join(k1, k1) == complete(2));
  Graph c4 = join(disjoint_union(k1, k1), disjoint_union(k1, k1));
  CHECK(is_regular(c4, 2));
  CHECK(girth(c4) == 4);

  Graph g = cycle(5), h = complete_bipartite(2, 3);
  CHECK(join(g, h).size() == g.size() + h.size() + g.order() * h.order());
  CHECK(disjoint_union(g, h).size() == g.size() + h.size());
  CHECK(has_universal_vertex(join(k1, petersen())));
  CHECK_FALSE(has_universal_vertex(petersen()));
}

TEST_CASE("twin duplication")
{
  Graph c = duplicate_vertex(cycle(5), 0, TwinMode::False);
  CHECK(c.order() == 6);
  CHECK(c.size() == 7);
  CHECK(c.size() == 2 * 6 - 5);
  CHECK_FALSE(c.adjacent(0, 5));
  CHECK(c.neighbors(5).members() == std::vector<int>{1, 4});
  CHECK(c.neighbors(0).minus(VertexSet(6, {5})) == c.neighbors(5));

  CHECK(duplicate_vertex(complete(4), 2, TwinMode::True) == complete(5));
}

TEST_CASE("family graphs")
{
  CHECK(c5_family(0, 0) == cycle(5));
  CHECK(c5_family(2, 0).order() == 7);
  CHECK(c5_family(2, 0).size() == 9);
  CHECK(c5_family(2, 3).order() == 10);
  CHECK(c5_family(2, 3).size() == 15);
  CHECK(g7_family(0, 0, 0).order() == 7);
  CHECK(g7_family(0, 0, 0).size() == 9);
  CHECK(g7_family(1, 1, 2).order() == 11);
  CHECK(g7_family(1, 1, 2).size() == 17);

  for (int i = 0; i <= 3; ++i)
    for (int j = 0; j <= 3; ++j) {
      Graph g = c5_family(i, j);
      CHECK(g.size() == 2 * g.order() - 5);
      CHECK(diameter(g) == 2);
      CHECK_FALSE(has_universal_vertex(g));
      for (int k = 0; k <= 3; ++k) {
        Graph h = g7_family(i, j, k);
        CHECK(h.size() == 2 * h.order() - 5);
        CHECK(diameter(h) == 2);
        CHECK_FALSE(has_universal_vertex(h));
      }
    }
}

TEST_CASE("distances")
{
  DistanceMatrix c5(cycle(5));
  CHECK(c5(0, 2) == 2);
  CHECK(c5(0, 1) == 1);
  DistanceMatrix k6(complete(6));
  for (int u = 0; u < 6; ++u)
    for (int v = 0; v < 6; ++v)
      if (u != v)
        CHECK(k6(u, v) == 1);
  Graph p = petersen();
  DistanceMatrix dp(p);
  auto m = ref::matrix_of(p);
  for (int u = 0; u < 10; ++u)
    for (int v = 0; v < 10; ++v)
      CHECK(dp.hops(u, v) == m.dist[u][v]);

  Graph split = disjoint_union(complete(2), complete(2));
  DistanceMatrix ds(split);
  CHECK_FALSE(ds(0, 2).has_value());
  CHECK_FALSE(ds.reachable(0, 3));
  CHECK_FALSE(diameter(split).has_value());
  CHECK_FALSE(is_connected(split));
}

TEST_CASE("girth of forests is infinite")
{
  CHECK_FALSE(girth(complete(1)).has_value());
  CHECK_FALSE(girth(complete(2)).has_value());
  CHECK_FALSE(girth(complete_bipartite(1, 5)).has_value());
  CHECK(girth(complete(4)) == 3);
}

TEST_CASE("girth agrees with a subgraph search")
{
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = ref::random_connected(4 + trial % 5, 0.35, rng);
    std::optional<int> expected;
    for (int k = 3; k <= g.order() && !expected; ++k)
      if (ref::has_subgraph(g, cycle(k)))
        expected = k;
    CHECK(girth(g) == expected);
  }
}

TEST_CASE("graph validation")
{
  std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph(3, loop), std::invalid_argument);
  std::vector<Edge> out{{0, 3}};
  CHECK_THROWS_AS(Graph(3, out), std::invalid_argument);
  CHECK_THROWS_AS(Graph(kMaxVertices + 1, std::span<const Edge>{}), CeilingError);
  std::vector<Edge> twice{{0, 1}, {1, 0}};
  CHECK(Graph(2, twice).size() == 1);
}

TEST_CASE("edge-list round trip")
{
  Graph p = petersen();
  std::string text = io::write_edge_list(p);
  CHECK(text.substr(0, 6) == "10 15\n");
  CHECK(io::read_edge_list(text) == p);
  CHECK(io::read_edge_list("3 2\n0 1\n1 2\n") == Graph(3, std::vector<Edge>{{0, 1}, {1, 2}}));
  CHECK_THROWS_AS(io::read_edge_list("3 2\n0 1\n"), IoError);
  CHECK_THROWS_AS(io::read_edge_list("3 1\n0 5\n"), IoError);
}

TEST_CASE("graph6 encodings")
{
  CHECK(io::write_graph6(complete(4)) == "C~");
  CHECK(io::write_graph6(cycle(5)) == "Dhc");
  CHECK(io::write_graph6(petersen()) == "IheA@GUAo");
  CHECK(io::write_graph6(complete(1)) == "@");
  CHECK(io::write_graph6(cycle(70)).substr(0, 12) == "~?@EhCGGC@?G");
  CHECK(io::write_graph6(complete(63)).substr(0, 5) == "~??~~");

  CHECK(io::read_graph6("IheA@GUAo") == petersen());
  CHECK(io::read_graph6(">>graph6<<C~") == complete(4));
  CHECK(io::read_graph6("C~\n") == complete(4));
  CHECK_THROWS_AS(io::read_graph6("C"), IoError);
  CHECK_THROWS_AS(io::read_graph6("C~~"), IoError);
}

TEST_CASE("graph6 round trip on random graphs")
{
  std::mt19937_64 rng(5);
  for (int n : {2, 7, 40, 62, 63, 64, 100}) {
    Graph g = ref::random_connected(n, 0.3, rng);
    CHECK(io::read_graph6(io::write_graph6(g)) == g);
    CHECK(io::read_edge_list(io::write_edge_list(g)) == g);
  }
}

TEST_CASE("load_graph dispatches on extension")
{
  auto dir = std::filesystem::temp_directory_path();
  auto g6 = dir / "mvis_test_petersen.g6";
  auto el = dir / "mvis_test_c5.el";
  auto bad = dir / "mvis_test.txt";
  std::ofstream(g6) << "IheA@GUAo\n";
  std::ofstream(el) << io::write_edge_list(cycle(5));
  std::ofstream(bad) << "C~\n";
  CHECK(io::load_graph(g6) == petersen());
  CHECK(io::load_graph(el) == cycle(5));
  CHECK_THROWS_AS(io::load_graph(bad), IoError);
  CHECK_THROWS_AS(io::load_graph(dir / "mvis_missing.g6"), IoError);
  std::filesystem::remove(g6);
  std::filesystem::remove(el);
  std::filesystem::remove(bad);
}
