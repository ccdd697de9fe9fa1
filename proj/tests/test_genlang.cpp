#include "mvis/errors.hpp"
#include "mvis/generators.hpp"
#include "mvis/genlang.hpp"
#include "mvis/io.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace mvis;
using Kind = GraphExpr::Kind;

namespace {

auto leaf(Kind kind, std::vector<int> params = {}) -> GraphExpr
{
  GraphExpr e;
  e.kind = kind;
  e.params = std::move(params);
  return e;
}

auto node(Kind kind, GraphExpr a, GraphExpr b) -> GraphExpr
{
  GraphExpr e;
  e.kind = kind;
  e.children = {std::move(a), std::move(b)};
  return e;
}

auto random_expr(std::mt19937_64 &rng, int depth) -> GraphExpr
{
  std::uniform_int_distribution<int> small(1, 4);
  int pick = std::uniform_int_distribution<int>(0, depth > 0 ? 11 : 6)(rng);
  switch (pick) {
  case 0:
    return leaf(Kind::Complete, {small(rng)});
  case 1:
    return leaf(Kind::CompleteBipartite, {small(rng), small(rng)});
  case 2:
    return leaf(Kind::Cycle, {small(rng) + 2});
  case 3:
    return leaf(Kind::Petersen);
  case 4:
    return leaf(Kind::Turan, {small(rng) + 2, small(rng)});
  case 5:
    return leaf(Kind::C5Family, {small(rng) - 1, small(rng) - 1});
  case 6:
    return leaf(Kind::G7Family, {small(rng) - 1, small(rng) - 1, small(rng) - 1});
  case 7: {
    GraphExpr e;
    e.kind = Kind::Line;
    e.children = {random_expr(rng, depth - 1)};
    return e;
  }
  case 8:
    return node(Kind::Cartesian, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  case 9:
    return node(Kind::Direct, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  case 10:
    return node(Kind::Join, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  default:
    return node(Kind::Union, random_expr(rng, depth - 1), random_expr(rng, depth - 1));
  }
}

} // namespace

TEST_CASE("grammar examples")
{
  CHECK(parse_spec("cart(K(3),K(4))") ==
        node(Kind::Cartesian, leaf(Kind::Complete, {3}), leaf(Kind::Complete, {4})));

  auto big = parse_spec("(K(1) u K(2)) + (K(1) u K(1))");
  CHECK(big == node(Kind::Join, node(Kind::Union, leaf(Kind::Complete, {1}), leaf(Kind::Complete, {2})),
                    node(Kind::Union, leaf(Kind::Complete, {1}), leaf(Kind::Complete, {1}))));

  CHECK(parse_spec("petersen") == leaf(Kind::Petersen));
  CHECK(parse_spec("  K( 2 , 3 ) ") == leaf(Kind::CompleteBipartite, {2, 3}));
  CHECK(parse_spec("g7(1,1,2)") == leaf(Kind::G7Family, {1, 1, 2}));
}

TEST_CASE("precedence and associativity")
{
  auto k = [](int n) { return leaf(Kind::Complete, {n}); };
  // Union binds tighter than join.
  CHECK(parse_spec("K(1) u K(2) + K(3)") == node(Kind::Join, node(Kind::Union, k(1), k(2)), k(3)));
  CHECK(parse_spec("K(1) + K(2) u K(3)") == node(Kind::Join, k(1), node(Kind::Union, k(2), k(3))));
  CHECK(parse_spec("K(1) + K(2) + K(3)") == node(Kind::Join, node(Kind::Join, k(1), k(2)), k(3)));
  CHECK(parse_spec("K(1) u K(2) u K(3)") == node(Kind::Union, node(Kind::Union, k(1), k(2)), k(3)));
}

TEST_CASE("parse errors carry offset and expected tokens")
{
  try {
    parse_spec("K(3,");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.offset() == 4);
    CHECK(std::find(e.expected().begin(), e.expected().end(), "integer") != e.expected().end());
  }
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("K(3))"), ParseError);
  CHECK_THROWS_AS(parse_spec("cart(K(3))"), ParseError);
  CHECK_THROWS_AS(parse_spec("Q(3)"), ParseError);
  CHECK_THROWS_AS(parse_spec("K(-1)"), ParseError);
  CHECK_THROWS_AS(parse_spec("K(0)"), ParseError);
  CHECK_THROWS_AS(parse_spec("C(2)"), ParseError);
  CHECK_THROWS_AS(parse_spec("K(99999999999)"), ParseError);
  CHECK_THROWS_AS(parse_spec("file("), ParseError);

  try {
    parse_spec("K(1) + + K(2)");
    FAIL("expected a parse error");
  } catch (const ParseError &e) {
    CHECK(e.offset() == 7);
  }
}

TEST_CASE("evaluation")
{
  Graph l4 = eval("line(K(4))");
  CHECK(l4.order() == 6);
  for (int v = 0; v < 6; ++v)
    CHECK(l4.degree(v) == 4);
  CHECK(eval("dir(K(5),K(5))").order() == 25);
  Graph c = eval("c5(2,3)");
  CHECK(c.order() == 10);
  CHECK(c.size() == 15);
  CHECK(eval("K(2,2)") == complete_bipartite(2, 2));
  CHECK(eval("T(6,3)") == turan_graph(6, 3));
  CHECK(eval("(K(1) u K(2)) + (K(1) u K(1))").size() == 1 + 0 + 3 * 2);
}

TEST_CASE("evaluation is deterministic, left operand first")
{
  Graph g = eval("K(2) u C(3)");
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(2, 3));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(eval("cart(C(4),K(3))") == eval("cart(C(4),K(3))"));
}

TEST_CASE("evaluation errors")
{
  try {
    eval("K(2) u line(K(1))");
    FAIL("expected an evaluation error");
  } catch (const EvalError &e) {
    CHECK(e.offset() == 7);
  }
  CHECK_THROWS_AS(eval("file(definitely_missing.g6)"), IoError);
  CHECK_THROWS_AS(eval("cart(K(30),K(30))"), CeilingError);
}

TEST_CASE("file atoms")
{
  auto path = std::filesystem::temp_directory_path() / "mvis_genlang_c5.g6";
  std::ofstream(path) << io::write_graph6(cycle(5)) << "\n";
  Graph g = eval("file(" + path.string() + ") + K(1)");
  CHECK(g.order() == 6);
  CHECK(g.size() == 10);
  std::filesystem::remove(path);
}

TEST_CASE("print round trip")
{
  for (const char *text : {"K(3)", "K(1) u K(2) + K(3)", "K(1) + (K(2) + K(3))", "(K(1) + K(2)) u K(3)",
                           "line(cart(K(2),C(4)))", "dir(petersen,T(5,2))", "g7(0,1,2) u c5(1,0)"}) {
    auto e = parse_spec(text);
    CHECK(parse_spec(print(e)) == e);
  }
  CHECK(print(parse_spec("(K(1) u K(2)) + K(3)")) == "K(1) u K(2) + K(3)");

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    auto e = random_expr(rng, 3);
    CHECK(parse_spec(print(e)) == e);
  }
}
