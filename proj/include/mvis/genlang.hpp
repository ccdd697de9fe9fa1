#pragma once

#include "mvis/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace mvis {

/**
 * Graph-construction expressions.
 *
 *   expr := term { "+" term }      join, left-associative
 *   term := atom { "u" atom }      disjoint union, left-associative
 *   atom := K(n) | K(m,n) | C(n) | petersen | T(n,r) | c5(i,j) | g7(i,j,k)
 *         | line(expr) | cart(expr,expr) | dir(expr,expr) | file(path) | (expr)
 *
 * Union binds tighter than join, so "K(1) u K(2) + H" is (K(1) u K(2)) + H.
 */
struct GraphExpr
{
  enum class Kind
  {
    Complete,
    CompleteBipartite,
    Cycle,
    Petersen,
    Turan,
    C5Family,
    G7Family,
    Line,
    Cartesian,
    Direct,
    Join,
    Union,
    File,
  };

  Kind kind = Kind::Petersen;
  std::vector<int> params;
  std::vector<GraphExpr> children;
  std::string path;
  /// Byte offset of the node in the source text.
  std::size_t offset = 0;

  /// Structural equality; source offsets are ignored.
  friend auto operator==(const GraphExpr &a, const GraphExpr &b) -> bool
  {
    return a.kind == b.kind && a.params == b.params && a.children == b.children && a.path == b.path;
  }
};

/// Throws ParseError with the byte offset and the expected tokens.
auto parse_spec(std::string_view text) -> GraphExpr;

/// Canonical text; parse_spec(print(e)) == e.
auto print(const GraphExpr &expr) -> std::string;

/// Deterministic: left operands take the low vertex indices.
/// Throws EvalError (with node offset) when a generator rejects its input.
auto eval(const GraphExpr &expr) -> Graph;

inline auto eval(std::string_view text) -> Graph { return eval(parse_spec(text)); }

} // namespace mvis
