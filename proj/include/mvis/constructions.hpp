#pragma once

#include "mvis/genlang.hpp"
#include "mvis/visibility.hpp"

#include <map>
#include <vector>

namespace mvis {

// Closed-form extremal sets. Every builder verifies its output before
// returning and throws std::logic_error if verification fails.

/// Row 0 plus column 0 of K_n x K_m (Cartesian); n + m - 1 vertices, dual.
auto dual_set_cartesian_cliques(int n, int m) -> VertexSet;
/// Row 0 and column 0 without (0,0); n + m - 2 vertices, outer.
auto outer_set_cartesian_cliques(int n, int m) -> VertexSet;
/// All of K_n x K_m (direct) except (0,0),(1,1),(2,2),(3,3); total.
auto total_set_direct_cliques(int n, int m) -> VertexSet;

/// Edges of T(n,3) with vertex v in part v mod 3; a mutual set of L(K_n).
auto mu_set_line_complete(int n) -> std::vector<Edge>;
/// Star at vertex 0 plus the matching {1,2},{3,4},...; a total set of L(K_n).
auto total_set_line_complete(int n) -> std::vector<Edge>;
/// The 16-edge total set of L(K_10) on vertices 0..9.
auto total_witness_lk10() -> std::vector<Edge>;

/// Vertices of L(K_n) (lexicographic edge order) selected by an edge set.
auto line_complete_vertices(int n, const std::vector<Edge> &f) -> VertexSet;

/// Witnesses for a connected cograph, sized by its visibility numbers.
/// Throws std::invalid_argument for non-cographs.
auto cograph_witnesses(const GraphExpr &expr) -> std::map<Variant, VertexSet>;
auto cograph_witnesses(const Graph &g) -> std::map<Variant, VertexSet>;

/// Witnesses on c5_family(i,j): an exact base witness on C5 plus every duplicate.
auto c5_family_witnesses(int i, int j) -> std::map<Variant, VertexSet>;
/// Witnesses on g7_family(i,j,k), built the same way from G7.
auto g7_family_witnesses(int i, int j, int k) -> std::map<Variant, VertexSet>;

} // namespace mvis
