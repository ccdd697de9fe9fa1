#pragma once

#include "mvis/graph.hpp"

#include <utility>

namespace mvis {

// Graph families. Every generator throws std::invalid_argument when its
// parameters are outside the family's domain.

auto complete(int n) -> Graph;
/// Parts {0..m-1} and {m..m+n-1}.
auto complete_bipartite(int m, int n) -> Graph;
auto cycle(int n) -> Graph;
auto petersen() -> Graph;
/// Balanced complete r-partite graph; vertex v lies in part v mod r.
auto turan_graph(int n, int r) -> Graph;

/// Vertex (g,h) has index g * n(H) + h and label "(g,h)".
auto cartesian_product(const Graph &g, const Graph &h) -> Graph;
auto direct_product(const Graph &g, const Graph &h) -> Graph;

/// Vertices of H are shifted by n(G).
auto disjoint_union(const Graph &g, const Graph &h) -> Graph;
auto join(const Graph &g, const Graph &h) -> Graph;

/// One vertex per edge of G, in G.edges() order, labeled "u-v".
auto line_graph(const Graph &g) -> std::pair<Graph, EdgeLabeling>;

enum class TwinMode
{
  False,
  True,
};

/// Appends a twin of v as vertex n(G).
auto duplicate_vertex(const Graph &g, int v, TwinMode mode) -> Graph;

/// Vertex ids inside c5_family / g7_family graphs.
struct FamilyLayout
{
  /// Base vertices whose false twins are added, in parameter order.
  std::vector<int> duplicated;
};

/// C5 on 0..4 with vertex 0 duplicated i times and vertex 2 duplicated j times (false twins).
auto c5_family(int i, int j) -> Graph;
auto c5_layout() -> FamilyLayout;

/// G7: triangle 0,1,2; pendants 3,4,5 on 0,1,2; apex 6 joined to 3,4,5.
/// Vertices 3, 4, 5 are duplicated i, j, k times (false twins).
auto g7_family(int i, int j, int k) -> Graph;
auto g7_layout() -> FamilyLayout;

} // namespace mvis
