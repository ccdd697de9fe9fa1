#pragma once

#include "mvis/graph.hpp"

#include <string>
#include <vector>

namespace mvis {

/**
 * Forbidden 4-vertex structures.
 *
 * C4, K4 and K4Minus are forbidden as subgraphs. K4C4 forbids K4 and an
 * induced C4 (four vertices spanning exactly a 4-cycle); it is not
 * monotone, since adding a chord to an induced C4 removes it.
 */
enum class ForbiddenPattern
{
  C4,
  K4,
  K4Minus,
  K4C4,
};

auto to_string(ForbiddenPattern p) -> std::string;
/// "c4", "k4", "k4minus", "k4c4".
auto parse_pattern(const std::string &name) -> ForbiddenPattern;

struct ExtremalResult
{
  int max_edges = 0;
  Graph witness;
  bool certified = false;
};

/// Default ceilings for ex_forbidden.
inline constexpr int kSinglePatternCeiling = 8;
inline constexpr int kPairPatternCeiling = 10;

/**
 * Largest edge count of an n-vertex graph avoiding `pattern`.
 *
 * Edges are decided in colex order; each 4-vertex set is tested as soon as
 * all six of its pairs are decided. The bound uses the values for smaller
 * orders, computed on the way. Throws CeilingError above `ceiling`
 * (defaults per pattern when negative).
 */
auto ex_forbidden(int n, ForbiddenPattern pattern, int ceiling = -1, int threads = 1) -> ExtremalResult;

/// Direct containment test via common neighbourhoods.
auto contains_pattern(const Graph &g, ForbiddenPattern pattern) -> bool;

/// Whether a 4-vertex graph, given as a 6-bit mask over pairs
/// (01,02,03,12,13,23), is forbidden.
auto quad_forbidden(ForbiddenPattern pattern, unsigned mask) -> bool;

/// Edge count of the Turán graph T(n, r).
auto turan_edge_count(int n, int r) -> long long;

struct ZarankiewiczResult
{
  int max_ones = 0;
  /// Rows as '0'/'1' strings.
  std::vector<std::string> matrix;
  bool certified = false;
};

inline constexpr int kZarankiewiczMin = 2;
inline constexpr int kZarankiewiczMax = 6;

/// Maximum number of ones in an m x n 0/1 matrix without an all-ones 2x2 submatrix.
auto zarankiewicz(int m, int n) -> ZarankiewiczResult;

} // namespace mvis
