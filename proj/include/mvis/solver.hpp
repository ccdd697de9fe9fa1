#pragma once

#include "mvis/visibility.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace mvis {

enum class Strategy
{
  Auto,
  Descending,
  BranchAndBound,
};

enum class Symmetry
{
  None,
  /// Root-level branching on one vertex per automorphism orbit. Only applied by
  /// branch-and-bound. Classes come from two rounds of degree refinement; a
  /// member is folded into its class representative only after an explicit
  /// automorphism between them is found, so the value stays exact.
  VertexOrbits,
};

auto to_string(Strategy s) -> std::string;
auto parse_strategy(const std::string &name) -> Strategy;

inline constexpr int kDefaultSolverCeiling = 36;

struct SolveOptions
{
  Variant variant = Variant::Mutual;
  Strategy strategy = Strategy::Auto;
  int threads = 1;
  std::optional<std::chrono::duration<double>> time_budget;
  Symmetry symmetry = Symmetry::None;
  int ceiling = kDefaultSolverCeiling;
};

struct SolveResult
{
  Variant variant = Variant::Mutual;
  int value = 0;
  VertexSet witness;
  /// False only when the time budget ran out; value is then a certified lower bound.
  bool exact = true;
  std::uint64_t nodes = 0;
};

/**
 * Exact visibility number with a witness.
 *
 * The witness is the colexicographically first valid set of maximum size,
 * independent of strategy and thread count. Throws std::invalid_argument on
 * disconnected graphs and CeilingError above `opts.ceiling` vertices.
 */
auto max_visibility(const Graph &g, const SolveOptions &opts) -> SolveResult;

/// Valid set grown by inserting vertices in non-increasing degree order.
auto greedy_lower_bound(const Graph &g, Variant variant) -> VertexSet;

/// Up to `cap` distinct maximum-size witnesses in colex order.
auto all_max_witnesses(const Graph &g, Variant variant, int cap) -> std::vector<VertexSet>;

/// Up to `cap` valid sets of exactly `size` vertices in colex order.
auto valid_sets_of_size(const VisibilityOracle &oracle, Variant variant, int size, int cap)
    -> std::vector<VertexSet>;

/// Vertex classes after two rounds of degree refinement; class ids are dense, ordered by first vertex.
auto orbit_proxy(const Graph &g) -> std::vector<int>;

} // namespace mvis
