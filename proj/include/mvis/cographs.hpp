#pragma once

#include "mvis/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>

namespace mvis {

/// G = (K1 u K_t) + H with `apex` the K1 vertex.
struct BigMuDecomposition
{
  int apex = -1;
  VertexSet clique;
  VertexSet h;

  auto t() const -> int { return clique.count(); }
};

/// No induced path on four vertices.
auto is_cograph(const Graph &g) -> bool;

/// Smallest v adjacent to every u with deg_{G-v}(u) < n - 2.
auto find_enabling_vertex(const Graph &g) -> std::optional<int>;

/// Decomposition around the first enabling vertex; H = N(v), K_t = V \ N[v].
auto big_mu_decompose(const Graph &g) -> std::optional<BigMuDecomposition>;

struct VisibilityNumbers
{
  int total = 0;
  int outer = 0;
  int dual = 0;
  int mutual = 0;

  friend auto operator==(const VisibilityNumbers &, const VisibilityNumbers &) -> bool = default;
};

/**
 * All four numbers of a connected cograph.
 *
 * Big-mu cographs without a universal vertex give (n-2, n-2, n-1, n-1).
 * Otherwise the four numbers coincide and the common value is solved
 * exactly. Throws std::invalid_argument for non-cographs or disconnected input.
 */
auto cograph_visibility_numbers(const Graph &g) -> VisibilityNumbers;

/// True when G lies in the regime where mu exceeds mu_t.
auto cograph_split_regime(const Graph &g) -> bool;

/// Random connected cograph on `n` vertices from a uniform binary tree shape
/// with independent union/join labels; disconnected draws are rejected.
auto random_connected_cograph(int n, std::mt19937_64 &rng) -> Graph;

} // namespace mvis
