#pragma once

#include "mvis/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mvis {

enum class Variant
{
  Mutual,
  Outer,
  Dual,
  Total,
};

inline constexpr Variant kAllVariants[] = {Variant::Mutual, Variant::Outer, Variant::Dual, Variant::Total};

auto to_string(Variant v) -> std::string;
/// Accepts "mu"/"mutual", "outer", "dual", "total". Throws std::invalid_argument otherwise.
auto parse_variant(const std::string &name) -> Variant;

/// Which side of X the two endpoints of a vertex pair lie on.
enum class PairClass
{
  InIn,
  InOut,
  OutOut,
};

auto to_string(PairClass c) -> std::string;

/// Whether `variant` requires pairs of class `c` to be X-visible.
constexpr auto requires_class(Variant variant, PairClass c) -> bool
{
  switch (variant) {
  case Variant::Mutual:
    return c == PairClass::InIn;
  case Variant::Outer:
    return c != PairClass::OutOut;
  case Variant::Dual:
    return c != PairClass::InOut;
  case Variant::Total:
    return true;
  }
  return false;
}

struct VisibilityReport
{
  bool valid = true;
  std::optional<std::pair<int, int>> failing_pair;
  std::optional<PairClass> pair_class;
};

/**
 * Read-only view of a connected graph prepared for visibility queries.
 *
 * Holds the distance matrix. Queries on diameter-2 graphs use the
 * common-neighbour test; other graphs use a BFS restricted to the
 * allowed vertex set.
 */
class VisibilityOracle
{
public:
  /// Throws std::invalid_argument for disconnected graphs.
  explicit VisibilityOracle(const Graph &g);

  auto graph() const -> const Graph & { return *g_; }
  auto distances() const -> const DistanceMatrix & { return d_; }
  auto diameter_two() const -> bool { return diameter_ <= 2; }

  /// Some shortest u,v-path has no interior vertex in X. Requires u != v.
  auto visible(const VertexSet &x, int u, int v) const -> bool
  {
    if (g_->adjacent(u, v))
      return true;
    if (diameter_ <= 2)
      return g_->neighbors(u).intersects_outside(g_->neighbors(v), x);
    return visible_bfs(x, u, v);
  }

  /// Reference path: BFS inside (V \ X) + {u, v}, compared with d(u, v).
  auto visible_bfs(const VertexSet &x, int u, int v) const -> bool;
  /// Diameter-2 path: common neighbour outside X. Only meaningful when d(u, v) <= 2.
  auto visible_common_neighbor(const VertexSet &x, int u, int v) const -> bool;

  /// w lies on some shortest u,v-path as an interior vertex.
  auto on_geodesic(int u, int w, int v) const -> bool
  {
    return w != u && w != v && d_.hops(u, w) + d_.hops(w, v) == d_.hops(u, v);
  }

  /// Lexicographically first required pair that is not X-visible, if any.
  auto verify(const VertexSet &x, Variant variant) const -> VisibilityReport;
  auto is_valid(const VertexSet &x, Variant variant) const -> bool { return verify(x, variant).valid; }

private:
  const Graph *g_;
  DistanceMatrix d_;
  int diameter_ = 0;
};

/// Validates u != v and range, then answers the visibility question for X.
auto x_visible(const Graph &g, const DistanceMatrix &d, const VertexSet &x, int u, int v) -> bool;

/// The pair family of `variant` for X over [0, n): unordered pairs (u < v), lexicographic.
auto required_pairs(Variant variant, const VertexSet &x, int n) -> std::vector<std::pair<int, int>>;

/// Throws std::invalid_argument for disconnected graphs.
auto verify(const Graph &g, const VertexSet &x, Variant variant) -> VisibilityReport;

/**
 * Visibility of S_F in L(K_n), decided on K_n itself.
 *
 * Two disjoint edges uv, u'v' of K_n are at distance 2 in L(K_n), and are
 * S_F-visible iff one of the four cross edges uu', uv', vu', vv' is outside
 * F. Incident edges are adjacent in L(K_n). The failing pair, if any, is
 * reported as indices into the lexicographic edge list of K_n.
 */
auto verify_line_complete(int n, std::span<const Edge> f, Variant variant) -> VisibilityReport;

auto is_independent(const Graph &g, const VertexSet &x) -> bool;

} // namespace mvis
