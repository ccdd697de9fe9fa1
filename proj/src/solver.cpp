#include "mvis/solver.hpp"

#include "mvis/errors.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace mvis {

auto to_string(Strategy s) -> std::string
{
  switch (s) {
  case Strategy::Auto:
    return "auto";
  case Strategy::Descending:
    return "descending";
  case Strategy::BranchAndBound:
    return "bnb";
  }
  return "?";
}

auto parse_strategy(const std::string &name) -> Strategy
{
  if (name == "auto")
    return Strategy::Auto;
  if (name == "descending")
    return Strategy::Descending;
  if (name == "bnb" || name == "branch_and_bound")
    return Strategy::BranchAndBound;
  throw std::invalid_argument("unknown strategy '" + name + "'");
}

namespace {

using Clock = std::chrono::steady_clock;

struct TimedOut
{
};
struct Cancelled
{
};

/// Deadline and node accounting shared by all workers of one solve.
struct Control
{
  std::optional<Clock::time_point> deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> timed_out{false};

  auto check() -> void
  {
    if (timed_out.load(std::memory_order_relaxed))
      throw TimedOut{};
    if (deadline && Clock::now() >= *deadline) {
      timed_out = true;
      throw TimedOut{};
    }
  }
};

constexpr std::uint64_t kCheckInterval = 1024;

/**
 * Enumerates valid sets of one fixed size in colex order.
 *
 * Vertices are decided from n-1 down to 0, "out" before "in". A required
 * pair whose endpoints are both decided is tested against the decided-in
 * vertices only: visibility can only get worse as X grows, and the pair's
 * class no longer changes, so a failure there kills the whole subtree.
 * This holds for every variant.
 */
class SizedSearch
{
public:
  using Sink = std::function<bool(const VertexSet &)>;

  SizedSearch(const VisibilityOracle &oracle, Variant variant, int size, Control &control)
      : oracle_(oracle), variant_(variant), size_(size), n_(oracle.graph().order()), control_(control),
        in_(n_), decided_(n_)
  {
  }

  ~SizedSearch() { control_.nodes += local_nodes_; }
  SizedSearch(const SizedSearch &) = delete;
  auto operator=(const SizedSearch &) -> SizedSearch & = delete;

  /// Valid sets whose largest vertex is `top`; returns false if the sink asked to stop.
  auto run_top(int top, const Sink &sink, std::function<bool()> cancelled = {}) -> bool
  {
    sink_ = &sink;
    cancelled_ = std::move(cancelled);
    in_ = VertexSet(n_);
    decided_ = VertexSet(n_);
    required_.clear();
    count_ = 0;
    for (int v = n_ - 1; v > top; --v)
      if (!decide_out(v))
        return true;
    in_.set(top);
    ++count_;
    if (!decide_in(top))
      return true;
    return dfs(top - 1);
  }

private:
  const VisibilityOracle &oracle_;
  Variant variant_;
  int size_;
  int n_;
  Control &control_;
  const Sink *sink_ = nullptr;
  std::function<bool()> cancelled_;

  VertexSet in_;
  VertexSet decided_;
  std::vector<std::pair<int, int>> required_;
  int count_ = 0;
  std::uint64_t local_nodes_ = 0;

  auto tick() -> void
  {
    if (++local_nodes_ % kCheckInterval == 0) {
      control_.check();
      if (cancelled_ && cancelled_())
        throw Cancelled{};
    }
  }

  auto decide_out(int v) -> bool
  {
    bool ok = true;
    decided_.for_each([&](int w) {
      if (!ok)
        return;
      PairClass c = in_.test(w) ? PairClass::InOut : PairClass::OutOut;
      if (!requires_class(variant_, c))
        return;
      if (!oracle_.visible(in_, v, w))
        ok = false;
      else
        required_.emplace_back(v, w);
    });
    decided_.set(v);
    return ok;
  }

  /// `v` is already in in_.
  auto decide_in(int v) -> bool
  {
    for (auto [a, b] : required_)
      if (oracle_.on_geodesic(a, v, b) && !oracle_.visible(in_, a, b))
        return false;
    bool ok = true;
    decided_.for_each([&](int w) {
      if (!ok)
        return;
      PairClass c = in_.test(w) ? PairClass::InIn : PairClass::InOut;
      if (!requires_class(variant_, c))
        return;
      if (!oracle_.visible(in_, v, w))
        ok = false;
      else
        required_.emplace_back(v, w);
    });
    decided_.set(v);
    return ok;
  }

  auto dfs(int v) -> bool
  {
    tick();
    if (count_ == size_) {
      if (oracle_.is_valid(in_, variant_))
        return (*sink_)(in_);
      return true;
    }
    if (count_ + v + 1 < size_)
      return true;

    auto mark = required_.size();
    if (count_ + v >= size_) {
      bool ok = decide_out(v);
      bool go_on = !ok || dfs(v - 1);
      decided_.reset(v);
      required_.resize(mark);
      if (!go_on)
        return false;
    }

    in_.set(v);
    ++count_;
    bool ok = decide_in(v);
    bool go_on = !ok || dfs(v - 1);
    decided_.reset(v);
    required_.resize(mark);
    in_.reset(v);
    --count_;
    return go_on;
  }
};

/// First valid set of `size` vertices in colex order, searched in parallel over the largest vertex.
auto first_of_size(const VisibilityOracle &oracle, Variant variant, int size, int threads, Control &control)
    -> std::optional<VertexSet>
{
  int n = oracle.graph().order();
  if (size == 0) {
    VertexSet empty(n);
    if (oracle.is_valid(empty, variant))
      return empty;
    return std::nullopt;
  }

  std::atomic<int> next_top{size - 1};
  std::atomic<int> best_top{n};
  std::mutex lock;
  std::optional<VertexSet> best;
  std::exception_ptr failure;

  auto worker = [&] {
    try {
      SizedSearch search(oracle, variant, size, control);
      while (true) {
        int top = next_top.fetch_add(1);
        if (top >= n || top > best_top.load())
          return;
        bool found = false;
        SizedSearch::Sink sink = [&](const VertexSet &x) {
          std::lock_guard guard(lock);
          if (top < best_top.load()) {
            best_top = top;
            best = x;
          }
          found = true;
          return false;
        };
        try {
          search.run_top(top, sink, [&] { return best_top.load() < top; });
        } catch (const Cancelled &) {
        }
        if (found)
          return;
      }
    } catch (...) {
      std::lock_guard guard(lock);
      if (!failure)
        failure = std::current_exception();
    }
  };

  int workers = std::max(1, std::min(threads, n));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  if (failure)
    std::rethrow_exception(failure);
  return best;
}

/**
 * Maximum valid set for variants whose valid sets are closed under subsets
 * (Mutual, Outer, Total). Candidates are the vertices whose addition keeps
 * the current set valid; any larger valid superset must pass through them.
 */
class HereditarySearch
{
public:
  HereditarySearch(const VisibilityOracle &oracle, Variant variant, std::atomic<int> &best, Control &control)
      : oracle_(oracle), variant_(variant), n_(oracle.graph().order()), best_(best), control_(control),
        witness_(n_)
  {
  }
  ~HereditarySearch() { control_.nodes += local_nodes_; }
  HereditarySearch(const HereditarySearch &) = delete;
  auto operator=(const HereditarySearch &) -> HereditarySearch & = delete;

  /// X + d is valid, given that X is valid and d is not in X.
  auto extends(const VertexSet &x, int d) const -> bool
  {
    VertexSet grown = x;
    grown.set(d);
    for (int a = 0; a < n_; ++a)
      for (int b = a + 1; b < n_; ++b) {
        if (a != d && b != d && !oracle_.on_geodesic(a, d, b))
          continue;
        bool ia = grown.test(a), ib = grown.test(b);
        PairClass c = ia && ib ? PairClass::InIn : (ia || ib ? PairClass::InOut : PairClass::OutOut);
        if (requires_class(variant_, c) && !oracle_.visible(grown, a, b))
          return false;
      }
    return true;
  }

  auto candidates(const VertexSet &x, const VertexSet &pool) const -> VertexSet
  {
    VertexSet out(n_);
    pool.for_each([&](int d) {
      if (extends(x, d))
        out.set(d);
    });
    return out;
  }

  auto expand(VertexSet &x, int size, VertexSet cand) -> void
  {
    if (++local_nodes_ % kCheckInterval == 0)
      control_.check();
    if (size > witness_size_) {
      witness_size_ = size;
      witness_ = x;
      int seen = best_.load();
      while (size > seen && !best_.compare_exchange_weak(seen, size)) {
      }
    }
    while (cand.any()) {
      if (size + cand.count() <= best_.load())
        return;
      int c = cand.first();
      cand.reset(c);
      x.set(c);
      expand(x, size + 1, candidates(x, cand));
      x.reset(c);
    }
  }

  auto witness() const -> const VertexSet & { return witness_; }
  auto witness_size() const -> int { return witness_size_; }

private:
  const VisibilityOracle &oracle_;
  Variant variant_;
  int n_;
  std::atomic<int> &best_;
  Control &control_;
  VertexSet witness_;
  int witness_size_ = 0;
  std::uint64_t local_nodes_ = 0;
};

/// Backtracking search for an automorphism taking a to b that preserves the classes `cls`.
/// Gives up, answering false, after a fixed number of steps.
auto maps_by_automorphism(const Graph &g, const std::vector<int> &cls, int a, int b) -> bool
{
  int n = g.order();
  if (cls[a] != cls[b])
    return false;
  std::vector<int> order{a};
  VertexSet seen(n, {a});
  for (std::size_t i = 0; i < order.size() || static_cast<int>(order.size()) < n; ++i) {
    if (i == order.size()) {
      int v = seen.complement().first();
      seen.set(v);
      order.push_back(v);
    }
    g.neighbors(order[i]).minus(seen).for_each([&](int w) {
      seen.set(w);
      order.push_back(w);
    });
  }
  std::vector<int> image(n, -1);
  VertexSet used(n);
  long long steps = 0;
  constexpr long long kStepLimit = 200000;
  std::function<bool(int)> extend = [&](int depth) -> bool {
    if (depth == n)
      return true;
    if (++steps > kStepLimit)
      return false;
    int u = order[depth];
    auto fits = [&](int c) {
      if (used.test(c) || cls[c] != cls[u])
        return false;
      for (int i = 0; i < depth; ++i)
        if (g.adjacent(u, order[i]) != g.adjacent(c, image[order[i]]))
          return false;
      return true;
    };
    auto place = [&](int c) {
      image[u] = c;
      used.set(c);
      if (extend(depth + 1))
        return true;
      used.reset(c);
      image[u] = -1;
      return false;
    };
    if (depth == 0)
      return fits(b) && place(b);
    for (int c = 0; c < n; ++c)
      if (fits(c) && place(c))
        return true;
    return false;
  };
  return extend(0);
}

struct RootBranch
{
  int vertex;
  VertexSet pool;
};

auto root_branches(const Graph &g, Symmetry symmetry) -> std::vector<RootBranch>
{
  int n = g.order();
  std::vector<RootBranch> out;
  if (symmetry == Symmetry::None) {
    for (int c = 0; c < n; ++c) {
      VertexSet pool(n);
      for (int d = c + 1; d < n; ++d)
        pool.set(d);
      out.push_back({c, pool});
    }
    return out;
  }
  // Every automorphism preserves the proxy classes. A maximum set whose first class is k can be
  // moved onto the representative of k when its member there lies in the representative's orbit;
  // members not shown to be in that orbit keep a root of their own.
  auto cls = orbit_proxy(g);
  int classes = n == 0 ? 0 : *std::max_element(cls.begin(), cls.end()) + 1;
  VertexSet excluded(n);
  for (int k = 0; k < classes; ++k) {
    int rep = static_cast<int>(std::find(cls.begin(), cls.end(), k) - cls.begin());
    VertexSet open = VertexSet::full(n).minus(excluded);
    for (int v = 0; v < n; ++v) {
      if (cls[v] != k || (v != rep && maps_by_automorphism(g, cls, rep, v)))
        continue;
      VertexSet pool = open;
      pool.reset(v);
      out.push_back({v, pool});
    }
    for (int v = 0; v < n; ++v)
      if (cls[v] == k)
        excluded.set(v);
  }
  return out;
}

auto branch_and_bound(const VisibilityOracle &oracle, const SolveOptions &opts, Control &control)
    -> std::pair<int, VertexSet>
{
  const Graph &g = oracle.graph();
  int n = g.order();
  std::atomic<int> best{0};
  auto branches = root_branches(g, opts.symmetry);
  std::atomic<std::size_t> next{0};
  std::mutex lock;
  VertexSet best_set(n);
  int best_size = 0;
  std::exception_ptr failure;

  auto worker = [&] {
    HereditarySearch search(oracle, opts.variant, best, control);
    try {
      while (true) {
        std::size_t i = next.fetch_add(1);
        if (i >= branches.size())
          break;
        VertexSet x(n);
        if (!search.extends(x, branches[i].vertex))
          continue;
        x.set(branches[i].vertex);
        search.expand(x, 1, search.candidates(x, branches[i].pool));
      }
    } catch (...) {
      std::lock_guard guard(lock);
      if (!failure)
        failure = std::current_exception();
    }
    std::lock_guard guard(lock);
    if (search.witness_size() > best_size) {
      best_size = search.witness_size();
      best_set = search.witness();
    }
  };

  int workers = std::max(1, std::min<int>(opts.threads, static_cast<int>(branches.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  if (failure) {
    try {
      std::rethrow_exception(failure);
    } catch (const TimedOut &) {
      return {best_size, best_set};
    }
  }
  return {best_size, best_set};
}

auto check_solvable(const Graph &g, int ceiling) -> void
{
  if (g.order() > ceiling)
    throw CeilingError("graph order " + std::to_string(g.order()) + " exceeds solver ceiling " +
                       std::to_string(ceiling));
}

} // namespace

auto orbit_proxy(const Graph &g) -> std::vector<int>
{
  int n = g.order();
  std::vector<int> colour(n);
  for (int v = 0; v < n; ++v)
    colour[v] = g.degree(v);
  for (int round = 0; round < 2; ++round) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    std::vector<std::pair<int, std::vector<int>>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> around;
      g.neighbors(v).for_each([&](int w) { around.push_back(colour[w]); });
      std::sort(around.begin(), around.end());
      keys[v] = {colour[v], std::move(around)};
    }
    for (int v = 0; v < n; ++v)
      colour[v] = ids.emplace(keys[v], static_cast<int>(ids.size())).first->second;
  }
  // Renumber by first occurrence.
  std::map<int, int> dense;
  for (int v = 0; v < n; ++v)
    colour[v] = dense.emplace(colour[v], static_cast<int>(dense.size())).first->second;
  return colour;
}

auto max_visibility(const Graph &g, const SolveOptions &opts) -> SolveResult
{
  check_solvable(g, opts.ceiling);
  VisibilityOracle oracle(g);
  int n = g.order();

  Control control;
  if (opts.time_budget) {
    if (opts.time_budget->count() <= 0)
      throw std::invalid_argument("time budget must be positive");
    control.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(*opts.time_budget);
  }

  Strategy strategy = opts.strategy;
  if (strategy == Strategy::Auto)
    strategy = opts.variant == Variant::Dual ? Strategy::Descending : Strategy::BranchAndBound;
  if (strategy == Strategy::BranchAndBound && opts.variant == Variant::Dual)
    throw std::invalid_argument("branch_and_bound is unsound for the dual variant");

  SolveResult result;
  result.variant = opts.variant;
  result.witness = VertexSet(n);

  auto fallback = [&] {
    result.exact = false;
    VertexSet greedy = greedy_lower_bound(g, opts.variant);
    if (greedy.count() > result.value) {
      result.value = greedy.count();
      result.witness = greedy;
    }
  };

  try {
    std::optional<VertexSet> found;
    if (strategy == Strategy::BranchAndBound) {
      auto [size, set] = branch_and_bound(oracle, opts, control);
      if (control.timed_out) {
        result.value = size;
        result.witness = set;
        fallback();
      } else {
        found = first_of_size(oracle, opts.variant, size, opts.threads, control);
        if (!found)
          throw std::logic_error("branch-and-bound value has no witness of that size");
      }
    } else {
      for (int k = n; k >= 0 && !found; --k)
        found = first_of_size(oracle, opts.variant, k, opts.threads, control);
    }
    if (found) {
      result.value = found->count();
      result.witness = *found;
    }
  } catch (const TimedOut &) {
    fallback();
  }
  result.nodes = control.nodes.load();

  auto report = oracle.verify(result.witness, opts.variant);
  if (!report.valid)
    throw std::logic_error("solver produced an invalid witness");
  return result;
}

auto greedy_lower_bound(const Graph &g, Variant variant) -> VertexSet
{
  VisibilityOracle oracle(g);
  int n = g.order();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v)
    order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
  VertexSet x(n);
  for (int v : order) {
    x.set(v);
    if (!oracle.is_valid(x, variant))
      x.reset(v);
  }
  return x;
}

auto valid_sets_of_size(const VisibilityOracle &oracle, Variant variant, int size, int cap)
    -> std::vector<VertexSet>
{
  std::vector<VertexSet> out;
  int n = oracle.graph().order();
  if (cap <= 0 || size < 0 || size > n)
    return out;
  if (size == 0) {
    VertexSet empty(n);
    if (oracle.is_valid(empty, variant))
      out.push_back(empty);
    return out;
  }
  Control control;
  SizedSearch search(oracle, variant, size, control);
  SizedSearch::Sink sink = [&](const VertexSet &x) {
    out.push_back(x);
    return static_cast<int>(out.size()) < cap;
  };
  for (int top = size - 1; top < n; ++top)
    if (!search.run_top(top, sink))
      break;
  return out;
}

auto all_max_witnesses(const Graph &g, Variant variant, int cap) -> std::vector<VertexSet>
{
  SolveOptions opts;
  opts.variant = variant;
  auto solved = max_visibility(g, opts);
  VisibilityOracle oracle(g);
  return valid_sets_of_size(oracle, variant, solved.value, cap);
}

} // namespace mvis
