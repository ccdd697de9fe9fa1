#pragma once

#include "mvis/extremal.hpp"
#include "mvis/solver.hpp"

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace mvis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitAudit = 4;

using Json = nlohmann::json;

auto to_json(const SolveResult &r) -> Json;
auto to_json(const VisibilityReport &r) -> Json;
auto to_json(const ExtremalResult &r) -> Json;
auto to_json(const ZarankiewiczResult &r) -> Json;

/// A --graph argument: an existing .g6/.el file, otherwise an expression.
auto load_graph_arg(const std::string &text) -> Graph;

/// Vertex list of indices and/or labels, separated by commas or spaces;
/// "@path" reads the list from a file.
auto parse_vertex_set(const Graph &g, const std::string &text) -> VertexSet;

/// Report table plus whether every row agreed.
struct Report
{
  std::string suite;
  std::vector<Json> rows;
  bool agree = true;
};

struct ReportOptions
{
  std::uint64_t seed = 0;
  int count = 200;
  int max_n = 11;
  int max_sum = 3;
  int threads = 1;
};

/// Suites: hamming, direct, line-complete, cographs, family-g.
auto build_report(const std::string &suite, const ReportOptions &opts) -> Report;

/// Full command line without the program name; returns the exit code.
auto run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) -> int;

} // namespace mvis::cli
