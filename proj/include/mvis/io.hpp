#pragma once

#include "mvis/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mvis::io {

/// "n m" header followed by m lines "u v" with 0-based indices.
auto write_edge_list(const Graph &g) -> std::string;
auto read_edge_list(std::string_view text) -> Graph;

/// graph6 encoding (no header, no trailing newline). Labels are dropped.
auto write_graph6(const Graph &g) -> std::string;
/// Accepts an optional ">>graph6<<" header and trailing whitespace.
auto read_graph6(std::string_view text) -> Graph;

/// Dispatches on extension: .el for edge lists, .g6 for graph6.
auto load_graph(const std::filesystem::path &path) -> Graph;

} // namespace mvis::io
