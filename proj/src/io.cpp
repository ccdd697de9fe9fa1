#include "mvis/io.hpp"

#include "mvis/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mvis::io {

namespace {

constexpr int kBias = 63;
constexpr int kShortMax = 62;

auto trim(std::string_view s) -> std::string_view
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

} // namespace

auto write_edge_list(const Graph &g) -> std::string
{
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges())
    out << u << ' ' << v << '\n';
  return out.str();
}

auto read_edge_list(std::string_view text) -> Graph
{
  std::istringstream in{std::string(text)};
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0)
    throw IoError("edge list: expected header 'n m'");
  if (n > kMaxVertices)
    throw CeilingError("edge list: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  std::vector<Edge> edges;
  for (long long e = 0; e < m; ++e) {
    long long u = 0, v = 0;
    if (!(in >> u >> v))
      throw IoError("edge list: expected " + std::to_string(m) + " edges, got " + std::to_string(e));
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw IoError("edge list: invalid edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string rest;
  if (in >> rest)
    throw IoError("edge list: trailing content '" + rest + "'");
  Graph g(static_cast<int>(n), edges);
  if (g.size() != m)
    throw IoError("edge list: duplicate edges");
  return g;
}

auto write_graph6(const Graph &g) -> std::string
{
  int n = g.order();
  std::string out;
  if (n <= kShortMax) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
  int acc = 0, bits = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = bits = 0;
      }
    }
  if (bits > 0)
    out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

auto read_graph6(std::string_view text) -> Graph
{
  text = trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header)
    text.remove_prefix(header.size());
  if (text.empty())
    throw IoError("graph6: empty input");
  for (char c : text)
    if (c < kBias || c > 126)
      throw IoError("graph6: byte out of range");

  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - kBias;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126)
      throw IoError("graph6: unsupported order encoding");
    n = ((text[1] - kBias) << 12) | ((text[2] - kBias) << 6) | (text[3] - kBias);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw CeilingError("graph6: order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t need = (pairs + 5) / 6;
  if (text.size() - pos != need)
    throw IoError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                  std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++k) {
      int byte = text[pos + k / 6] - kBias;
      if ((byte >> (5 - k % 6)) & 1)
        edges.push_back({u, v});
    }
  return Graph(n, edges);
}

auto load_graph(const std::filesystem::path &path) -> Graph
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open '" + path.string() + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto ext = path.extension().string();
  if (ext == ".g6")
    return read_graph6(buffer.str());
  if (ext == ".el")
    return read_edge_list(buffer.str());
  throw IoError("unknown graph file extension '" + ext + "' (expected .el or .g6)");
}

} // namespace mvis::io
