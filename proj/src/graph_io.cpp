#include "rgcount/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace rgc {

namespace {

[[noreturn]] void fail(const std::string& name, std::size_t line, const std::string& what) {
  throw GraphParseError(name + ":" + std::to_string(line) + ": " + what);
}

bool parse_u64(const std::string& tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  out = 0;
  for (char c : tok) {
    if (c < '0' || c > '9') return false;
    if (out > (~0ull - 9) / 10) return false;
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return true;
}

}  // namespace

Graph read_graph(std::istream& in, const std::string& name) {
  std::string line;
  std::size_t lineno = 0;

  auto next_tokens = [&](std::vector<std::string>& toks) -> bool {
    toks.clear();
    if (!std::getline(in, line)) return false;
    ++lineno;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return true;
  };

  std::vector<std::string> toks;
  if (!next_tokens(toks)) fail(name, 1, "empty input, expected header 'n m'");
  std::uint64_t n = 0, m = 0;
  if (toks.size() != 2 || !parse_u64(toks[0], n) || !parse_u64(toks[1], m))
    fail(name, lineno, "expected header 'n m', got '" + line + "'");

  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m);
  while (edges.size() < m) {
    if (!next_tokens(toks)) fail(name, lineno + 1, "unexpected end of file, expected " +
                                                       std::to_string(m) + " edges");
    if (toks.empty()) continue;  // tolerate blank lines
    std::uint64_t u = 0, v = 0;
    if (toks.size() != 2 || !parse_u64(toks[0], u) || !parse_u64(toks[1], v))
      fail(name, lineno, "expected edge 'u v', got '" + line + "'");
    if (u >= n) fail(name, lineno, "vertex " + std::to_string(u) + " out of range [0," +
                                       std::to_string(n) + ")");
    if (v >= n) fail(name, lineno, "vertex " + std::to_string(v) + " out of range [0," +
                                       std::to_string(n) + ")");
    if (u == v) fail(name, lineno, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  // trailing content (beyond whitespace) is an error
  while (next_tokens(toks)) {
    if (!toks.empty()) fail(name, lineno, "trailing content after " + std::to_string(m) + " edges");
  }

  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw GraphParseError(name + ": " + e.what());
  }
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError(path + ": cannot open for reading");
  return read_graph(in, path);
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);  // LF newlines everywhere
  if (!out) throw GraphParseError(path + ": cannot open for writing");
  write_graph(g, out);
  out.flush();
  if (!out) throw GraphParseError(path + ": write failed");
}

}  // namespace rgc
