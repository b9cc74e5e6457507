#ifndef RGCOUNT_GRAPH_IO_HPP
#define RGCOUNT_GRAPH_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rgcount/graph.hpp"

namespace rgc {

// Malformed input; what() names the offending line.
class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list format: first line "n m", then m lines "u v" (ASCII decimal,
// newline-terminated). Edges are written with u < v, sorted
// lexicographically. Loading accepts edges in any order and either endpoint
// order, but rejects duplicates and self-loops.
Graph read_graph(std::istream& in, const std::string& name = "<stream>");
void write_graph(const Graph& g, std::ostream& out);

Graph load_graph(const std::string& path);
void save_graph(const Graph& g, const std::string& path);

}  // namespace rgc

#endif
