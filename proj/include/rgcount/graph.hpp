#ifndef RGCOUNT_GRAPH_HPP
#define RGCOUNT_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "rgcount/bignum.hpp"
#include "rgcount/bitset.hpp"
#include "rgcount/rng.hpp"

namespace rgc {

using Vertex = std::uint32_t;

// A set of vertex indices of one graph; members lie in [0, n).
using VertexSet = Bitset;

// Immutable undirected simple graph on vertices 0..n-1. Adjacency is stored
// as one bit row per vertex (symmetric, irreflexive), so set intersections
// run word-parallel. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  // Validates: no self-loops, indices in range, no duplicate edges.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  bool has_edge(Vertex u, Vertex v) const { return adj_[u].test(v); }
  const Bitset& neighbors(Vertex v) const { return adj_[v]; }

  // Edges as (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph complement() const;

 private:
  friend Graph gnp_from_rng(std::size_t n, const BigRat& p, Rng& rng);

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<Bitset> adj_;
};

struct GenSpec {
  std::size_t n = 0;
  BigRat p;  // edge probability, rational in [0, 1]
  std::uint64_t seed = 0;
};

// G(n,p): each of the C(n,2) unordered pairs is an edge independently with
// probability p, driven deterministically by spec.seed.
Graph generate_gnp(const GenSpec& spec);

// Same, but drawing from a caller-provided stream (one u64 per vertex pair,
// pairs in lexicographic order).
Graph gnp_from_rng(std::size_t n, const BigRat& p, Rng& rng);

// Intersection of the neighborhoods of `chosen`, minus `chosen` itself.
// The empty set returns all n vertices: the empty intersection convention
// that makes the first embedding step uniform over V.
VertexSet common_neighbors(const Graph& g, const VertexSet& chosen);

struct VertexRemoval {
  Graph graph;                    // induced subgraph on V \ s, densely re-indexed
  std::vector<Vertex> original;   // new index -> original label
};

VertexRemoval remove_vertices(const Graph& g, const VertexSet& s);

}  // namespace rgc

#endif
