#include "rgcount/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rgc {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n));
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (g.adj_[u].test(v))
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ")");
    g.adj_[u].set(v);
    g.adj_[v].set(u);
    ++g.m_;
  }
  return g;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (std::size_t u = 0; u < n_; ++u) {
    adj_[u].for_each([&](std::size_t v) {
      if (v > u) out.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
  }
  return out;  // for_each ascends, so rows come out lexicographically sorted
}

Graph Graph::complement() const {
  Graph g;
  g.n_ = n_;
  g.adj_.assign(n_, Bitset(n_));
  for (std::size_t u = 0; u < n_; ++u) {
    Bitset row = Bitset::full(n_);
    row.subtract(adj_[u]);
    row.reset(u);
    g.adj_[u] = std::move(row);
  }
  g.m_ = n_ < 2 ? 0 : n_ * (n_ - 1) / 2 - m_;
  return g;
}

Graph gnp_from_rng(std::size_t n, const BigRat& p, Rng& rng) {
  if (p < 0 || p > 1) throw std::invalid_argument("edge probability must be in [0,1]");
  // Edge iff next_u64() < floor(p * 2^64); exact at p=0 and p=1.
  const bool always = p == 1;
  std::uint64_t threshold = 0;
  if (!always) {
    const BigInt t = (numerator(p) << 64) / denominator(p);
    threshold = t.convert_to<std::uint64_t>();
  }
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      const std::uint64_t r = rng.next_u64();
      if (always || r < threshold) {
        g.adj_[u].set(v);
        g.adj_[v].set(u);
        ++g.m_;
      }
    }
  }
  return g;
}

Graph generate_gnp(const GenSpec& spec) {
  Rng rng = Rng::substream(spec.seed, 0);
  return gnp_from_rng(spec.n, spec.p, rng);
}

VertexSet common_neighbors(const Graph& g, const VertexSet& chosen) {
  Bitset acc = Bitset::full(g.vertex_count());
  chosen.for_each([&](std::size_t v) { acc &= g.neighbors(static_cast<Vertex>(v)); });
  acc.subtract(chosen);
  return acc;
}

VertexRemoval remove_vertices(const Graph& g, const VertexSet& s) {
  const std::size_t n = g.vertex_count();
  VertexRemoval out;
  out.original.reserve(n - s.count());
  std::vector<std::uint32_t> new_index(n, ~0u);
  for (std::size_t v = 0; v < n; ++v) {
    if (!s.test(v)) {
      new_index[v] = static_cast<std::uint32_t>(out.original.size());
      out.original.push_back(static_cast<Vertex>(v));
    }
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u : out.original) {
    g.neighbors(u).for_each([&](std::size_t v) {
      if (v > u && !s.test(v)) edges.emplace_back(new_index[u], new_index[v]);
    });
  }
  out.graph = Graph::from_edges(out.original.size(), edges);
  return out;
}

}  // namespace rgc
