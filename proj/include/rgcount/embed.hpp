#ifndef RGCOUNT_EMBED_HPP
#define RGCOUNT_EMBED_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rgcount/bignum.hpp"
#include "rgcount/graph.hpp"
#include "rgcount/rng.hpp"
#include "rgcount/scaled_value.hpp"

namespace rgc {

// One estimator run. The product of the recorded step factors equals the raw
// estimate before symmetry division; on success the chosen vertices are
// pairwise adjacent (clique case) resp. a full cover (cover case).
struct EmbedTrace {
  bool success = false;
  std::vector<Vertex> chosen;            // in the input graph's labels
  std::vector<std::uint64_t> factors;    // X_i = |choice set| per step
  ScaledValue raw;                       // prod factors; ZERO on failure
  ScaledValue estimate;                  // raw / symmetry divisor; ZERO on failure
};

// Uniform random choice driven by an Rng.
struct RngChooser {
  Rng& rng;
  std::size_t pick(std::size_t n_choices) {
    return static_cast<std::size_t>(rng.below(n_choices));
  }
};

namespace detail {

inline ScaledValue raw_product(const std::vector<std::uint64_t>& factors, ValueMode mode) {
  if (mode == ValueMode::Exact) {
    BigInt prod = 1;
    for (auto f : factors) prod *= BigInt(f);
    return ScaledValue::from_integer(prod);
  }
  double lg = 0.0;
  for (auto f : factors) lg += std::log(static_cast<double>(f));
  return ScaledValue::from_log(lg);
}

// Grows one clique inside g; appends step factors/vertices, returns false
// when some choice set comes up empty.
template <class Chooser>
bool grow_clique(const Graph& g, unsigned k, Chooser& choose, std::vector<Vertex>& chosen,
                 std::vector<std::uint64_t>& factors) {
  VertexSet members(g.vertex_count());
  for (unsigned i = 0; i < k; ++i) {
    const VertexSet candidates = common_neighbors(g, members);
    const std::size_t count = candidates.count();
    if (count == 0) return false;
    factors.push_back(count);
    const auto v = static_cast<Vertex>(candidates.select(choose.pick(count)));
    members.set(v);
    chosen.push_back(v);
  }
  return true;
}

}  // namespace detail

// Single run of the clique estimator: at step i the choice set is the common
// neighborhood of the vertices chosen so far (all of V at step 0), X_i its
// size, and the next vertex uniform in it. Raw estimate prod X_i; the clique
// estimate divides by k!. Over the chooser's randomness the expectation of
// the estimate equals the number of k-cliques of g, for every fixed g.
template <class Chooser>
EmbedTrace embed_clique_once(const Graph& g, unsigned k, Chooser&& choose,
                             ValueMode mode = ValueMode::Log) {
  EmbedTrace trace;
  if (k > g.vertex_count()) return trace;  // no k-clique can exist
  if (!detail::grow_clique(g, k, choose, trace.chosen, trace.factors)) return trace;
  trace.success = true;
  trace.raw = detail::raw_product(trace.factors, mode);
  trace.estimate = trace.raw.divided_by(factorial(k));
  return trace;
}

// Single run of the cover estimator: embeds cliques of size k sequentially,
// removing each embedded clique from the residual graph; raw products carry
// no per-clique division. On full success the estimate is
// prod X_i / a with a = (k!)^{n/k} (n/k)!, the number of ordered embedding
// sequences per unordered cover; expectation equals the number of unordered
// partitions of V into k-cliques. Requires k | n.
template <class Chooser>
EmbedTrace embed_cover_once(const Graph& g, unsigned k, Chooser&& choose,
                            ValueMode mode = ValueMode::Log) {
  const std::size_t n = g.vertex_count();
  if (k == 0 || n % k != 0)
    throw std::invalid_argument("cover estimator requires k | n");

  EmbedTrace trace;
  Graph residual = g;
  std::vector<Vertex> to_original(n);
  for (std::size_t v = 0; v < n; ++v) to_original[v] = static_cast<Vertex>(v);

  for (std::size_t round = 0; round < n / k; ++round) {
    std::vector<Vertex> block;
    if (!detail::grow_clique(residual, k, choose, block, trace.factors)) return trace;
    VertexSet block_set(residual.vertex_count());
    for (Vertex v : block) {
      trace.chosen.push_back(to_original[v]);
      block_set.set(v);
    }
    VertexRemoval removed = remove_vertices(residual, block_set);
    std::vector<Vertex> next_map(removed.original.size());
    for (std::size_t i = 0; i < removed.original.size(); ++i)
      next_map[i] = to_original[removed.original[i]];
    residual = std::move(removed.graph);
    to_original = std::move(next_map);
  }

  trace.success = true;
  trace.raw = detail::raw_product(trace.factors, mode);
  const BigInt divisor =
      int_pow(factorial(k), static_cast<unsigned>(n / k)) * factorial(static_cast<unsigned>(n / k));
  trace.estimate = trace.raw.divided_by(divisor);
  return trace;
}

inline EmbedTrace embed_clique_once(const Graph& g, unsigned k, Rng& rng,
                                    ValueMode mode = ValueMode::Log) {
  RngChooser chooser{rng};
  return embed_clique_once(g, k, chooser, mode);
}

inline EmbedTrace embed_cover_once(const Graph& g, unsigned k, Rng& rng,
                                   ValueMode mode = ValueMode::Log) {
  RngChooser chooser{rng};
  return embed_cover_once(g, k, chooser, mode);
}

}  // namespace rgc

#endif
