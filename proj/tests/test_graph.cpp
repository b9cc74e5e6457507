#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "rgcount/graph.hpp"
#include "rgcount/graph_io.hpp"
#include "rgcount/rng.hpp"

using namespace rgc;

namespace {

Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u < n; ++u) {
    const Vertex v = static_cast<Vertex>((u + 1) % n);
    edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  return Graph::from_edges(n, edges);
}

VertexSet make_set(std::size_t n, std::initializer_list<std::size_t> members) {
  VertexSet s(n);
  for (auto v : members) s.set(v);
  return s;
}

}  // namespace

TEST_CASE("gnp degenerate probabilities") {
  const Graph k4 = generate_gnp({4, BigRat(1), 123});
  CHECK(k4.edge_count() == 6);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) CHECK(k4.has_edge(u, v));

  const Graph empty5 = generate_gnp({5, BigRat(0), 99});
  CHECK(empty5.edge_count() == 0);

  const Graph none = generate_gnp({0, BigRat(1, 2), 7});
  CHECK(none.vertex_count() == 0);
}

TEST_CASE("gnp determinism and edge-count concentration") {
  const GenSpec spec{1000, BigRat(1, 2), 7};
  const Graph a = generate_gnp(spec);
  const Graph b = generate_gnp(spec);
  CHECK(a.edges() == b.edges());

  // Binomial(C(1000,2), 1/2): mean N/2, sd sqrt(N/4); stay within 4 sd.
  const double pairs = 1000.0 * 999.0 / 2.0;
  const double dev = std::abs(static_cast<double>(a.edge_count()) - pairs / 2.0);
  CHECK(dev <= 4.0 * std::sqrt(pairs / 4.0));
}

TEST_CASE("gnp per-pair frequency over independent seeds") {
  const std::size_t n = 100;
  const int reps = 200;
  std::vector<int> hits(n * n, 0);
  for (int r = 0; r < reps; ++r) {
    const Graph g = generate_gnp({n, BigRat(1, 2), 1000 + static_cast<std::uint64_t>(r)});
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (g.has_edge(u, v)) ++hits[u * n + v];
  }
  std::size_t in_band = 0, pairs = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      ++pairs;
      const double freq = hits[u * n + v] / static_cast<double>(reps);
      if (freq >= 0.35 && freq <= 0.65) ++in_band;
    }
  CHECK(static_cast<double>(in_band) >= 0.99 * static_cast<double>(pairs));
}

TEST_CASE("common_neighbors basics") {
  const Graph k4 = complete_graph(4);
  CHECK(common_neighbors(k4, make_set(4, {0, 1})) == make_set(4, {2, 3}));

  const Graph empty5 = generate_gnp({5, BigRat(0), 1});
  CHECK(common_neighbors(empty5, make_set(5, {0})).none());

  // Empty chosen set: all vertices.
  CHECK(common_neighbors(k4, VertexSet(4)) == Bitset::full(4));
  const Graph g = generate_gnp({9, BigRat(1, 2), 5});
  CHECK(common_neighbors(g, VertexSet(9)) == Bitset::full(9));
}

TEST_CASE("common_neighbors disjointness and antitonicity") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 8;
    const Graph g = generate_gnp({n, BigRat(1, 2), 400 + static_cast<std::uint64_t>(trial)});
    VertexSet chosen(n), larger(n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto r = rng.below(4);
      if (r == 0) chosen.set(v);
      if (r <= 1) larger.set(v);  // chosen subset of larger
    }
    const VertexSet res_small = common_neighbors(g, chosen);
    const VertexSet res_large = common_neighbors(g, larger);

    VertexSet overlap = res_small;
    overlap &= chosen;
    CHECK(overlap.none());

    // result(larger) subset of result(chosen) \ larger
    VertexSet allowed = res_small;
    allowed.subtract(larger);
    VertexSet extra = res_large;
    extra.subtract(allowed);
    CHECK(extra.none());
  }
}

TEST_CASE("remove_vertices") {
  const Graph k4 = complete_graph(4);
  const VertexRemoval r = remove_vertices(k4, make_set(4, {0, 1}));
  CHECK(r.graph.vertex_count() == 2);
  CHECK(r.graph.edge_count() == 1);
  CHECK(r.original == std::vector<Vertex>{2, 3});

  const Graph g = generate_gnp({10, BigRat(1, 2), 11});
  const VertexRemoval id = remove_vertices(g, VertexSet(10));
  CHECK(id.graph.edges() == g.edges());

  const Graph c5 = cycle_graph(5);
  const VertexRemoval path = remove_vertices(c5, make_set(5, {0}));
  CHECK(path.graph.vertex_count() == 4);
  CHECK(path.graph.edge_count() == 3);

  // Exactly the edges with both endpoints outside s.
  const VertexSet s = make_set(10, {1, 4, 7});
  const VertexRemoval sub = remove_vertices(g, s);
  std::size_t expected = 0;
  for (const auto& [u, v] : g.edges())
    if (!s.test(u) && !s.test(v)) ++expected;
  CHECK(sub.graph.edge_count() == expected);
  for (const auto& [u, v] : sub.graph.edges())
    CHECK(g.has_edge(sub.original[u], sub.original[v]));
}

TEST_CASE("complement") {
  const Graph k6 = complete_graph(6);
  CHECK(k6.complement().edge_count() == 0);
  const Graph g = generate_gnp({12, BigRat(1, 3), 17});
  const Graph c = g.complement();
  CHECK(g.edge_count() + c.edge_count() == 66);
  for (Vertex u = 0; u < 12; ++u)
    for (Vertex v = u + 1; v < 12; ++v) CHECK(g.has_edge(u, v) != c.has_edge(u, v));
}

TEST_CASE("edge-list round trip") {
  const Graph g = generate_gnp({20, BigRat(1, 3), 31});
  std::stringstream buf;
  write_graph(g, buf);
  const Graph back = read_graph(buf);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
}

TEST_CASE("edge-list format fixtures") {
  {
    std::stringstream in("3 2\n0 1\n1 2\n");
    const Graph g = read_graph(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(!g.has_edge(0, 2));
  }
  {
    std::stringstream buf;
    write_graph(complete_graph(3), buf);
    CHECK(buf.str() == "3 3\n0 1\n0 2\n1 2\n");
  }
}

TEST_CASE("edge-list parse errors name the line") {
  const auto expect_error = [](const std::string& text, const std::string& needle) {
    std::stringstream in(text);
    try {
      read_graph(in, "input");
      FAIL_CHECK("expected parse error for: " << text);
    } catch (const GraphParseError& e) {
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_error("3 1\n0 3\n", "out of range");
  expect_error("3 1\n1 1\n", "self-loop");
  expect_error("3 2\n0 1\n0 1\n", "duplicate");
  expect_error("3 2\n0 1\n1 0\n", "duplicate");  // reversed duplicate
  expect_error("3 2\n0 1\n", "end of file");
  expect_error("3 0\n0 1\n", "trailing");
  expect_error("x y\n", "header");
  expect_error("3 1\n0 one\n", "expected edge");
}

TEST_CASE("rng substreams differ and reproduce") {
  Rng a = Rng::substream(5, 0);
  Rng b = Rng::substream(5, 1);
  Rng a2 = Rng::substream(5, 0);
  bool any_diff = false;
  for (int i = 0; i < 16; ++i) {
    const auto x = a.next_u64();
    any_diff = any_diff || x != b.next_u64();
    CHECK(x == a2.next_u64());
    (void)b;
  }
  CHECK(any_diff);

  Rng c(99);
  for (int i = 0; i < 1000; ++i) {
    const auto v = c.below(7);
    CHECK(v < 7);
  }
}
