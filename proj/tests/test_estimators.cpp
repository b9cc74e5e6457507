#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "rgcount/analytic.hpp"
#include "rgcount/estimate.hpp"
#include "rgcount/oracles.hpp"
#include "rgcount/scaled_value.hpp"
#include "support/exhaustive.hpp"

using namespace rgc;
using rgc::testing::exhaustive_clique_expectation;
using rgc::testing::exhaustive_cover_expectation;

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

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, static_cast<Vertex>(u + 1));
  return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("scaled values") {
  const ScaledValue z = ScaledValue::zero();
  CHECK(z.is_zero());
  CHECK((z * ScaledValue::from_count(5)).is_zero());

  const ScaledValue a = ScaledValue::from_integer(BigInt(12));
  CHECK(a.exact_value() == 12);
  CHECK(a.log_value() == doctest::Approx(std::log(12.0)));
  CHECK(a.divided_by(4).exact_value() == 3);

  // sums are order-independent to tolerance, and skip zeros
  Rng rng(7);
  std::vector<ScaledValue> vals;
  for (int i = 0; i < 200; ++i) {
    if (i % 7 == 0)
      vals.push_back(ScaledValue::zero());
    else
      vals.push_back(ScaledValue::from_log(static_cast<double>(rng.below(2000)) - 1000.0));
  }
  const double fwd = ScaledValue::sum(vals).log_value();
  std::reverse(vals.begin(), vals.end());
  const double rev = ScaledValue::sum(vals).log_value();
  CHECK(std::abs(fwd - rev) <= 1e-9 * std::max(1.0, std::abs(fwd)));

  // exact mode sums are exact
  std::vector<ScaledValue> ex{ScaledValue::from_rational(BigRat(1, 3)),
                              ScaledValue::from_rational(BigRat(1, 6)), ScaledValue::zero()};
  CHECK(ScaledValue::sum(ex).exact_value() == BigRat(1, 2));

  // ZERO is the unique representation of 0
  CHECK(ScaledValue::from_integer(BigInt(0)).is_zero());
}

TEST_CASE("embed_clique_once on complete and empty graphs") {
  const Graph k5 = complete_graph(5);
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = Rng::substream(3, s);
    const EmbedTrace t = embed_clique_once(k5, 3, rng, ValueMode::Exact);
    REQUIRE(t.success);
    CHECK(t.factors == std::vector<std::uint64_t>{5, 4, 3});
    CHECK(t.estimate.exact_value() == 10);
    // chosen vertices pairwise adjacent
    for (std::size_t a = 0; a < t.chosen.size(); ++a)
      for (std::size_t b = a + 1; b < t.chosen.size(); ++b)
        CHECK(k5.has_edge(t.chosen[a], t.chosen[b]));
  }

  const Graph empty6 = generate_gnp({6, BigRat(0), 1});
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = Rng::substream(4, s);
    const EmbedTrace t = embed_clique_once(empty6, 2, rng);
    CHECK(!t.success);
    CHECK(t.estimate.is_zero());
  }

  // k > n fails immediately
  Rng rng(1);
  CHECK(embed_clique_once(complete_graph(3), 4, rng).estimate.is_zero());
}

TEST_CASE("embed on a 2-regular graph is deterministic for k=2") {
  const Graph c5 = cycle_graph(5);
  for (std::uint64_t s = 0; s < 20; ++s) {
    Rng rng = Rng::substream(9, s);
    const EmbedTrace t = embed_clique_once(c5, 2, rng, ValueMode::Exact);
    REQUIRE(t.success);  // success probability 1: every vertex has degree 2
    CHECK(t.estimate.exact_value() == 5);
  }
}

TEST_CASE("embed_cover_once on complete graphs") {
  const Graph k4 = complete_graph(4);
  for (std::uint64_t s = 0; s < 10; ++s) {
    Rng rng = Rng::substream(5, s);
    const EmbedTrace t = embed_cover_once(k4, 2, rng, ValueMode::Exact);
    REQUIRE(t.success);
    CHECK(t.raw.exact_value() == 24);
    CHECK(t.estimate.exact_value() == 3);
  }
  const Graph k6 = complete_graph(6);
  Rng rng(8);
  const EmbedTrace t = embed_cover_once(k6, 3, rng, ValueMode::Exact);
  CHECK(t.raw.exact_value() == 720);
  CHECK(t.estimate.exact_value() == 10);

  CHECK_THROWS_AS(embed_cover_once(complete_graph(5), 2, rng), std::invalid_argument);
}

TEST_CASE("exhaustive expectation equals the exact count (cliques)") {
  for (std::uint64_t seed = 21; seed <= 26; ++seed) {
    const Graph g = generate_gnp({8, BigRat(1, 2), seed});
    for (unsigned k = 2; k <= 4; ++k) {
      const auto ex = exhaustive_clique_expectation(g, k);
      CHECK(ex.expectation == BigRat(count_cliques_exact(g, k)));
      // support correctness: positive success probability iff a k-clique exists
      CHECK((ex.success_probability > 0) == (count_cliques_exact(g, k) > 0));
    }
  }
}

TEST_CASE("exhaustive expectation equals the exact count (covers)") {
  const BigRat p(3, 5);
  for (std::uint64_t seed = 31; seed <= 33; ++seed) {
    const Graph g = generate_gnp({6, p, seed});
    const auto ex = exhaustive_cover_expectation(g, 2);
    CHECK(ex.expectation == BigRat(count_clique_covers_exact(g, 2)));
  }
  // unique perfect matching on the path 0-1,1-2,2-3
  const auto path = exhaustive_cover_expectation(path_graph(4), 2);
  CHECK(path.expectation == 1);
  CHECK(count_clique_covers_exact(path_graph(4), 2) == 1);
}

TEST_CASE("path P4 cover estimator mean approaches 1") {
  const Graph p4 = path_graph(4);
  SampleConfig cfg;
  cfg.epsilon = 0.2;
  cfg.delta = 0.1;
  cfg.sample_override = 20000;
  const EstimateReport rep = estimate(p4, 2, Target::Covers, cfg, 77);
  REQUIRE(!rep.point.is_zero());
  const double mean = rep.point.to_double();
  const double se = mean * std::sqrt(std::max(0.0, rep.empirical_crr - 1.0) /
                                     static_cast<double>(rep.samples));
  CHECK(std::abs(mean - 1.0) <= 5.0 * se);
}

TEST_CASE("required_samples") {
  SampleConfig cfg;
  cfg.epsilon = 0.5;
  cfg.delta = 0.5;
  cfg.rho = 1.0;
  CHECK(required_samples(cfg) == 8);

  cfg.epsilon = 0.1;
  cfg.delta = 0.05;
  cfg.rho = 10.0;
  CHECK(required_samples(cfg) == 20000);

  cfg.mode = SampleMode::MedianOfMeans;
  const SamplePlan plan = sample_plan(cfg);
  CHECK(plan.groups == 24);
  CHECK(plan.group_size == 8000);
  CHECK(plan.total == 24 * 8000);

  // monotonicity: nonincreasing in epsilon and delta, nondecreasing in rho
  SampleConfig base;
  base.rho = 3.0;
  base.mode = SampleMode::FixedCount;
  for (double e1 : {0.1, 0.2, 0.5})
    for (double e2 : {0.1, 0.2, 0.5}) {
      if (e1 > e2) continue;
      for (double d1 : {0.05, 0.2, 0.8})
        for (double d2 : {0.05, 0.2, 0.8}) {
          if (d1 > d2) continue;
          SampleConfig lo = base, hi = base;
          lo.epsilon = e2;
          lo.delta = d2;
          hi.epsilon = e1;
          hi.delta = d1;
          CHECK(required_samples(hi) >= required_samples(lo));
        }
    }
  SampleConfig more = base;
  more.epsilon = 0.3;
  more.delta = 0.3;
  base.epsilon = 0.3;
  base.delta = 0.3;
  more.rho = 7.0;
  CHECK(required_samples(more) >= required_samples(base));

  SampleConfig bad;
  bad.epsilon = 1.5;
  bad.rho = 1.0;
  CHECK_THROWS_AS(required_samples(bad), std::invalid_argument);
}

TEST_CASE("estimate on K6 is exact with zero variance") {
  const Graph k6 = complete_graph(6);
  SampleConfig cfg;
  cfg.epsilon = 0.3;
  cfg.delta = 0.2;
  cfg.rho = 2.0;
  cfg.values = ValueMode::Exact;
  const EstimateReport rep = estimate(k6, 3, Target::Cliques, cfg, 12);
  CHECK(rep.point.exact_value() == 20);
  CHECK(rep.zero_outputs == 0);
  CHECK(rep.empirical_crr == doctest::Approx(1.0));

  // complement of K6 has 20 independent 3-sets
  const EstimateReport rep2 = estimate(k6.complement(), 3, Target::IndependentSets, cfg, 12);
  CHECK(rep2.point.exact_value() == 20);
}

TEST_CASE("complement duality sample-for-sample") {
  const Graph g = generate_gnp({10, BigRat(2, 5), 63});
  SampleConfig cfg;
  cfg.sample_override = 500;
  const EstimateReport is_rep = estimate(g, 3, Target::IndependentSets, cfg, 2024);
  const EstimateReport cl_rep = estimate(g.complement(), 3, Target::Cliques, cfg, 2024);
  CHECK(is_rep.zero_outputs == cl_rep.zero_outputs);
  if (is_rep.point.is_zero()) {
    CHECK(cl_rep.point.is_zero());
  } else {
    CHECK(is_rep.point.log_value() == cl_rep.point.log_value());
  }
}

TEST_CASE("aggregation determinism") {
  const Graph g = generate_gnp({12, BigRat(1, 2), 3});
  SampleConfig cfg;
  cfg.epsilon = 0.2;
  cfg.delta = 0.2;
  cfg.model_p = BigRat(1, 2);
  const EstimateReport a = estimate(g, 3, Target::Cliques, cfg, 5);
  const EstimateReport b = estimate(g, 3, Target::Cliques, cfg, 5);
  CHECK(a.samples == b.samples);
  CHECK(a.zero_outputs == b.zero_outputs);
  CHECK(a.point.log_value() == b.point.log_value());
  CHECK(a.second_moment.log_value() == b.second_moment.log_value());
}

TEST_CASE("median-of-means runs and lands near the oracle") {
  const Graph g = generate_gnp({12, BigRat(1, 2), 3});
  SampleConfig cfg;
  cfg.epsilon = 0.15;
  cfg.delta = 0.1;
  cfg.model_p = BigRat(1, 2);
  cfg.mode = SampleMode::MedianOfMeans;
  const EstimateReport rep = estimate(g, 3, Target::Cliques, cfg, 9);
  const double oracle = count_cliques_exact(g, 3).convert_to<double>();
  REQUIRE(!rep.point.is_zero());
  CHECK(std::abs(rep.point.to_double() / oracle - 1.0) <= 0.15);
}

TEST_CASE("rho resolution") {
  SampleConfig cfg;
  CHECK_THROWS_AS(resolve_rho(cfg, Target::Cliques, 3, 12), std::invalid_argument);
  cfg.model_p = BigRat(1, 2);
  const double expect = 4.0 * (89.0 / 55.0);
  CHECK(resolve_rho(cfg, Target::Cliques, 3, 12) == doctest::Approx(expect));
  cfg.rho = 2.5;
  CHECK(resolve_rho(cfg, Target::Cliques, 3, 12) == 2.5);
}

TEST_CASE("zero outputs count toward the mean") {
  // C5 with k=3: no triangle exists, every sample is ZERO
  const Graph c5 = cycle_graph(5);
  SampleConfig cfg;
  cfg.sample_override = 64;
  const EstimateReport rep = estimate(c5, 3, Target::Cliques, cfg, 4);
  CHECK(rep.zero_outputs == 64);
  CHECK(rep.point.is_zero());

  // sparse graph, k=2: zero outputs appear yet the mean stays unbiased
  const Graph sparse = generate_gnp({10, BigRat(1, 10), 15});
  if (sparse.edge_count() > 0) {
    SampleConfig cfg2;
    cfg2.sample_override = 40000;
    const EstimateReport rep2 = estimate(sparse, 2, Target::Cliques, cfg2, 88);
    CHECK(rep2.zero_outputs > 0);
    const double mean = rep2.point.to_double();
    const double oracle = count_cliques_exact(sparse, 2).convert_to<double>();
    const double se = mean * std::sqrt(std::max(0.0, rep2.empirical_crr - 1.0) /
                                       static_cast<double>(rep2.samples));
    CHECK(std::abs(mean - oracle) <= 5.0 * se);
  }
}

TEST_CASE("second-moment law, small smoke version") {
  // E_G E_A [(prod X_i)^2] = N(k,n,p); acceptance runs the full grid.
  const std::size_t n = 8;
  const unsigned k = 2;
  const BigRat p(1, 2);
  const std::uint64_t samples = 30000;
  double m2 = 0, m4 = 0;
  for (std::uint64_t i = 0; i < samples; ++i) {
    Rng rng = Rng::substream(555, i);
    const Graph g = gnp_from_rng(n, p, rng);
    const EmbedTrace t = embed_clique_once(g, k, rng);
    double raw = 0.0;
    if (t.success) {
      raw = 1.0;
      for (auto f : t.factors) raw *= static_cast<double>(f);
    }
    m2 += raw * raw;
    m4 += raw * raw * raw * raw;
  }
  const double sp = static_cast<double>(samples);
  m2 /= sp;
  m4 /= sp;
  const double expect = nesting_closed(k, n, p).convert_to<double>();  // 896
  const double se = std::sqrt(std::max(0.0, m4 - m2 * m2) / sp);
  CHECK(std::abs(m2 - expect) <= 5.0 * se);
}
