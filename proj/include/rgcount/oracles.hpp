#ifndef RGCOUNT_ORACLES_HPP
#define RGCOUNT_ORACLES_HPP

#include "rgcount/bignum.hpp"
#include "rgcount/graph.hpp"

namespace rgc {

// Brute-force exact counters. Everything here is exact integer/rational
// arithmetic; these define ground truth for the sampling estimators and the
// closed-form identities, so they deliberately take the slow literal route.

// Number of k-subsets of V inducing complete subgraphs (ordered backtracking
// over sorted candidate sets). Feasible around n <= 40, k <= 8; no hard cap.
BigInt count_cliques_exact(const Graph& g, unsigned k);

// = count_cliques_exact(complement(g), k).
BigInt count_independent_sets_exact(const Graph& g, unsigned k);

// Number of partitions of V into n/k blocks each inducing a k-clique,
// by canonical extension (always place the lowest-indexed uncovered vertex).
// Throws std::invalid_argument unless k divides n.
BigInt count_clique_covers_exact(const Graph& g, unsigned k);

// Rough node-count predictor for the counters above; the CLI warns when it
// exceeds the configured budget.
double predicted_clique_work(std::size_t n, unsigned k);

// E[X^k] for X ~ Binomial(n,p), as the literal defining sum
// sum_{i=0}^{n} i^k C(n,i) p^i (1-p)^{n-i}.
BigRat binomial_moment_bruteforce(std::size_t n, unsigned k, const BigRat& p);

// The k-nesting N(k,n,p) evaluated from its recursive definition, memoized
// over (k,i):
//   N(2,n,p) = n^2 sum_{i=1}^{n-1} i^2 C(n-1,i) p^i (1-p)^{n-1-i}
//   N(k,n,p) = n^2 sum_{i=k-1}^{n-1} N(k-1,i,p) C(n-1,i) p^i (1-p)^{n-1-i}
BigRat nesting_bruteforce(unsigned k, std::size_t n, const BigRat& p);

}  // namespace rgc

#endif
