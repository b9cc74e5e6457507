#include "rgcount/oracles.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace rgc {

namespace {

// Extend a clique one vertex at a time, candidates restricted to higher
// indices so each k-subset is visited once.
void clique_rec(const Graph& g, unsigned k, unsigned depth, std::size_t from,
                const Bitset& cand, BigInt& total) {
  if (depth + 1 == k) {
    std::size_t c = 0;
    cand.for_each([&](std::size_t v) { c += v >= from ? 1 : 0; });
    total += c;
    return;
  }
  cand.for_each([&](std::size_t v) {
    if (v < from) return;
    Bitset next = cand;
    next &= g.neighbors(static_cast<Vertex>(v));
    if (next.count() >= k - depth - 1) clique_rec(g, k, depth + 1, v + 1, next, total);
  });
}

void cover_rec(const Graph& g, unsigned k, Bitset& uncovered, BigInt& total) {
  const std::size_t v = uncovered.first();
  if (v == uncovered.size()) {  // everything covered
    ++total;
    return;
  }
  Bitset cand = uncovered;
  cand &= g.neighbors(static_cast<Vertex>(v));

  std::vector<std::size_t> block{v};
  // choose k-1 pairwise-adjacent vertices from cand, ascending
  auto extend = [&](auto&& self, std::size_t from, const Bitset& c) -> void {
    if (block.size() == k) {
      for (std::size_t u : block) uncovered.reset(u);
      cover_rec(g, k, uncovered, total);
      for (std::size_t u : block) uncovered.set(u);
      return;
    }
    c.for_each([&](std::size_t u) {
      if (u < from) return;
      Bitset next = c;
      next &= g.neighbors(static_cast<Vertex>(u));
      if (next.count() + block.size() + 1 >= k || block.size() + 1 == k) {
        block.push_back(u);
        self(self, u + 1, next);
        block.pop_back();
      }
    });
  };
  extend(extend, 0, cand);
}

}  // namespace

BigInt count_cliques_exact(const Graph& g, unsigned k) {
  const std::size_t n = g.vertex_count();
  if (k == 0) return 1;
  if (k > n) return 0;
  if (k == 1) return BigInt(n);
  BigInt total = 0;
  clique_rec(g, k, 0, 0, Bitset::full(n), total);
  return total;
}

BigInt count_independent_sets_exact(const Graph& g, unsigned k) {
  return count_cliques_exact(g.complement(), k);
}

BigInt count_clique_covers_exact(const Graph& g, unsigned k) {
  const std::size_t n = g.vertex_count();
  if (k == 0 || n % k != 0)
    throw std::invalid_argument("clique cover requires k | n (n=" + std::to_string(n) +
                                ", k=" + std::to_string(k) + ")");
  Bitset uncovered = Bitset::full(n);
  BigInt total = 0;
  cover_rec(g, k, uncovered, total);
  return total;
}

double predicted_clique_work(std::size_t n, unsigned k) {
  double w = 1.0;
  for (unsigned i = 0; i < k && i < n; ++i) w *= static_cast<double>(n - i) / (i + 1);
  return w * k;
}

BigRat binomial_moment_bruteforce(std::size_t n, unsigned k, const BigRat& p) {
  const BigRat q = BigRat(1) - p;
  BigRat total = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    // 0^0 = 1 by the usual convention, so the i=0 term only survives at k=0
    const BigInt ik = (i == 0 && k == 0) ? BigInt(1) : int_pow(BigInt(i), k);
    total += BigRat(ik * binomial(n, i)) * rat_pow(p, static_cast<unsigned>(i)) *
             rat_pow(q, static_cast<unsigned>(n - i));
  }
  return total;
}

namespace {

BigRat nesting_rec(unsigned k, std::size_t n, const BigRat& p,
                   std::map<std::pair<unsigned, std::size_t>, BigRat>& memo) {
  if (const auto it = memo.find({k, n}); it != memo.end()) return it->second;
  const BigRat q = BigRat(1) - p;
  BigRat inner = 0;
  if (k == 2) {
    for (std::size_t i = 1; i + 1 <= n; ++i)
      inner += BigRat(BigInt(i) * BigInt(i) * binomial(n - 1, i)) *
               rat_pow(p, static_cast<unsigned>(i)) * rat_pow(q, static_cast<unsigned>(n - 1 - i));
  } else {
    for (std::size_t i = k - 1; i + 1 <= n; ++i)
      inner += nesting_rec(k - 1, i, p, memo) * BigRat(binomial(n - 1, i)) *
               rat_pow(p, static_cast<unsigned>(i)) * rat_pow(q, static_cast<unsigned>(n - 1 - i));
  }
  BigRat result = BigRat(BigInt(n) * BigInt(n)) * inner;
  memo.emplace(std::make_pair(k, n), result);
  return result;
}

}  // namespace

BigRat nesting_bruteforce(unsigned k, std::size_t n, const BigRat& p) {
  if (k < 2) throw std::invalid_argument("nesting requires k >= 2");
  std::map<std::pair<unsigned, std::size_t>, BigRat> memo;
  return nesting_rec(k, n, p, memo);
}

}  // namespace rgc
