#ifndef RGCOUNT_ANALYTIC_HPP
#define RGCOUNT_ANALYTIC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rgcount/bignum.hpp"

namespace rgc {

// Sparse polynomial in the edge probability p, exact integer coefficients.
// Houses the f_{k,j} family; evaluated at rational p on demand.
class PPolynomial {
 public:
  PPolynomial() = default;  // zero polynomial

  static PPolynomial monomial(unsigned exp, BigInt coeff);

  bool is_zero() const { return terms_.empty(); }
  const std::map<unsigned, BigInt>& terms() const { return terms_; }

  void add_term(unsigned exp, const BigInt& coeff);

  PPolynomial shifted(unsigned exp) const;       // multiply by p^exp
  PPolynomial scaled(const BigInt& c) const;
  friend PPolynomial operator+(const PPolynomial& a, const PPolynomial& b);

  BigRat eval(const BigRat& p) const;

  // "exp:coeff" pairs, descending exponent, e.g. "5:3 4:1"; "0" when zero.
  std::string to_string() const;

  friend bool operator==(const PPolynomial&, const PPolynomial&) = default;

 private:
  std::map<unsigned, BigInt> terms_;  // no zero coefficients stored
};

// Triangular table of the moment coefficients lambda_{k,j} (Stirling numbers
// of the second kind), built from the recurrence
//   lambda_{k+1,j} = j*lambda_{k,j} + lambda_{k,j-1},  lambda_{1,1} = 1,
// with lambda_{k,0} = lambda_{k,k+1} = 0.
class StirlingTable {
 public:
  explicit StirlingTable(unsigned k_max = 0) { ensure(k_max); }

  void ensure(unsigned k_max);
  unsigned k_max() const { return static_cast<unsigned>(rows_.size()); }

  // lambda_{k,j}; zero outside 1 <= j <= k. Requires k <= k_max().
  const BigInt& coeff(unsigned k, unsigned j) const;

 private:
  std::vector<std::vector<BigInt>> rows_;  // rows_[k-1][j-1], j = 1..k
  BigInt zero_ = 0;
};

// Inclusion-exclusion closed form (1/j!) sum_{i=0}^{j} (-1)^i C(j,i) (j-i)^k;
// agrees with the recurrence table entry for all 1 <= j <= k.
BigInt stirling_closed(unsigned k, unsigned j);

// E[X^k] for X ~ Binomial(n,p): sum_{j=1}^{k} lambda_{k,j} p^j (n)_j.
BigRat binomial_moment_closed(std::size_t n, unsigned k, const BigRat& p);

// Verifies, in exact arithmetic,
//   sum_{m=j}^{n} m (m)_j C(n,m) p^m (1-p)^{n-m}
//     = j (n)_j p^j + (n)_{j+1} p^{j+1}.
bool factorial_moment_identity_check(std::size_t n, unsigned j, const BigRat& p);

// Memoized tables for the lambda coefficients and the f_{k,j} polynomials.
// Construction is single-threaded; a completed context is immutable and
// safe to share.
class AnalyticContext {
 public:
  explicit AnalyticContext(unsigned k_max);

  unsigned k_max() const { return k_max_; }
  const StirlingTable& stirling() const { return stirling_; }

  // f_{k,j}; the zero polynomial outside the band k <= j <= 2k-1.
  // Base: f_{2,2} = p, f_{2,3} = p^2.
  // Step: f_{k+1,j} = p^{j-1} ((j-1) f_{k,j-1} + f_{k,j-2}).
  const PPolynomial& fpoly(unsigned k, unsigned j) const;

  // N(k,l,p) = sum_{j=k}^{2k-1} l (l)_j f_{k,j}(p).
  BigRat nesting(unsigned k, std::size_t ell, const BigRat& p) const;

  // crr of the single-clique estimator: N(k,n,p) / ((n)_k p^C(k,2))^2.
  // Throws std::domain_error when (n)_k = 0 or p = 0.
  BigRat crr_clique(unsigned k, std::size_t n, const BigRat& p) const;

  // Per-clique ratio at residual size l = n - k(i-1), both numerator and
  // denominator on the same residual: N(k,l,p) / ((l)_k p^C(k,2))^2.
  BigRat crr_cover_step(unsigned k, std::size_t ell, const BigRat& p) const;

  // The literal mixed-offset indexing (numerator residual n-ki+k, denominator
  // residual n-ki), kept for comparison; degenerate at the last step i = n/k,
  // where (n-ki)_k = 0 raises domain_error.
  BigRat crr_cover_step_literal(unsigned k, std::size_t n, unsigned i, const BigRat& p) const;

  // Product of per-clique ratios over i = 1..n/k. Requires k | n.
  BigRat crr_cover_total(unsigned k, std::size_t n, const BigRat& p,
                         bool literal_indexing = false) const;

 private:
  unsigned k_max_;
  StirlingTable stirling_;
  std::vector<std::vector<PPolynomial>> f_;  // f_[k][j-k] for j in [k, 2k-1]
  PPolynomial zero_;
};

// Convenience wrappers that build a just-big-enough context per call.
PPolynomial f_polynomial(unsigned k, unsigned j);
BigRat nesting_closed(unsigned k, std::size_t ell, const BigRat& p);
BigRat crr_clique(unsigned k, std::size_t n, const BigRat& p);
BigRat crr_cover_step(unsigned k, std::size_t ell, const BigRat& p);
BigRat crr_cover_total(unsigned k, std::size_t n, const BigRat& p, bool literal_indexing = false);

// Point fit of the cover-step envelope constant at ell_fit:
// C = (crr_cover_step(k,ell_fit,p) - 1) * (ell_fit - k + 1).
BigRat fit_cover_step_constant(unsigned k, const BigRat& p, std::size_t ell_fit);

// h(i) = ((l-k)/(l-1))^{k-i-1} * (k^2/(l-k+1) * (1/p)^{k-(i+1)/2})^i.
// Bound diagnostic, double precision.
double h_bound(unsigned k, unsigned i, std::size_t ell, double p);

// Exact check of f_{k,2k-i-1}(p) <= k^{2i} p^{C(k,2)+C(k-i,2)}; equality at i=0.
bool f_upper_bound_check(unsigned k, unsigned i, const BigRat& p);

// g(i) = 2i log_{1/p} k - i log_{1/p}(n-k+1) + ki - i(i+1)/2
// with k = (1+eps_n) log_{1/p} n. Exponent diagnostic for locating the peak
// of h(i); requires p in (0,1).
double g_exponent(double n, double i, double eps_n, double p);

}  // namespace rgc

#endif
