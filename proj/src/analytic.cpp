#include "rgcount/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace rgc {

PPolynomial PPolynomial::monomial(unsigned exp, BigInt coeff) {
  PPolynomial p;
  if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
  return p;
}

void PPolynomial::add_term(unsigned exp, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

PPolynomial PPolynomial::shifted(unsigned exp) const {
  PPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + exp, c);
  return out;
}

PPolynomial PPolynomial::scaled(const BigInt& c) const {
  PPolynomial out;
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

PPolynomial operator+(const PPolynomial& a, const PPolynomial& b) {
  PPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

BigRat PPolynomial::eval(const BigRat& p) const {
  BigRat total = 0;
  for (const auto& [e, c] : terms_) total += BigRat(c) * rat_pow(p, e);
  return total;
}

std::string PPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += std::to_string(it->first) + ":" + it->second.str();
  }
  return out;
}

void StirlingTable::ensure(unsigned k_max) {
  if (rows_.empty() && k_max >= 1) rows_.push_back({BigInt(1)});  // lambda_{1,1} = 1
  while (rows_.size() < k_max) {
    const auto& prev = rows_.back();
    const unsigned k = static_cast<unsigned>(rows_.size());  // building row k+1
    std::vector<BigInt> row(k + 1);
    for (unsigned j = 1; j <= k + 1; ++j) {
      const BigInt above = j <= k ? prev[j - 1] : BigInt(0);
      const BigInt left = j >= 2 ? prev[j - 2] : BigInt(0);
      row[j - 1] = BigInt(j) * above + left;
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& StirlingTable::coeff(unsigned k, unsigned j) const {
  if (k == 0 || k > rows_.size()) throw std::out_of_range("StirlingTable: k beyond capacity");
  if (j < 1 || j > k) return zero_;
  return rows_[k - 1][j - 1];
}

BigInt stirling_closed(unsigned k, unsigned j) {
  if (j < 1 || j > k) return 0;
  BigInt s = 0;
  for (unsigned i = 0; i <= j; ++i) {
    const BigInt term = binomial(j, i) * int_pow(BigInt(j - i), k);
    s += (i % 2 == 0) ? term : -term;
  }
  const BigInt f = factorial(j);
  if (s % f != 0) throw std::logic_error("stirling_closed: sum not divisible by j!");
  return s / f;
}

BigRat binomial_moment_closed(std::size_t n, unsigned k, const BigRat& p) {
  if (k == 0) return 1;
  StirlingTable table(k);
  BigRat total = 0;
  for (unsigned j = 1; j <= k; ++j)
    total += BigRat(table.coeff(k, j) * falling_factorial(static_cast<std::int64_t>(n), j)) *
             rat_pow(p, j);
  return total;
}

bool factorial_moment_identity_check(std::size_t n, unsigned j, const BigRat& p) {
  const BigRat q = BigRat(1) - p;
  const auto sn = static_cast<std::int64_t>(n);
  BigRat lhs = 0;
  for (std::size_t m = j; m <= n; ++m)
    lhs += BigRat(BigInt(m) * falling_factorial(static_cast<std::int64_t>(m), j) *
                  binomial(n, m)) *
           rat_pow(p, static_cast<unsigned>(m)) * rat_pow(q, static_cast<unsigned>(n - m));
  const BigRat rhs = BigRat(BigInt(j) * falling_factorial(sn, j)) * rat_pow(p, j) +
                     BigRat(falling_factorial(sn, j + 1)) * rat_pow(p, j + 1);
  return lhs == rhs;
}

AnalyticContext::AnalyticContext(unsigned k_max) : k_max_(k_max < 2 ? 2 : k_max) {
  stirling_.ensure(k_max_);
  f_.resize(k_max_ + 1);
  f_[2] = {PPolynomial::monomial(1, 1), PPolynomial::monomial(2, 1)};  // f_{2,2}, f_{2,3}
  for (unsigned k = 3; k <= k_max_; ++k) {
    f_[k].resize(k);  // j = k .. 2k-1
    for (unsigned j = k; j <= 2 * k - 1; ++j) {
      const PPolynomial& a = fpoly(k - 1, j - 1);
      const PPolynomial& b = fpoly(k - 1, j - 2);
      f_[k][j - k] = (a.scaled(j - 1) + b).shifted(j - 1);
    }
  }
}

const PPolynomial& AnalyticContext::fpoly(unsigned k, unsigned j) const {
  if (k < 2 || k > k_max_) throw std::out_of_range("AnalyticContext: k beyond capacity");
  if (j < k || j > 2 * k - 1) return zero_;
  return f_[k][j - k];
}

BigRat AnalyticContext::nesting(unsigned k, std::size_t ell, const BigRat& p) const {
  const auto sl = static_cast<std::int64_t>(ell);
  BigRat total = 0;
  for (unsigned j = k; j <= 2 * k - 1; ++j)
    total += BigRat(BigInt(ell) * falling_factorial(sl, j)) * fpoly(k, j).eval(p);
  return total;
}

namespace {

BigRat squared_mean(unsigned k, std::size_t ell, const BigRat& p) {
  const BigInt fk = falling_factorial(static_cast<std::int64_t>(ell), k);
  if (fk == 0 || p == 0)
    throw std::domain_error("critical ratio undefined: (l)_k = 0 or p = 0");
  const BigRat mean = BigRat(fk) * rat_pow(p, k * (k - 1) / 2);
  return mean * mean;
}

}  // namespace

BigRat AnalyticContext::crr_clique(unsigned k, std::size_t n, const BigRat& p) const {
  return nesting(k, n, p) / squared_mean(k, n, p);
}

BigRat AnalyticContext::crr_cover_step(unsigned k, std::size_t ell, const BigRat& p) const {
  return nesting(k, ell, p) / squared_mean(k, ell, p);
}

BigRat AnalyticContext::crr_cover_step_literal(unsigned k, std::size_t n, unsigned i,
                                               const BigRat& p) const {
  const std::size_t ki = static_cast<std::size_t>(k) * i;
  if (ki > n) throw std::domain_error("literal cover step: ki exceeds n");
  return nesting(k, n - ki + k, p) / squared_mean(k, n - ki, p);
}

BigRat AnalyticContext::crr_cover_total(unsigned k, std::size_t n, const BigRat& p,
                                        bool literal_indexing) const {
  if (k == 0 || n % k != 0)
    throw std::invalid_argument("cover crr requires k | n");
  BigRat total = 1;
  for (unsigned i = 1; i <= n / k; ++i) {
    total *= literal_indexing ? crr_cover_step_literal(k, n, i, p)
                              : crr_cover_step(k, n - static_cast<std::size_t>(k) * (i - 1), p);
  }
  return total;
}

PPolynomial f_polynomial(unsigned k, unsigned j) {
  if (k < 2) throw std::invalid_argument("f_polynomial requires k >= 2");
  return AnalyticContext(k).fpoly(k, j);
}

BigRat nesting_closed(unsigned k, std::size_t ell, const BigRat& p) {
  return AnalyticContext(k).nesting(k, ell, p);
}

BigRat crr_clique(unsigned k, std::size_t n, const BigRat& p) {
  return AnalyticContext(k).crr_clique(k, n, p);
}

BigRat crr_cover_step(unsigned k, std::size_t ell, const BigRat& p) {
  return AnalyticContext(k).crr_cover_step(k, ell, p);
}

BigRat crr_cover_total(unsigned k, std::size_t n, const BigRat& p, bool literal_indexing) {
  return AnalyticContext(k).crr_cover_total(k, n, p, literal_indexing);
}

BigRat fit_cover_step_constant(unsigned k, const BigRat& p, std::size_t ell_fit) {
  return (crr_cover_step(k, ell_fit, p) - 1) *
         BigRat(BigInt(static_cast<std::int64_t>(ell_fit) - static_cast<std::int64_t>(k) + 1));
}

double h_bound(unsigned k, unsigned i, std::size_t ell, double p) {
  if (i >= k) throw std::invalid_argument("h_bound requires 0 <= i <= k-1");
  const double l = static_cast<double>(ell);
  const double first = std::pow((l - k) / (l - 1), static_cast<double>(k - i - 1));
  const double inner = static_cast<double>(k) * k / (l - k + 1) *
                       std::pow(1.0 / p, static_cast<double>(k) - (i + 1) / 2.0);
  return first * std::pow(inner, static_cast<double>(i));
}

bool f_upper_bound_check(unsigned k, unsigned i, const BigRat& p) {
  if (i >= k) throw std::invalid_argument("f_upper_bound_check requires 0 <= i <= k-1");
  const BigRat lhs = f_polynomial(k, 2 * k - i - 1).eval(p);
  const unsigned exp = k * (k - 1) / 2 + (k - i) * (k - i - 1) / 2;
  const BigRat rhs = BigRat(int_pow(BigInt(k), 2 * i)) * rat_pow(p, exp);
  return lhs <= rhs;
}

double g_exponent(double n, double i, double eps_n, double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("g_exponent requires p in (0,1)");
  const double base = std::log(1.0 / p);
  const auto log_b = [base](double x) { return std::log(x) / base; };
  const double k = (1.0 + eps_n) * log_b(n);
  return 2.0 * i * log_b(k) - i * log_b(n - k + 1.0) + k * i - i * (i + 1.0) / 2.0;
}

}  // namespace rgc
