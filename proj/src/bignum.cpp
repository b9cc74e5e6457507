#include "rgcount/bignum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rgc {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt falling_factorial(std::int64_t n, unsigned j) {
  BigInt r = 1;
  for (unsigned i = 0; i < j; ++i) r *= BigInt(n - static_cast<std::int64_t>(i));
  return r;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= BigInt(n - k + i);
    r /= BigInt(i);  // exact at every step: r is C(n-k+i, i)
  }
  return r;
}

BigInt double_factorial_odd(unsigned m) {
  BigInt r = 1;
  for (unsigned i = 1; i <= m; ++i) r *= BigInt(2 * i - 1);
  return r;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

BigRat rat_pow(const BigRat& base, unsigned exp) {
  BigRat r = 1, b = base;
  for (unsigned e = exp; e != 0; e >>= 1) {
    if (e & 1u) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

double log_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_big: argument must be positive");
  const unsigned bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const unsigned shift = bits - 64;
  const double top = BigInt(x >> shift).convert_to<double>();
  return std::log(top) + static_cast<double>(shift) * std::numbers::ln2;
}

double log_big(const BigRat& x) {
  return log_big(numerator(x)) - log_big(denominator(x));
}

std::string rat_str(const BigRat& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

BigInt parse_int(std::string s, const std::string& full) {
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s.erase(0, 1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not a rational: '" + full + "'");
  BigInt v(s);
  return neg ? -v : v;
}

}  // namespace

BigRat parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(0, s.find_first_not_of(" \t"));
  const auto last = s.find_last_not_of(" \t");
  s.erase(last == std::string::npos ? 0 : last + 1);
  if (s.empty()) throw std::invalid_argument("not a rational: ''");

  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const BigInt num = parse_int(s.substr(0, slash), text);
    const BigInt den = parse_int(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
    return BigRat(num, den);
  }
  if (const auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot), frac = s.substr(dot + 1);
    bool neg = false;
    if (!head.empty() && (head[0] == '-' || head[0] == '+')) {
      neg = head[0] == '-';
      head.erase(0, 1);
    }
    if (head.empty()) head = "0";
    if (!all_digits(head) || !all_digits(frac))
      throw std::invalid_argument("not a rational: '" + text + "'");
    BigInt num = BigInt(head) * int_pow(10, static_cast<unsigned>(frac.size())) + BigInt(frac);
    BigRat q(num, int_pow(10, static_cast<unsigned>(frac.size())));
    return neg ? -q : q;
  }
  return BigRat(parse_int(s, text));
}

}  // namespace rgc
