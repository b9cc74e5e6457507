#ifndef RGCOUNT_BIGNUM_HPP
#define RGCOUNT_BIGNUM_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace rgc {

// Exact arithmetic used by the oracles and the analytic engine. All identity
// checks are done on these types; doubles appear only in bounds/diagnostics.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(unsigned n);

// Falling factorial (n)_j = n(n-1)...(n-j+1); (n)_0 = 1, and 0 when j > n >= 0.
BigInt falling_factorial(std::int64_t n, unsigned j);

BigInt binomial(std::uint64_t n, std::uint64_t k);

// (2m-1)!! = (2m)! / (2^m m!), the number of perfect matchings of K_{2m}.
BigInt double_factorial_odd(unsigned m);

BigInt int_pow(const BigInt& base, unsigned exp);
BigRat rat_pow(const BigRat& base, unsigned exp);

// Natural log of a huge positive value without overflowing double.
double log_big(const BigInt& x);
double log_big(const BigRat& x);

// "num/den", or just "num" for integers.
std::string rat_str(const BigRat& q);

// Accepts "3", "-2", "2/5", "0.125". Throws std::invalid_argument on junk.
BigRat parse_rational(const std::string& text);

}  // namespace rgc

#endif
